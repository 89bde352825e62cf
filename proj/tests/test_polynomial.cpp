#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "extaff/polynomial.hpp"

using namespace extaff;

namespace {

Var omega_var(std::initializer_list<int> idx) { return Var{Family::Omega, MultiIndex(idx)}; }

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_terms = 6,
                       int max_deg = 3)
{
    Polynomial p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const auto& v : vars) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
            if (e > 0) m.push_back({v, e});
        }
        const long long c = static_cast<long long>(rng() % 11) - 5;
        p.add_term(m, Rational(c));
    }
    return p;
}

} // namespace

TEST_CASE("zero coefficients are never stored")
{
    Polynomial p = Polynomial::variable(omega_var({1}));
    p += Polynomial::variable(omega_var({1})) * Rational(-1);
    CHECK(p.is_zero());
    CHECK(p == Polynomial{});
    CHECK(Polynomial::constant(0).is_zero());
}

TEST_CASE("graded lexicographic term order")
{
    const Var x = omega_var({1});
    const Var y = omega_var({2});
    Polynomial p = Polynomial::variable(x, 2) + Polynomial::variable(x) * Polynomial::variable(y) +
                   Polynomial::variable(y) + Polynomial::constant(7);
    // ascending: 7, y, xy, x^2  (x^2 beats xy in graded lex)
    std::vector<std::string> order;
    for (const auto& [m, c] : p.terms()) {
        std::string s;
        for (const auto& [v, e] : m) s += v.str() + "^" + std::to_string(e);
        order.push_back(s);
    }
    REQUIRE(order.size() == 4);
    CHECK(order[0].empty());
    CHECK(order[1] == "omega(2)^1");
    CHECK(order[2] == "omega(1)^1omega(2)^1");
    CHECK(order[3] == "omega(1)^2");
    CHECK(p.leading_monomial() == Monomial{{x, 2}});
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(x) == 2);
}

TEST_CASE("ring laws hold exactly on random polynomials")
{
    std::mt19937_64 rng(41);
    const std::vector<Var> vars = {omega_var({1}), omega_var({2}), omega_var({3})};
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial a = random_poly(rng, vars);
        const Polynomial b = random_poly(rng, vars);
        const Polynomial c = random_poly(rng, vars);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == Polynomial{});
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("substitution composes with evaluation")
{
    std::mt19937_64 rng(43);
    const Var x = omega_var({1});
    const Var y = omega_var({2});
    const Var z = omega_var({3});
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial p = random_poly(rng, {x, y});
        const Polynomial q = random_poly(rng, {y, z});
        const Polynomial composed = p.substitute({{x, q}});
        const std::map<Var, Rational> point = {
            {x, Rational(0)}, // unused after substitution
            {y, Rational(static_cast<long long>(rng() % 7) - 3)},
            {z, Rational(static_cast<long long>(rng() % 7) - 3)},
        };
        auto with_x = point;
        with_x[x] = q.evaluate(point);
        CHECK(composed.evaluate(point) == p.evaluate(with_x));
    }
}

TEST_CASE("collect_t_powers strips the parameter and keeps the coefficients")
{
    const Var x = omega_var({1});
    const Polynomial t = Polynomial::variable(t_var());
    const Polynomial g = Polynomial::constant(3) + t * Polynomial::variable(x) +
                         t * t * Polynomial::constant(5) + t * t * t * Polynomial::variable(x, 2);
    const auto powers = g.collect_t_powers();
    REQUIRE(powers.size() == 4);
    CHECK(powers[0] == Polynomial::constant(3));
    CHECK(powers[1] == Polynomial::variable(x));
    CHECK(powers[2] == Polynomial::constant(5));
    CHECK(powers[3] == Polynomial::variable(x, 2));
    CHECK(Polynomial::constant(2).collect_t_powers().size() == 1);
    CHECK(Polynomial{}.collect_t_powers().empty());
}

TEST_CASE("restrict_to_support zeroes the other variables")
{
    const Var x = omega_var({1});
    const Var y = omega_var({2});
    const Polynomial p = Polynomial::variable(x, 2) +
                         Polynomial::variable(x) * Polynomial::variable(y) +
                         Polynomial::constant(4);
    const Polynomial q = p.restrict_to_support({x});
    CHECK(q == Polynomial::variable(x, 2) + Polynomial::constant(4));
}
