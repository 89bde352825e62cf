#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "extaff/function_spec.hpp"

using namespace extaff;

namespace {

Form random_form(std::mt19937_64& rng, int n, int k, int bound = 3)
{
    Form f(n, k);
    for (const auto& idx : enumerate(n, k))
        f.set(idx, Rational(static_cast<long long>(rng() % (2 * bound + 1)) - bound));
    return f;
}

FunctionSpec quartic_pairing_square()
{
    // f(w) = <e^{1,2,3,4} ; w^2> on 2-forms over R^4
    return FunctionSpec::single(
        4, 2, symbolic_pairing(Form::basis(4, MultiIndex{1, 2, 3, 4}), Family::Omega, 2, 2));
}

FunctionSpec star_xi_times_eta()
{
    // f(xi, eta) = (*xi) eta on Lambda^2 x Lambda^0 over R^2
    Polynomial body = Polynomial::variable(Var{Family::Xi, MultiIndex{1, 2}}) *
                      Polynomial::variable(Var{Family::Eta, MultiIndex{}});
    return FunctionSpec::pair(2, 1, std::move(body));
}

} // namespace

TEST_CASE("signature validation rejects foreign variables and grades")
{
    CHECK_THROWS_AS(FunctionSpec::single(
                        3, 1, Polynomial::variable(Var{Family::Xi, MultiIndex{1, 2}})),
                    ValidationError);
    CHECK_THROWS_AS(FunctionSpec::single(
                        3, 1, Polynomial::variable(Var{Family::Omega, MultiIndex{1, 2}})),
                    ValidationError);
    CHECK_THROWS_AS(FunctionSpec::pair(
                        3, 1, Polynomial::variable(Var{Family::Omega, MultiIndex{1}})),
                    ValidationError);
    CHECK_NOTHROW(FunctionSpec::pair(3, 1,
                                     Polynomial::variable(Var{Family::Xi, MultiIndex{1, 3}}) +
                                         Polynomial::variable(Var{Family::Eta, MultiIndex{}})));
}

TEST_CASE("evaluation of single and pair functions")
{
    const FunctionSpec f = quartic_pairing_square();
    const Form split = Form::basis(4, MultiIndex{1, 2}) + Form::basis(4, MultiIndex{3, 4});
    CHECK(evaluate(f, split) == 2);

    const FunctionSpec seven = FunctionSpec::single(4, 2, Polynomial::constant(7));
    CHECK(evaluate(seven, split) == 7);

    Form xi(2, 2);
    xi.set(MultiIndex{1, 2}, 1);
    Form eta(2, 0);
    eta.set(MultiIndex{}, 3);
    CHECK(evaluate(star_xi_times_eta(), xi, eta) == 3);

    CHECK_THROWS_AS(evaluate(f, xi), SignatureMismatch);          // wrong dimension
    CHECK_THROWS_AS(evaluate(f, split, split), SignatureMismatch); // wrong arity
}

TEST_CASE("symbolic pairing expansions")
{
    // <e^{1,2,3,4} ; xi^2> = 2(xi_12 xi_34 - xi_13 xi_24 + xi_14 xi_23)
    const Polynomial p =
        symbolic_pairing(Form::basis(4, MultiIndex{1, 2, 3, 4}), Family::Xi, 2, 2);
    auto var = [](std::initializer_list<int> idx) {
        return Polynomial::variable(Var{Family::Xi, MultiIndex(idx)});
    };
    const Polynomial expected = (var({1, 2}) * var({3, 4}) - var({1, 3}) * var({2, 4}) +
                                 var({1, 4}) * var({2, 3})) *
                                Rational(2);
    CHECK(p == expected);

    Form gamma(4, 0);
    gamma.set(MultiIndex{}, Rational(5, 3));
    CHECK(symbolic_pairing(gamma, Family::Xi, 2, 0) == Polynomial::constant(Rational(5, 3)));

    CHECK(symbolic_pairing(Form::basis(4, MultiIndex{1, 2}), Family::Xi, 2, 1) == var({1, 2}));

    CHECK_THROWS_AS(symbolic_pairing(Form::basis(4, MultiIndex{1, 2}), Family::Xi, 2, 2),
                    GradeMismatch);
}

TEST_CASE("symbolic pairing agrees with concrete wedge powers")
{
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4); // 2..5
        const int g = 1 + static_cast<int>(rng() % 2); // 1..2
        const int s = static_cast<int>(rng() % 3);     // 0..2
        if (g * s > n) continue;
        const Form c = random_form(rng, n, g * s);
        const Form x = random_form(rng, n, g);
        const Polynomial p = symbolic_pairing(c, Family::Xi, g, s);
        std::map<Var, Rational> point;
        for (const auto& idx : enumerate(n, g)) point[Var{Family::Xi, idx}] = x.coeff(idx);
        CHECK(p.evaluate(point) == inner(c, wedge_power(x, s)));
    }
}

TEST_CASE("line restriction of the quartic pairing square is affine")
{
    const auto line = restrict_line(quartic_pairing_square(), LineMode::Ext);
    CHECK(line.degree() <= 1);
    CHECK(line.coefficient(2).is_zero());

    // spot value at a = e1 + e3, b = e2 + e4: the t^2 coefficient
    // <e^{1,2,3,4} ; (a^b)^2> cancels identically
    const Form a = Form::basis(4, MultiIndex{1}) + Form::basis(4, MultiIndex{3});
    const Form b = Form::basis(4, MultiIndex{2}) + Form::basis(4, MultiIndex{4});
    const Form dir = wedge(a, b);
    CHECK(inner(Form::basis(4, MultiIndex{1, 2, 3, 4}), wedge_power(dir, 2)) == 0);
}

TEST_CASE("line restriction of a linear function stops at degree one")
{
    Polynomial body = Polynomial::variable(Var{Family::Omega, MultiIndex{1, 2}}) * Rational(3) -
                      Polynomial::variable(Var{Family::Omega, MultiIndex{3, 4}}) +
                      Polynomial::constant(1);
    const FunctionSpec f = FunctionSpec::single(4, 2, std::move(body));
    for (const auto mode : {LineMode::Ext, LineMode::Int}) {
        const auto line = restrict_line(f, mode);
        CHECK(line.degree() <= 1);
    }
}

TEST_CASE("ext-int line restriction of the Hodge-pairing product")
{
    const auto line = restrict_line(star_xi_times_eta(), LineMode::ExtInt);
    REQUIRE(line.degree() == 2);
    // t^2 coefficient is (*(a^b))(a ~| b), value 1 at a = e1, b = e1 + e2
    std::map<Var, Rational> point = {
        {Var{Family::Xi, MultiIndex{1, 2}}, 0}, {Var{Family::Eta, MultiIndex{}}, 0},
        {Var{Family::DirA, MultiIndex{1}}, 1},  {Var{Family::DirA, MultiIndex{2}}, 0},
        {Var{Family::DirB, MultiIndex{1}}, 1},  {Var{Family::DirB, MultiIndex{2}}, 1},
    };
    CHECK(line.coefficient(2).evaluate(point) == 1);
    CHECK_FALSE(line.coefficient(2).is_zero());
}

TEST_CASE("line restriction evaluated at concrete data matches direct evaluation")
{
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3); // 2..4
        const int k = 1 + static_cast<int>(rng() % n);
        // random single-form function of degree <= 2
        Polynomial body;
        const auto indices = enumerate(n, k);
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            const auto& i1 = indices[rng() % indices.size()];
            const auto& i2 = indices[rng() % indices.size()];
            Polynomial factor = Polynomial::variable(Var{Family::Omega, i1}) *
                                Polynomial::variable(Var{Family::Omega, i2});
            body += factor * Rational(static_cast<long long>(rng() % 7) - 3);
        }
        const FunctionSpec f = FunctionSpec::single(n, k, body);

        const bool use_ext = rng() % 2 == 0 && k >= 1;
        const LineMode mode = use_ext ? LineMode::Ext : LineMode::Int;
        if (mode == LineMode::Int && k > n - 1) continue;
        const auto line = restrict_line(f, mode);
        CHECK(line.degree() <= f.body.total_degree());

        const Form base = random_form(rng, n, k);
        const Form a = random_form(rng, n, 1);
        const Form b = random_form(rng, n, mode == LineMode::Ext ? k - 1 : k + 1);
        const Form dir = mode == LineMode::Ext ? wedge(a, b) : interior(a, b);
        const Rational t1 = Rational(static_cast<long long>(rng() % 9) - 4, 2);

        std::map<Var, Rational> point;
        for (const auto& idx : enumerate(n, k)) point[Var{Family::Omega, idx}] = base.coeff(idx);
        for (const auto& idx : enumerate(n, 1)) point[Var{Family::DirA, idx}] = a.coeff(idx);
        for (const auto& idx : enumerate(n, b.grade()))
            point[Var{Family::DirB, idx}] = b.coeff(idx);

        Rational sum(0), tp(1);
        for (int m = 0; m <= line.degree(); ++m) {
            sum += line.coefficient(m).evaluate(point) * tp;
            tp *= t1;
        }
        CHECK(sum == evaluate(f, base + dir * t1));
    }
}

TEST_CASE("nonvanishing point search is deterministic and sound")
{
    const Var x = Var{Family::Omega, MultiIndex{1}};
    const Var y = Var{Family::Omega, MultiIndex{2}};

    CHECK_FALSE(find_nonvanishing_point(Polynomial{}).has_value());

    const Polynomial xy1 = Polynomial::variable(x) * Polynomial::variable(y) -
                           Polynomial::constant(1);
    const auto p1 = find_nonvanishing_point(xy1);
    REQUIRE(p1.has_value());
    CHECK(xy1.evaluate(*p1) != 0);
    CHECK(find_nonvanishing_point(xy1) == p1); // deterministic

    const Polynomial xsq = Polynomial::variable(x, 2);
    const auto p2 = find_nonvanishing_point(xsq);
    REQUIRE(p2.has_value());
    CHECK(p2->at(x) == 1);

    // vanishes at zero and on one axis, forcing the walk outward
    const Polynomial tricky =
        Polynomial::variable(x) * (Polynomial::variable(x) - Polynomial::constant(1)) *
        Polynomial::variable(y);
    const auto p3 = find_nonvanishing_point(tricky);
    REQUIRE(p3.has_value());
    CHECK(tricky.evaluate(*p3) != 0);
}
