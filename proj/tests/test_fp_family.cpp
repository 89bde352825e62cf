#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "extaff/fp_family.hpp"

using namespace extaff;

namespace {

// The reference kernel family at n = 4, k = 2, p = 1.
CoeffFamilyD reference_family()
{
    CoeffFamilyD d = CoeffFamilyD::zero(4, 2, 1);
    d.members.at(MultiIndex{2}) = Form::basis(4, MultiIndex{3, 4}) * Rational(2);
    d.members.at(MultiIndex{3}) = Form::basis(4, MultiIndex{2, 4}) * Rational(-2);
    d.members.at(MultiIndex{4}) = Form::basis(4, MultiIndex{2, 3}) * Rational(2);
    return d;
}

Form random_form(std::mt19937_64& rng, int n, int k, int bound = 3)
{
    Form f(n, k);
    for (const auto& idx : enumerate(n, k))
        f.set(idx, Rational(static_cast<long long>(rng() % (2 * bound + 1)) - bound));
    return f;
}

} // namespace

TEST_CASE("family validation enforces keys, grades and the e^1 constraint")
{
    CHECK_NOTHROW(reference_family().validate());
    CoeffFamilyD bad = CoeffFamilyD::zero(4, 2, 1);
    bad.members.at(MultiIndex{2}) = Form::basis(4, MultiIndex{1, 3});
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("the diagonal of F_1 for the reference family")
{
    const CoeffFamilyD d = reference_family();
    // F_1(w, w) = 2(w_12 w_34 - w_13 w_24 + w_14 w_23)
    auto var = [](std::initializer_list<int> idx) {
        return Polynomial::variable(Var{Family::Omega, MultiIndex(idx)});
    };
    const Polynomial expected = (var({1, 2}) * var({3, 4}) - var({1, 3}) * var({2, 4}) +
                                 var({1, 4}) * var({2, 3})) *
                                Rational(2);
    CHECK(symbolic_F_p_diagonal(d) == expected);

    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
        const Form w = random_form(rng, 4, 2);
        const Form a = random_form(rng, 4, 1);
        const Form b = random_form(rng, 4, 1);
        // the family lies in the hypothesis kernel: F_1(w, a ^ b) = 0
        CHECK(eval_F_p(d, w, wedge(a, b)) == 0);
        // and the diagonal matches the displayed polynomial
        const Rational direct = Rational(2) * (w.coeff(MultiIndex{1, 2}) *
                                                   w.coeff(MultiIndex{3, 4}) -
                                               w.coeff(MultiIndex{1, 3}) *
                                                   w.coeff(MultiIndex{2, 4}) +
                                               w.coeff(MultiIndex{1, 4}) *
                                                   w.coeff(MultiIndex{2, 3}));
        CHECK(eval_F_p(d, w, w) == direct);
    }

    CHECK(eval_F_p(CoeffFamilyD::zero(4, 2, 1), random_form(rng, 4, 2),
                   random_form(rng, 4, 2)) == 0);
}

TEST_CASE("kernel solve is trivial for odd grade or past half dimension")
{
    CHECK(solve_D_kernel(4, 3, 1).empty());
    CHECK(solve_D_kernel(3, 2, 1).empty());
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k)
            if (k % 2 == 1 || 2 * k > n) CHECK(solve_D_kernel(n, k, 1).empty());
}

TEST_CASE("kernel at n = 4, k = 2 contains the reference family")
{
    const auto basis = solve_D_kernel(4, 2, 1);
    REQUIRE_FALSE(basis.empty());
    for (const auto& d : basis) {
        d.validate();
        CHECK(check_orthogonality(d).all_pass());
        std::mt19937_64 rng(89);
        for (int trial = 0; trial < 20; ++trial)
            CHECK(eval_F_p(d, random_form(rng, 4, 2), wedge(random_form(rng, 4, 1),
                                                            random_form(rng, 4, 1))) == 0);
    }

    // span membership of the reference family: vectorize and solve
    const auto keys = enumerate_excluding(4, 1, 1);
    const auto slots = enumerate_excluding(4, 2, 1);
    auto vectorize = [&](const CoeffFamilyD& d) {
        std::vector<Rational> v;
        for (const auto& a : keys)
            for (const auto& s : slots) v.push_back(d.member(a).coeff(s));
        return v;
    };
    const auto target = vectorize(reference_family());
    QMatrix m(target.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto col = vectorize(basis[j]);
        for (std::size_t r = 0; r < col.size(); ++r) m.at(r, j) = col[r];
    }
    const auto combo = solve_linear(m, target);
    REQUIRE(combo.has_value());
    // residual check: the solve used all rows, so verify the combination
    std::vector<Rational> recon(target.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const auto col = vectorize(basis[j]);
        for (std::size_t r = 0; r < col.size(); ++r) recon[r] += (*combo)[j] * col[r];
    }
    CHECK(recon == target);
}

TEST_CASE("orthogonality report flags a broken family")
{
    CHECK(check_orthogonality(CoeffFamilyD::zero(4, 2, 1)).all_pass());

    CoeffFamilyD broken = CoeffFamilyD::zero(4, 2, 1);
    broken.members.at(MultiIndex{2}) = Form::basis(4, MultiIndex{3, 4});
    const auto report = check_orthogonality(broken);
    CHECK_FALSE(report.all_pass());
    // e^3 ~| D^2 + e^2 ~| D^3 = e^4 != 0
    CHECK_FALSE(report.relations[0].pass);
    CHECK(interior(Form::basis(4, MultiIndex{3}), broken.member(MultiIndex{2})) +
              interior(Form::basis(4, MultiIndex{2}), broken.member(MultiIndex{3})) ==
          Form::basis(4, MultiIndex{4}));
}

TEST_CASE("H construction for the reference family")
{
    const Form h = construct_H_p(reference_family());
    CHECK(h == Form::basis(4, MultiIndex{2, 3, 4}));

    CHECK(construct_H_p(CoeffFamilyD::zero(4, 2, 1)).is_zero());
    CHECK(construct_H_p(CoeffFamilyD::zero(4, 3, 1)).is_zero()); // odd grade

    CoeffFamilyD broken = CoeffFamilyD::zero(4, 2, 1);
    broken.members.at(MultiIndex{2}) = Form::basis(4, MultiIndex{3, 4});
    CHECK_THROWS_AS(construct_H_p(broken), Error);
}

TEST_CASE("H identity holds symbolically on every kernel basis element")
{
    for (const auto& [n, k, p] : std::vector<std::tuple<int, int, int>>{{4, 2, 1}, {5, 2, 1}}) {
        for (const auto& d : solve_D_kernel(n, k, p)) {
            const Form h = construct_H_p(d); // throws if the identity fails
            CHECK(interior(Form::basis(n, MultiIndex{1}), h).is_zero());
        }
    }
}

TEST_CASE("power preimages reproduce scaled basis forms")
{
    {
        const Form w = power_preimage(MultiIndex{1, 2, 3, 4}, 2, 3, 4);
        CHECK(w == Form::basis(4, MultiIndex{1, 2}) + Form::basis(4, MultiIndex{3, 4}));
        CHECK(wedge_power(w, 2) == Form::basis(4, MultiIndex{1, 2, 3, 4}) * Rational(2));
    }
    {
        const Form w = power_preimage(MultiIndex{1, 2}, 2, 2, 4);
        CHECK(w == Form::basis(4, MultiIndex{1, 2}));
        CHECK(wedge_power(w, 1) == Form::basis(4, MultiIndex{1, 2}));
    }
    {
        const Form w = power_preimage(MultiIndex{1, 2, 3, 4, 5, 6}, 2, 4, 6);
        CHECK(wedge_power(w, 3) == Form::basis(6, MultiIndex{1, 2, 3, 4, 5, 6}) * Rational(6));
    }
    CHECK_THROWS_AS(power_preimage(MultiIndex{1, 2, 3}, 2, 3, 4), GradeMismatch);
    CHECK_THROWS_AS(power_preimage(MultiIndex{1, 2, 3, 4, 5, 6}, 3, 3, 6), ValidationError);

    // factorial identity over every admissible index at small scales
    long long factorial = 1;
    for (const auto& [k, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}}) {
        factorial = 1;
        for (int i = 2; i <= p - 1; ++i) factorial *= i;
        const int size = (p - 1) * k;
        for (int n = size; n <= 6; ++n)
            for (const auto& q : enumerate(n, size))
                CHECK(wedge_power(power_preimage(q, k, p, n), p - 1) ==
                      Form::basis(n, q) * Rational(factorial));
    }
}
