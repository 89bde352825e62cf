#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extaff/function_spec.hpp"

namespace extaff {

// Canonical shape of an ext. (or, through the Hodge star, int.) one affine
// function: f(w) = sum_r <a_r ; w^r>, or sum_r <a_r ; (*w)^r> for the star
// basis. Uniqueness conventions: when the relevant grade is odd, powers
// beyond the first vanish identically and the corresponding coefficients are
// pinned to zero.
enum class PairingBasis { Direct, HodgeStar };

struct CanonicalExt {
    int n = 1;
    int k = 0;
    PairingBasis basis = PairingBasis::Direct;
    std::vector<Form> coefficients; // position r holds a_r, grade g*r

    // Grade paired with the r-th power.
    int power_grade() const { return basis == PairingBasis::Direct ? k : n - k; }

    int max_power() const { return power_grade() == 0 ? 0 : n / power_grade(); }

    bool operator==(const CanonicalExt&) const = default;
};

// Canonical shape of an ext-int. one affine function on
// Lambda^{k+1} x Lambda^{k-1}:
// f(xi, eta) = sum_s <c_s ; xi^s> + sum_r <d_r ; (*eta)^r>.
// Conventions making extraction well posed: d_0 = 0 (the constant lives in
// c_0) and coefficients of identically-vanishing powers are zero.
struct CanonicalExtInt {
    int n = 1;
    int k = 1;
    std::vector<Form> c; // position s holds c_s, grade (k+1)s
    std::vector<Form> d; // position r holds d_r, grade (n-k+1)r; d[0] always zero

    int xi_grade() const { return k + 1; }
    int star_eta_grade() const { return n - k + 1; }
    int max_s() const { return n / xi_grade(); }
    int max_r() const { return n / star_eta_grade(); }

    bool operator==(const CanonicalExtInt&) const = default;
};

// Constructive refutation of affinity: a base point and direction pair at
// which some t-power coefficient (power >= 2) of the line restriction takes
// a nonzero value.
struct Witness {
    std::vector<Form> base; // one form (single) or two (pair: xi then eta)
    Form a{1, 1};
    Form b{1, 0};
    int t_power = 2;
    Rational value = 0;
};

struct NotAffineError : Error {
    NotAffineError(std::string message, Witness w)
        : Error(std::move(message)), witness(std::move(w)) {}
    Witness witness;
};

template <typename Rep>
struct Verdict {
    bool is_member = false;
    std::optional<Rep> canonical; // present iff is_member
    std::optional<Witness> witness; // present iff !is_member
};

using VerdictExt = Verdict<CanonicalExt>;
using VerdictExtInt = Verdict<CanonicalExtInt>;

// Assembles the polynomial function a canonical representation denotes. The
// converse ("if") direction of the characterization theorems: the output
// always passes the matching affinity test.
inline FunctionSpec build_from_canonical(const CanonicalExt& rep)
{
    Polynomial body;
    const int g = rep.power_grade();
    for (std::size_t r = 0; r < rep.coefficients.size(); ++r) {
        const Form& a_r = rep.coefficients[r];
        if (a_r.is_zero()) continue;
        if (rep.basis == PairingBasis::Direct)
            body += symbolic_pairing(a_r, Family::Omega, g, static_cast<int>(r));
        else
            body += symbolic_star_pairing(a_r, Family::Omega, rep.k, static_cast<int>(r));
    }
    return FunctionSpec::single(rep.n, rep.k, std::move(body));
}

inline FunctionSpec build_from_canonical(const CanonicalExtInt& rep)
{
    Polynomial body;
    for (std::size_t s = 0; s < rep.c.size(); ++s) {
        if (rep.c[s].is_zero()) continue;
        body += symbolic_pairing(rep.c[s], Family::Xi, rep.xi_grade(), static_cast<int>(s));
    }
    for (std::size_t r = 0; r < rep.d.size(); ++r) {
        if (rep.d[r].is_zero()) continue;
        body += symbolic_star_pairing(rep.d[r], Family::Eta, rep.k - 1, static_cast<int>(r));
    }
    return FunctionSpec::pair(rep.n, rep.k, std::move(body));
}

// Deterministic seeded generator. mt19937_64 output is pinned by the
// standard; the int helpers avoid std distributions, whose streams are
// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform-ish integer in [lo, hi]; exact distribution does not matter
    // for the suites, reproducibility does.
    long long int_in(long long lo, long long hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(engine_() % span);
    }

    Rational rational(int bound, int max_den = 1)
    {
        const long long num = int_in(-bound, bound);
        const long long den = max_den > 1 ? int_in(1, max_den) : 1;
        return Rational(Integer(num), Integer(den));
    }

    Form form(int n, int k, int bound, int max_den = 1)
    {
        Form f(n, k);
        for (const auto& idx : enumerate(n, k)) f.set(idx, rational(bound, max_den));
        return f;
    }

    Form nonzero_form(int n, int k, int bound, int max_den = 1)
    {
        for (;;) {
            Form f = form(n, k, bound, max_den);
            if (!f.is_zero()) return f;
        }
    }

    MultiIndex multi_index(int n, int k)
    {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        // partial Fisher-Yates, then sort
        std::vector<int> pick;
        for (int i = 0; i < k; ++i) {
            const auto j = static_cast<std::size_t>(int_in(i, n - 1));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            pick.push_back(pool[static_cast<std::size_t>(i)]);
        }
        std::sort(pick.begin(), pick.end());
        return MultiIndex(std::move(pick));
    }

private:
    std::mt19937_64 engine_;
};

// Random canonical representation with small integer coefficients,
// respecting every shape convention (parity-forced zeros, d_0 = 0).
inline CanonicalExtInt random_canonical(int n, int k, std::uint64_t seed, int bound = 3)
{
    if (k < 1 || k > n - 1) throw ValidationError("random_canonical: needs 1 <= k <= n-1");
    Rng rng(seed);
    CanonicalExtInt rep;
    rep.n = n;
    rep.k = k;
    for (int s = 0; s <= rep.max_s(); ++s) {
        const int grade = rep.xi_grade() * s;
        const bool allowed = s <= 1 || rep.xi_grade() % 2 == 0;
        rep.c.push_back(allowed ? rng.form(n, grade, bound) : Form::zero(n, grade));
    }
    for (int r = 0; r <= rep.max_r(); ++r) {
        const int grade = rep.star_eta_grade() * r;
        const bool allowed = r >= 1 && (r <= 1 || rep.star_eta_grade() % 2 == 0);
        rep.d.push_back(allowed ? rng.form(n, grade, bound) : Form::zero(n, grade));
    }
    return rep;
}

inline CanonicalExt random_canonical_ext(int n, int k, std::uint64_t seed,
                                         PairingBasis basis = PairingBasis::Direct,
                                         int bound = 3)
{
    CanonicalExt rep;
    rep.n = n;
    rep.k = k;
    rep.basis = basis;
    Rng rng(seed);
    const int g = rep.power_grade();
    if (g == 0) throw ValidationError("random_canonical_ext: power grade is zero");
    for (int r = 0; r <= rep.max_power(); ++r) {
        const bool allowed = r <= 1 || g % 2 == 0;
        rep.coefficients.push_back(allowed ? rng.form(n, g * r, bound) : Form::zero(n, g * r));
    }
    return rep;
}

} // namespace extaff
