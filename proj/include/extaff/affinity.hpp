#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "extaff/canonical.hpp"
#include "extaff/function_spec.hpp"
#include "extaff/linalg.hpp"

namespace extaff {

// --- Hodge transform and partial restrictions -------------------------------

// f_*(w) := f(*w), exchanging the ext. and int. notions. A signed relabeling
// of the component variables: (*w)_I = sgn(I^c, I) w_{I^c}.
inline FunctionSpec hodge_transform(const FunctionSpec& f)
{
    if (f.kind != SignatureKind::Single)
        throw SignatureMismatch("hodge_transform: single-form functions only");
    std::map<Var, Polynomial> repl;
    for (const auto& idx : enumerate(f.n, f.k)) {
        const MultiIndex comp = complement(idx, f.n);
        const int sign = merge_sign(comp, idx).sign;
        repl[Var{Family::Omega, idx}] =
            Polynomial::variable(Var{Family::Omega, comp}) * Rational(sign);
    }
    return FunctionSpec::single(f.n, f.n - f.k, f.body.substitute(repl));
}

// f_eta(xi) := f(xi, eta) for fixed eta; a single-form function of grade k+1.
inline FunctionSpec fix_eta(const FunctionSpec& f, const Form& eta)
{
    if (f.kind != SignatureKind::Pair) throw SignatureMismatch("fix_eta: pair functions only");
    if (eta.dimension() != f.n || eta.grade() != f.eta_grade())
        throw GradeMismatch("fix_eta: fixed argument has the wrong grade or dimension");
    std::map<Var, Polynomial> repl;
    for (const auto& idx : enumerate(f.n, f.eta_grade()))
        repl[Var{Family::Eta, idx}] = Polynomial::constant(eta.coeff(idx));
    for (const auto& idx : enumerate(f.n, f.xi_grade()))
        repl[Var{Family::Xi, idx}] = Polynomial::variable(Var{Family::Omega, idx});
    return FunctionSpec::single(f.n, f.xi_grade(), f.body.substitute(repl));
}

// f^xi(eta) := f(xi, eta) for fixed xi; a single-form function of grade k-1.
inline FunctionSpec fix_xi(const FunctionSpec& f, const Form& xi)
{
    if (f.kind != SignatureKind::Pair) throw SignatureMismatch("fix_xi: pair functions only");
    if (xi.dimension() != f.n || xi.grade() != f.xi_grade())
        throw GradeMismatch("fix_xi: fixed argument has the wrong grade or dimension");
    std::map<Var, Polynomial> repl;
    for (const auto& idx : enumerate(f.n, f.xi_grade()))
        repl[Var{Family::Xi, idx}] = Polynomial::constant(xi.coeff(idx));
    for (const auto& idx : enumerate(f.n, f.eta_grade()))
        repl[Var{Family::Eta, idx}] = Polynomial::variable(Var{Family::Omega, idx});
    return FunctionSpec::single(f.n, f.eta_grade(), f.body.substitute(repl));
}

// --- Witness production ------------------------------------------------------

namespace detail {

inline Form form_from_assignment(const std::map<Var, Rational>& point, Family family, int n,
                                 int grade)
{
    Form out(n, grade);
    for (const auto& [v, value] : point)
        if (v.family == family) out.set(v.index, value);
    return out;
}

// Builds a witness from the lowest nonvanishing t-power (>= 2) of the
// symbolic line restriction.
inline std::optional<Witness> witness_from_line(const FunctionSpec& f, LineMode mode,
                                                const LinePolynomial& line)
{
    for (int m = 2; m <= line.degree(); ++m) {
        const Polynomial& coeff = line.coefficient(m);
        if (coeff.is_zero()) continue;
        const auto point = find_nonvanishing_point(coeff);
        Witness w;
        if (f.kind == SignatureKind::Single) {
            w.base = {form_from_assignment(*point, Family::Omega, f.n, f.k)};
        } else {
            w.base = {form_from_assignment(*point, Family::Xi, f.n, f.xi_grade()),
                      form_from_assignment(*point, Family::Eta, f.n, f.eta_grade())};
        }
        w.a = form_from_assignment(*point, Family::DirA, f.n, 1);
        const int b_grade = mode == LineMode::Ext   ? f.k - 1
                            : mode == LineMode::Int ? f.k + 1
                                                    : f.k;
        w.b = form_from_assignment(*point, Family::DirB, f.n, b_grade);
        w.t_power = m;
        w.value = coeff.evaluate(*point);
        return w;
    }
    return std::nullopt;
}

} // namespace detail

// Exact coefficients of the univariate polynomial t -> f(base + t dir), with
// the direction pair (a, b) combined according to the mode. Position m holds
// the t^m coefficient. This is how witnesses are replayed.
inline std::vector<Rational> line_values(const FunctionSpec& f, LineMode mode,
                                         const std::vector<Form>& base, const Form& a,
                                         const Form& b)
{
    const Polynomial t = Polynomial::variable(t_var());
    std::map<Var, Polynomial> repl;
    auto bind = [&](Family family, int grade, const Form& base_form, const Form& dir) {
        if (base_form.dimension() != f.n || base_form.grade() != grade)
            throw SignatureMismatch("line_values: base form grade/dimension mismatch");
        for (const auto& idx : enumerate(f.n, grade))
            repl[Var{family, idx}] = Polynomial::constant(base_form.coeff(idx)) +
                                     t * Polynomial::constant(dir.coeff(idx));
    };
    switch (mode) {
    case LineMode::Ext:
        if (f.kind != SignatureKind::Single || base.size() != 1)
            throw SignatureMismatch("line_values: ext mode expects one base form");
        bind(Family::Omega, f.k, base[0], wedge(a, b));
        break;
    case LineMode::Int:
        if (f.kind != SignatureKind::Single || base.size() != 1)
            throw SignatureMismatch("line_values: int mode expects one base form");
        bind(Family::Omega, f.k, base[0], interior(a, b));
        break;
    case LineMode::ExtInt:
        if (f.kind != SignatureKind::Pair || base.size() != 2)
            throw SignatureMismatch("line_values: ext-int mode expects two base forms");
        bind(Family::Xi, f.xi_grade(), base[0], wedge(a, b));
        bind(Family::Eta, f.eta_grade(), base[1], interior(a, b));
        break;
    }
    std::vector<Rational> out;
    for (const auto& c : f.body.substitute(repl).collect_t_powers()) {
        if (!c.is_constant()) throw Error("line_values: residual variables in line coefficient");
        out.push_back(c.constant_value());
    }
    return out;
}

inline Rational replay_witness(const FunctionSpec& f, LineMode mode, const Witness& w)
{
    const auto values = line_values(f, mode, w.base, w.a, w.b);
    return static_cast<std::size_t>(w.t_power) < values.size()
               ? values[static_cast<std::size_t>(w.t_power)]
               : Rational(0);
}

// --- Canonical coefficient extraction ---------------------------------------

namespace detail {

struct PairingColumn {
    int power = 0;
    MultiIndex index;
    Polynomial expansion;
};

// Solves targets = sum of columns exactly by matching monomial coefficients.
// The targets map is the (sub)set of the function's terms the columns must
// reproduce; splitting it is how the pair solve separates its xi and eta
// blocks. Throws InconsistentError when no exact match exists.
inline std::map<std::pair<int, MultiIndex>, Rational>
match_pairing_columns(const std::vector<PairingColumn>& columns,
                      const Polynomial::TermMap& targets)
{
    std::map<Monomial, std::size_t, MonomialLess> row_of;
    auto row_for = [&](const Monomial& m) {
        return row_of.try_emplace(m, row_of.size()).first->second;
    };
    for (const auto& [m, c] : targets) row_for(m);
    for (const auto& col : columns)
        for (const auto& [m, c] : col.expansion.terms()) row_for(m);

    QMatrix a(row_of.size(), columns.size());
    std::vector<Rational> b(row_of.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [m, c] : columns[j].expansion.terms()) a.at(row_for(m), j) = c;
    for (const auto& [m, c] : targets) b[row_for(m)] = c;

    const auto solution = solve_linear(a, b);
    if (!solution)
        throw InconsistentError("extraction: polynomial is outside the canonical span");
    std::map<std::pair<int, MultiIndex>, Rational> out;
    for (std::size_t j = 0; j < columns.size(); ++j)
        out[{columns[j].power, columns[j].index}] = (*solution)[j];
    return out;
}

inline Polynomial::TermMap terms_with_family_degree(const Polynomial& body, Family family,
                                                    bool positive_degree)
{
    Polynomial::TermMap out;
    for (const auto& [m, c] : body.terms()) {
        int deg = 0;
        for (const auto& [v, e] : m)
            if (v.family == family) deg += e;
        if ((deg > 0) == positive_degree) out.emplace(m, c);
    }
    return out;
}

} // namespace detail

// Nonvanishing higher t-coefficients of the mode's line restriction;
// empty iff f is affine along the mode's direction family.
inline std::optional<Witness> affinity_defect(const FunctionSpec& f, LineMode mode)
{
    return detail::witness_from_line(f, mode, restrict_line(f, mode));
}

// Coefficients of f(w) = sum_r <a_r ; w^r>, unique under the canonical-shape
// conventions. Verification of ext. one affinity can be suppressed when the
// caller has already tested it.
inline CanonicalExt extract_ext_coeffs(const FunctionSpec& f, bool verify_affine = true)
{
    if (f.kind != SignatureKind::Single)
        throw SignatureMismatch("extract_ext_coeffs: single-form functions only");
    if (verify_affine) {
        if (auto w = affinity_defect(f, LineMode::Ext))
            throw NotAffineError("extract_ext_coeffs: function is not ext. one affine",
                                 std::move(*w));
    }
    CanonicalExt rep;
    rep.n = f.n;
    rep.k = f.k;
    rep.basis = PairingBasis::Direct;

    std::vector<detail::PairingColumn> columns;
    const int m = rep.max_power();
    for (int r = 0; r <= m; ++r) {
        if (r >= 2 && f.k % 2 != 0) break; // odd grades square to zero
        for (const auto& idx : enumerate(f.n, f.k * r))
            columns.push_back({r, idx,
                               symbolic_pairing(Form::basis(f.n, idx), Family::Omega, f.k, r)});
    }
    const auto coeffs = detail::match_pairing_columns(columns, f.body.terms());
    for (int r = 0; r <= m; ++r) rep.coefficients.push_back(Form::zero(f.n, f.k * r));
    for (const auto& [key, value] : coeffs)
        rep.coefficients[static_cast<std::size_t>(key.first)].set(key.second, value);
    return rep;
}

// Coefficients of f(w) = sum_r <a_r ; (*w)^r>, through the Hodge transform.
inline CanonicalExt extract_int_coeffs(const FunctionSpec& f, bool verify_affine = true)
{
    if (f.kind != SignatureKind::Single)
        throw SignatureMismatch("extract_int_coeffs: single-form functions only");
    if (verify_affine) {
        if (auto w = affinity_defect(f, LineMode::Int))
            throw NotAffineError("extract_int_coeffs: function is not int. one affine",
                                 std::move(*w));
    }
    const CanonicalExt star_rep = extract_ext_coeffs(hodge_transform(f), false);
    CanonicalExt rep;
    rep.n = f.n;
    rep.k = f.k;
    rep.basis = PairingBasis::HodgeStar;
    // f(w) = f_*(phi) at phi = (-1)^{k(n-k)} * w, so the r-th coefficient
    // picks up the involution sign to the r-th power.
    const int involution = (f.k * (f.n - f.k)) % 2 != 0 ? -1 : 1;
    int sign = 1;
    for (std::size_t r = 0; r < star_rep.coefficients.size(); ++r) {
        rep.coefficients.push_back(star_rep.coefficients[r] * Rational(sign));
        sign *= involution;
    }
    return rep;
}

// Coefficients of f(xi, eta) = sum_s <c_s ; xi^s> + sum_r <d_r ; (*eta)^r>.
// Also verifies that no mixed xi-eta terms survive, which the
// characterization guarantees for affine input; a violation is an internal
// failure, not a user error.
inline CanonicalExtInt extract_ext_int_canonical(const FunctionSpec& f, bool verify_affine = true)
{
    if (f.kind != SignatureKind::Pair)
        throw SignatureMismatch("extract_ext_int_canonical: pair functions only");
    if (verify_affine) {
        if (auto w = affinity_defect(f, LineMode::ExtInt))
            throw NotAffineError("extract_ext_int_canonical: function is not ext-int. one affine",
                                 std::move(*w));
    }
    for (const auto& [m, c] : f.body.terms()) {
        int xi_deg = 0, eta_deg = 0;
        for (const auto& [v, e] : m) {
            if (v.family == Family::Xi) xi_deg += e;
            if (v.family == Family::Eta) eta_deg += e;
        }
        if (xi_deg > 0 && eta_deg > 0)
            throw InconsistentError("extraction: mixed xi-eta coefficient survived");
    }

    CanonicalExtInt rep;
    rep.n = f.n;
    rep.k = f.k;

    std::vector<detail::PairingColumn> xi_columns;
    for (int s = 0; s <= rep.max_s(); ++s) {
        if (s >= 2 && rep.xi_grade() % 2 != 0) break;
        for (const auto& idx : enumerate(f.n, rep.xi_grade() * s))
            xi_columns.push_back(
                {s, idx, symbolic_pairing(Form::basis(f.n, idx), Family::Xi, rep.xi_grade(), s)});
    }
    const auto xi_coeffs = detail::match_pairing_columns(
        xi_columns, detail::terms_with_family_degree(f.body, Family::Eta, false));
    for (int s = 0; s <= rep.max_s(); ++s) rep.c.push_back(Form::zero(f.n, rep.xi_grade() * s));
    for (const auto& [key, value] : xi_coeffs)
        rep.c[static_cast<std::size_t>(key.first)].set(key.second, value);

    std::vector<detail::PairingColumn> eta_columns;
    for (int r = 1; r <= rep.max_r(); ++r) {
        if (r >= 2 && rep.star_eta_grade() % 2 != 0) break;
        for (const auto& idx : enumerate(f.n, rep.star_eta_grade() * r))
            eta_columns.push_back({r, idx,
                                   symbolic_star_pairing(Form::basis(f.n, idx), Family::Eta,
                                                         f.eta_grade(), r)});
    }
    const auto eta_coeffs = detail::match_pairing_columns(
        eta_columns, detail::terms_with_family_degree(f.body, Family::Eta, true));
    for (int r = 0; r <= rep.max_r(); ++r)
        rep.d.push_back(Form::zero(f.n, rep.star_eta_grade() * r));
    for (const auto& [key, value] : eta_coeffs)
        rep.d[static_cast<std::size_t>(key.first)].set(key.second, value);

    return rep;
}

// --- Membership tests --------------------------------------------------------

// Affine along every direction a ^ b (Definition of ext. one affine), decided
// by symbolic vanishing of every t^m coefficient, m >= 2.
inline VerdictExt is_ext_one_affine(const FunctionSpec& f)
{
    if (auto w = affinity_defect(f, LineMode::Ext)) return {false, std::nullopt, std::move(w)};
    return {true, extract_ext_coeffs(f, false), std::nullopt};
}

// Affine along every direction a ~| b; equivalently, the Hodge transform is
// ext. one affine. Decided on the direct restriction so the witness lives in
// the original coordinates.
inline VerdictExt is_int_one_affine(const FunctionSpec& f)
{
    if (auto w = affinity_defect(f, LineMode::Int)) return {false, std::nullopt, std::move(w)};
    return {true, extract_int_coeffs(f, false), std::nullopt};
}

// Affine along every paired direction (a ^ b, a ~| b) on
// Lambda^{k+1} x Lambda^{k-1}.
inline VerdictExtInt is_ext_int_one_affine(const FunctionSpec& f)
{
    if (auto w = affinity_defect(f, LineMode::ExtInt)) return {false, std::nullopt, std::move(w)};
    return {true, extract_ext_int_canonical(f, false), std::nullopt};
}

// --- Splitting (sum decomposition) -------------------------------------------

enum class SplitCase { I, II, III };

inline const char* split_case_name(SplitCase c)
{
    switch (c) {
    case SplitCase::I: return "I";
    case SplitCase::II: return "II";
    case SplitCase::III: return "III";
    }
    return "?";
}

struct Split {
    FunctionSpec g; // function of xi alone, grade k+1
    FunctionSpec h; // function of eta alone, grade k-1
    SplitCase which = SplitCase::II;
};

// f(xi, eta) = g(xi) + h(eta) with the nonlinearity confined to at most one
// summand: case I (n <= 2k-2) forces g affine, case III (n >= 2k+2) forces h
// affine, case II (n in {2k-1, 2k, 2k+1}, or k and n both even) forces both.
inline Split split_g_h(const CanonicalExtInt& rep)
{
    const int n = rep.n, k = rep.k;
    SplitCase which;
    if ((n >= 2 * k - 1 && n <= 2 * k + 1) || (k % 2 == 0 && n % 2 == 0))
        which = SplitCase::II;
    else if (n <= 2 * k - 2)
        which = SplitCase::I;
    else
        which = SplitCase::III;

    Polynomial g_body;
    for (std::size_t s = 0; s < rep.c.size(); ++s)
        if (!rep.c[s].is_zero())
            g_body += symbolic_pairing(rep.c[s], Family::Omega, rep.xi_grade(),
                                       static_cast<int>(s));
    Polynomial h_body;
    for (std::size_t r = 0; r < rep.d.size(); ++r)
        if (!rep.d[r].is_zero())
            h_body += symbolic_star_pairing(rep.d[r], Family::Omega, rep.k - 1,
                                            static_cast<int>(r));

    Split out{FunctionSpec::single(n, rep.xi_grade(), std::move(g_body)),
              FunctionSpec::single(n, rep.k - 1, std::move(h_body)), which};

    const bool g_affine = out.g.body.total_degree() <= 1;
    const bool h_affine = out.h.body.total_degree() <= 1;
    if (which == SplitCase::I && !g_affine)
        throw DegreeViolation("split: case I requires an affine xi part");
    if (which == SplitCase::II && !(g_affine && h_affine))
        throw DegreeViolation("split: case II requires both parts affine");
    if (which == SplitCase::III && !h_affine)
        throw DegreeViolation("split: case III requires an affine eta part");
    return out;
}

// --- Convexity falsification --------------------------------------------------

// Certificate of non-convexity along one line: a concrete negative second
// difference of the univariate restriction.
struct ConvexityWitness {
    std::vector<Form> base;
    Form a{1, 1};
    Form b{1, 0};
    Rational t0;
    Rational step;
    Rational second_difference; // g(t0-step) - 2 g(t0) + g(t0+step), < 0
};

namespace detail {

inline Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& t)
{
    Rational acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
    return acc;
}

inline std::optional<std::pair<Rational, Rational>>
negative_second_difference(const std::vector<Rational>& g)
{
    if (g.size() <= 2) return std::nullopt; // affine: convex
    const std::vector<Rational> steps = {Rational(1), Rational(1, 2)};
    auto probe = [&](const Rational& t0, const Rational& h)
        -> std::optional<std::pair<Rational, Rational>> {
        const Rational d = eval_univariate(g, t0 - h) - 2 * eval_univariate(g, t0) +
                           eval_univariate(g, t0 + h);
        if (d < 0) return std::make_pair(t0, h);
        return std::nullopt;
    };
    for (int j = 0; j <= 4; ++j) {
        for (const int sgn : {1, -1}) {
            const Rational t0 = Rational(sgn * (j == 0 ? 0 : (1 << (j - 1))));
            for (const auto& h : steps)
                if (auto hit = probe(t0, h)) return hit;
            if (j == 0) break; // t0 = 0 once
        }
    }
    // A polynomial of odd degree, or with negative leading coefficient, is
    // eventually non-convex; chase it outward.
    const std::size_t deg = g.size() - 1;
    const bool escapes = deg % 2 == 1 || g.back() < 0;
    if (escapes) {
        for (int j = 3; j <= 64; ++j) {
            const Rational big = Rational(Integer(1) << j);
            for (const int sgn : {1, -1})
                if (auto hit = probe(Rational(sgn) * big, Rational(1))) return hit;
        }
    }
    return std::nullopt;
}

} // namespace detail

// Searches deterministic integer grid points of (base, direction) for a line
// restriction with a negative second difference. Never certifies convexity:
// nullopt means unknown.
inline std::optional<ConvexityWitness> falsify_convexity(const FunctionSpec& f, LineMode mode,
                                                         int budget = 4000)
{
    const LinePolynomial line = restrict_line(f, mode);
    std::set<Var> var_set;
    for (const auto& c : line.coefficients)
        for (const auto& v : c.variables()) var_set.insert(v);
    const std::vector<Var> vars(var_set.begin(), var_set.end());

    auto value_of = [](int j) { return (j % 2 == 1) ? Rational((j + 1) / 2) : Rational(-j / 2); };
    std::vector<int> odo(vars.size(), 0);
    const int top = 4; // values 0, 1, -1, 2, -2

    for (int used = 0; used < budget; ++used) {
        std::map<Var, Rational> point;
        for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = value_of(odo[i]);

        std::vector<Rational> g;
        for (const auto& c : line.coefficients) g.push_back(c.evaluate(point));
        while (!g.empty() && g.back() == 0) g.pop_back();

        if (auto hit = detail::negative_second_difference(g)) {
            ConvexityWitness w;
            if (f.kind == SignatureKind::Single) {
                w.base = {detail::form_from_assignment(point, Family::Omega, f.n, f.k)};
            } else {
                w.base = {detail::form_from_assignment(point, Family::Xi, f.n, f.xi_grade()),
                          detail::form_from_assignment(point, Family::Eta, f.n, f.eta_grade())};
            }
            w.a = detail::form_from_assignment(point, Family::DirA, f.n, 1);
            const int b_grade = mode == LineMode::Ext   ? f.k - 1
                                : mode == LineMode::Int ? f.k + 1
                                                        : f.k;
            w.b = detail::form_from_assignment(point, Family::DirB, f.n, b_grade);
            w.t0 = hit->first;
            w.step = hit->second;
            w.second_difference =
                detail::eval_univariate(g, w.t0 - w.step) - 2 * detail::eval_univariate(g, w.t0) +
                detail::eval_univariate(g, w.t0 + w.step);
            return w;
        }

        std::size_t pos = vars.size();
        while (pos > 0 && odo[pos - 1] == top) odo[--pos] = 0;
        if (pos == 0) break; // exhausted the grid
        ++odo[pos - 1];
    }
    return std::nullopt;
}

} // namespace extaff
