#pragma once

#include <map>
#include <string>
#include <vector>

#include "extaff/form.hpp"
#include "extaff/function_spec.hpp"
#include "extaff/linalg.hpp"
#include "extaff/polyform.hpp"

namespace extaff {

// Coefficient family {D^A : A in T^1_{k-1}}, each D^A of grade k*p with
// e^1 ~| D^A = 0 (no component index contains 1). These drive the bilinear
// pairing F_p and the H_p construction.
struct CoeffFamilyD {
    int n = 1, k = 2, p = 1;
    std::map<MultiIndex, Form> members; // keyed by A in T^1_{k-1}

    static CoeffFamilyD zero(int n, int k, int p)
    {
        CoeffFamilyD d{n, k, p, {}};
        for (const auto& a : enumerate_excluding(n, k - 1, 1))
            d.members.emplace(a, Form::zero(n, k * p));
        return d;
    }

    const Form& member(const MultiIndex& a) const
    {
        auto it = members.find(a);
        if (it == members.end())
            throw ValidationError("coefficient family: no member for " + a.str());
        return it->second;
    }

    void validate() const
    {
        if (k < 2 || k > n) throw ValidationError("coefficient family: needs 2 <= k <= n");
        if (p < 1) throw ValidationError("coefficient family: needs p >= 1");
        for (const auto& [a, form] : members) {
            if (a.size() != k - 1 || a.contains(1))
                throw ValidationError("coefficient family: bad key " + a.str());
            if (form.grade() != k * p || form.dimension() != n)
                throw GradeMismatch("coefficient family: member grade mismatch at " + a.str());
            for (const auto& [idx, c] : form.coeffs())
                if (idx.contains(1))
                    throw ValidationError("coefficient family: member " + a.str() +
                                          " is not annihilated by e^1");
        }
    }

    bool is_zero() const
    {
        for (const auto& [a, form] : members)
            if (!form.is_zero()) return false;
        return true;
    }
};

// F_p(w, alpha) = sum_A <D^A ; w^{p-1} ^ alpha> <alpha ; e^1 ^ e^A>.
inline Rational eval_F_p(const CoeffFamilyD& d, const Form& omega, const Form& alpha)
{
    if (omega.grade() != d.k || alpha.grade() != d.k)
        throw GradeMismatch("eval_F_p: arguments must have grade k");
    if (omega.dimension() != d.n || alpha.dimension() != d.n)
        throw DimensionMismatch("eval_F_p: ambient dimension mismatch");
    const Form power = wedge(wedge_power(omega, d.p - 1), alpha);
    Rational acc(0);
    for (const auto& [a, da] : d.members) {
        if (da.is_zero()) continue;
        const MultiIndex one_a = merge_sign(MultiIndex{1}, a).merged;
        acc += inner(da, power) * alpha.coeff(one_a);
    }
    return acc;
}

// Symbolic F_p(w, w) as a polynomial in the components of w.
inline Polynomial symbolic_F_p_diagonal(const CoeffFamilyD& d)
{
    const PolyForm omega = PolyForm::symbolic(d.n, d.k, Family::Omega);
    const PolyForm power = wedge_power(omega, d.p);
    Polynomial acc;
    for (const auto& [a, da] : d.members) {
        if (da.is_zero()) continue;
        const MultiIndex one_a = merge_sign(MultiIndex{1}, a).merged;
        acc += inner(PolyForm::from_form(da), power) * omega.coeff(one_a);
    }
    return acc;
}

// Canonical basis of the solution space of the identity
// F_p(w, a ^ b) = 0 for all w, a, b, with the constraint e^1 ~| D^A = 0
// imposed structurally (components touching 1 are simply not unknowns).
inline std::vector<CoeffFamilyD> solve_D_kernel(int n, int k, int p)
{
    if (k < 2 || k > n) throw ValidationError("solve_D_kernel: needs 2 <= k <= n");
    if (p < 1) throw ValidationError("solve_D_kernel: needs p >= 1");

    const auto keys = enumerate_excluding(n, k - 1, 1);
    const auto slots = k * p > n ? std::vector<MultiIndex>{} : enumerate_excluding(n, k * p, 1);
    if (slots.empty()) return {}; // no nonzero family exists at all

    const PolyForm omega = PolyForm::symbolic(n, k, Family::Omega);
    const PolyForm alpha = wedge(PolyForm::symbolic(n, 1, Family::DirA),
                                 PolyForm::symbolic(n, k - 1, Family::DirB));
    const PolyForm lhs = wedge(wedge_power(omega, p - 1), alpha);

    // F_p is linear in the unknown components; one polynomial multiplier per
    // unknown (A, K).
    std::vector<Polynomial> multipliers;
    multipliers.reserve(keys.size() * slots.size());
    for (const auto& a : keys) {
        const Polynomial pairing = alpha.coeff(merge_sign(MultiIndex{1}, a).merged);
        for (const auto& slot : slots) multipliers.push_back(lhs.coeff(slot) * pairing);
    }

    std::map<Monomial, std::size_t, MonomialLess> row_of;
    for (const auto& m : multipliers)
        for (const auto& [mono, c] : m.terms()) row_of.try_emplace(mono, row_of.size());

    QMatrix mat(row_of.size(), multipliers.size());
    for (std::size_t j = 0; j < multipliers.size(); ++j)
        for (const auto& [mono, c] : multipliers[j].terms()) mat.at(row_of.at(mono), j) = c;

    std::vector<CoeffFamilyD> basis;
    for (const auto& vec : kernel_basis(std::move(mat))) {
        CoeffFamilyD d = CoeffFamilyD::zero(n, k, p);
        std::size_t j = 0;
        for (const auto& a : keys)
            for (const auto& slot : slots) d.members.at(a).set(slot, vec[j++]);
        basis.push_back(std::move(d));
    }
    return basis;
}

// Exhaustive check of the orthogonality relations a kernel family satisfies.
struct OrthogonalityReport {
    struct Relation {
        std::string name;
        long long cases_checked = 0;
        bool pass = true;
        std::string first_failure; // empty when pass
    };
    std::vector<Relation> relations;

    bool all_pass() const
    {
        for (const auto& r : relations)
            if (!r.pass) return false;
        return true;
    }
};

inline OrthogonalityReport check_orthogonality(const CoeffFamilyD& d)
{
    const int n = d.n, k = d.k;
    OrthogonalityReport report;
    const auto keys = enumerate_excluding(n, k - 1, 1);

    {
        OrthogonalityReport::Relation rel{"e^R .| D^S + e^S .| D^R = 0", 0, true, ""};
        for (const auto& r : keys) {
            for (const auto& s : keys) {
                ++rel.cases_checked;
                const Form sum = interior(Form::basis(n, r), d.member(s)) +
                                 interior(Form::basis(n, s), d.member(r));
                if (!sum.is_zero() && rel.pass) {
                    rel.pass = false;
                    rel.first_failure = "R=" + r.str() + " S=" + s.str() + " -> " + sum.str();
                }
            }
        }
        report.relations.push_back(std::move(rel));
    }

    {
        OrthogonalityReport::Relation rel{"e^j .| D^J = 0 for j in {1} u J", 0, true, ""};
        for (const auto& key : keys) {
            std::vector<int> js = {1};
            js.insert(js.end(), key.begin(), key.end());
            for (int j : js) {
                ++rel.cases_checked;
                const Form image = interior(Form::basis(n, MultiIndex{j}), d.member(key));
                if (!image.is_zero() && rel.pass) {
                    rel.pass = false;
                    rel.first_failure =
                        "J=" + key.str() + " j=" + std::to_string(j) + " -> " + image.str();
                }
            }
        }
        report.relations.push_back(std::move(rel));
    }

    {
        OrthogonalityReport::Relation rel{
            "sgn(I,J)<D^I;e^J> = (-1)^k sgn(R,S)<D^R;e^S> on I u J = R u S", 0, true, ""};
        const Rational parity = k % 2 == 0 ? 1 : -1;
        for (const auto& i_idx : keys) {
            for (const auto& j_idx : enumerate(n, k * d.p)) {
                bool disjoint = true;
                for (int e : i_idx)
                    if (j_idx.contains(e)) { disjoint = false; break; }
                if (!disjoint) continue;
                const MultiIndex whole = merge_sign(i_idx, j_idx).merged;
                // every split of the union into (R, S) with R 1-free of
                // grade k-1
                for (const auto& r_idx : keys) {
                    bool inside = true;
                    for (int e : r_idx)
                        if (!whole.contains(e)) { inside = false; break; }
                    if (!inside) continue;
                    std::vector<int> rest;
                    for (int e : whole)
                        if (!r_idx.contains(e)) rest.push_back(e);
                    const MultiIndex s_idx(std::move(rest));
                    ++rel.cases_checked;
                    const Rational lhs = Rational(merge_sign(i_idx, j_idx).sign) *
                                         d.member(i_idx).coeff(j_idx);
                    const Rational rhs = parity * Rational(merge_sign(r_idx, s_idx).sign) *
                                         d.member(r_idx).coeff(s_idx);
                    if (lhs != rhs && rel.pass) {
                        rel.pass = false;
                        rel.first_failure = "I=" + i_idx.str() + " J=" + j_idx.str() +
                                            " R=" + r_idx.str() + " S=" + s_idx.str();
                    }
                }
            }
        }
        report.relations.push_back(std::move(rel));
    }

    return report;
}

// H with F_p(w, w) = <e^1 ^ H ; w^{p+1}> for every w, built from any kernel
// family: alpha_{R u S} = sgn(R,S) <D^R ; e^S>, well defined exactly when the
// family satisfies the orthogonality relations, then H = sum alpha_I e^I
// divided by p+1. Zero for odd k. The identity is re-verified symbolically
// before returning.
inline Form construct_H_p(const CoeffFamilyD& d)
{
    const int n = d.n, k = d.k, p = d.p;
    const int h_grade = k * p + k - 1;
    Form h(n, h_grade); // grade may exceed n; the form is then empty
    if (k % 2 == 0 && h_grade <= n) {
        const auto keys = enumerate_excluding(n, k - 1, 1);
        for (const auto& whole : enumerate_excluding(n, h_grade, 1)) {
            bool have = false;
            Rational alpha(0);
            for (const auto& r_idx : keys) {
                bool inside = true;
                for (int e : r_idx)
                    if (!whole.contains(e)) { inside = false; break; }
                if (!inside) continue;
                std::vector<int> rest;
                for (int e : whole)
                    if (!r_idx.contains(e)) rest.push_back(e);
                const MultiIndex s_idx(std::move(rest));
                const Rational candidate =
                    Rational(merge_sign(r_idx, s_idx).sign) * d.member(r_idx).coeff(s_idx);
                if (!have) {
                    alpha = candidate;
                    have = true;
                } else if (candidate != alpha) {
                    throw IllDefinedAlphaError(
                        "construct_H_p: decompositions of " + whole.str() +
                        " disagree; family violates the kernel hypothesis");
                }
            }
            if (have) h.add_to(whole, alpha);
        }
        h *= Rational(1, p + 1);
    }

    // F_p(w, w) = <e^1 ^ H ; w^{p+1}> must hold as a polynomial identity.
    const PolyForm omega = PolyForm::symbolic(n, k, Family::Omega);
    const Polynomial lhs = symbolic_F_p_diagonal(d);
    const Polynomial rhs =
        inner(PolyForm::from_form(wedge(Form::basis(n, MultiIndex{1}), h)),
              wedge_power(omega, p + 1));
    if (!(lhs - rhs).is_zero())
        throw Error("construct_H_p: diagonal identity failed; family is not in the kernel");
    return h;
}

// A form whose (p-1)-st power is exactly (p-1)! e^Q: the sum of the p-1
// consecutive grade-k blocks of Q. Needs k even as soon as p >= 3, since odd
// grades square to zero.
inline Form power_preimage(const MultiIndex& q, int k, int p, int n)
{
    if (p < 2) throw ValidationError("power_preimage: needs p >= 2");
    if (p >= 3 && k % 2 != 0)
        throw ValidationError("power_preimage: odd block grade only supports p = 2");
    if (q.size() != (p - 1) * k)
        throw GradeMismatch("power_preimage: index grade must be (p-1)k");
    if (q.max_entry() > n) throw DimensionMismatch("power_preimage: index exceeds dimension");
    Form omega(n, k);
    for (int block = 0; block < p - 1; ++block) {
        std::vector<int> chunk;
        for (int i = 0; i < k; ++i) chunk.push_back(q[block * k + i]);
        omega.add_to(MultiIndex(std::move(chunk)), 1);
    }
    return omega;
}

} // namespace extaff
