#pragma once

#include <map>
#include <utility>

#include "extaff/form.hpp"
#include "extaff/polynomial.hpp"

namespace extaff {

// Exterior form with polynomial coefficients: the symbolic counterpart of
// Form, used to expand products of fully symbolic arguments and directions.
// Same sparse conventions (absent = zero, zeros never stored).
class PolyForm {
public:
    PolyForm(int n, int k) : n_(n), k_(k)
    {
        if (n < 1) throw ValidationError("polyform: dimension must be >= 1");
        if (k < 0) throw ValidationError("polyform: grade must be >= 0");
    }

    // The generic element of Lambda^k with one fresh variable per basis index.
    static PolyForm symbolic(int n, int k, Family family)
    {
        PolyForm out(n, k);
        for (const auto& idx : enumerate(n, k))
            out.coeffs_[idx] = Polynomial::variable(Var{family, idx});
        return out;
    }

    static PolyForm from_form(const Form& f)
    {
        PolyForm out(f.dimension(), f.grade());
        for (const auto& [idx, c] : f.coeffs()) out.coeffs_[idx] = Polynomial::constant(c);
        return out;
    }

    static PolyForm unit_scalar(int n)
    {
        PolyForm out(n, 0);
        out.coeffs_[MultiIndex{}] = Polynomial::constant(1);
        return out;
    }

    int dimension() const { return n_; }
    int grade() const { return k_; }

    const std::map<MultiIndex, Polynomial>& coeffs() const { return coeffs_; }

    Polynomial coeff(const MultiIndex& idx) const
    {
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? Polynomial{} : it->second;
    }

    void add_to(const MultiIndex& idx, const Polynomial& p)
    {
        if (p.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(idx, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    PolyForm& operator+=(const PolyForm& other)
    {
        if (n_ != other.n_) throw DimensionMismatch("polyform: ambient dimensions differ");
        if (k_ != other.k_) throw GradeMismatch("polyform: grades differ");
        for (const auto& [idx, p] : other.coeffs_) add_to(idx, p);
        return *this;
    }

    friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }

    PolyForm scaled(const Polynomial& s) const
    {
        PolyForm out(n_, k_);
        if (s.is_zero()) return out;
        for (const auto& [idx, p] : coeffs_) out.coeffs_[idx] = p * s;
        return out;
    }

private:
    int n_, k_;
    std::map<MultiIndex, Polynomial> coeffs_;
};

inline PolyForm wedge(const PolyForm& u, const PolyForm& v)
{
    if (u.dimension() != v.dimension())
        throw DimensionMismatch("wedge: ambient dimensions differ");
    PolyForm out(u.dimension(), u.grade() + v.grade());
    if (out.grade() > u.dimension()) return out;
    for (const auto& [iu, pu] : u.coeffs()) {
        for (const auto& [iv, pv] : v.coeffs()) {
            bool overlap = false;
            for (int e : iv)
                if (iu.contains(e)) { overlap = true; break; }
            if (overlap) continue;
            const auto merged = merge_sign(iu, iv);
            out.add_to(merged.merged, pu * pv * Rational(merged.sign));
        }
    }
    return out;
}

inline PolyForm wedge_power(const PolyForm& u, int s)
{
    if (s < 0) throw ValidationError("wedge_power: negative exponent");
    PolyForm out = PolyForm::unit_scalar(u.dimension());
    for (int i = 0; i < s; ++i) out = wedge(out, u);
    return out;
}

inline PolyForm interior(const PolyForm& f, const PolyForm& u)
{
    if (f.dimension() != u.dimension())
        throw DimensionMismatch("interior: ambient dimensions differ");
    if (f.grade() > u.grade()) return PolyForm(u.dimension(), 0);
    PolyForm out(u.dimension(), u.grade() - f.grade());
    for (const auto& [is, ps] : f.coeffs()) {
        for (const auto& [ik, pk] : u.coeffs()) {
            bool subset = true;
            for (int e : is)
                if (!ik.contains(e)) { subset = false; break; }
            if (!subset) continue;
            std::vector<int> rest;
            for (int e : ik)
                if (!is.contains(e)) rest.push_back(e);
            MultiIndex rest_idx(std::move(rest));
            const auto merged = merge_sign(is, rest_idx);
            out.add_to(rest_idx, ps * pk * Rational(merged.sign));
        }
    }
    return out;
}

inline PolyForm hodge(const PolyForm& u)
{
    const int n = u.dimension();
    if (u.grade() > n) throw GradeMismatch("hodge: grade exceeds dimension");
    PolyForm out(n, n - u.grade());
    for (const auto& [idx, p] : u.coeffs()) {
        const MultiIndex comp = complement(idx, n);
        const auto merged = merge_sign(idx, comp);
        out.add_to(comp, p * Rational(merged.sign));
    }
    return out;
}

inline Polynomial inner(const PolyForm& u, const PolyForm& v)
{
    if (u.dimension() != v.dimension())
        throw DimensionMismatch("inner: ambient dimensions differ");
    if (u.grade() != v.grade()) throw GradeMismatch("inner: grades differ");
    Polynomial acc;
    for (const auto& [idx, p] : u.coeffs()) {
        auto it = v.coeffs().find(idx);
        if (it != v.coeffs().end()) acc += p * it->second;
    }
    return acc;
}

} // namespace extaff
