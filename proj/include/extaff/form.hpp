#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "extaff/linalg.hpp"
#include "extaff/multiindex.hpp"
#include "extaff/rational.hpp"

namespace extaff {

// Sparse exterior form: an element of Lambda^k(R^n) stored as a map from
// basis multi-index to rational coefficient. Absent entries are zero and
// zeros are never stored, so map equality is form equality.
class Form {
public:
    Form(int n, int k) : n_(n), k_(k)
    {
        if (n < 1) throw ValidationError("form: dimension must be >= 1");
        if (k < 0) throw ValidationError("form: grade must be >= 0");
    }

    static Form zero(int n, int k) { return Form(n, k); }

    static Form unit_scalar(int n)
    {
        Form f(n, 0);
        f.set(MultiIndex{}, 1);
        return f;
    }

    // e^I
    static Form basis(int n, const MultiIndex& idx)
    {
        Form f(n, idx.size());
        f.set(idx, 1);
        return f;
    }

    static Form volume(int n) { return basis(n, complement(MultiIndex{}, n)); }

    int dimension() const { return n_; }
    int grade() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }

    Rational coeff(const MultiIndex& idx) const
    {
        auto it = coeffs_.find(idx);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void set(const MultiIndex& idx, Rational value)
    {
        check_index(idx);
        if (value == 0)
            coeffs_.erase(idx);
        else
            coeffs_[idx] = std::move(value);
    }

    void add_to(const MultiIndex& idx, const Rational& value)
    {
        check_index(idx);
        if (value == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(idx, value);
        if (!inserted) {
            it->second += value;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    bool operator==(const Form& other) const = default;

    Form operator-() const
    {
        Form out(n_, k_);
        for (const auto& [idx, v] : coeffs_) out.coeffs_[idx] = -v;
        return out;
    }

    Form& operator+=(const Form& other)
    {
        require_compatible(other);
        for (const auto& [idx, v] : other.coeffs_) add_to(idx, v);
        return *this;
    }

    Form& operator-=(const Form& other)
    {
        require_compatible(other);
        for (const auto& [idx, v] : other.coeffs_) add_to(idx, -v);
        return *this;
    }

    Form& operator*=(const Rational& scalar)
    {
        if (scalar == 0) {
            coeffs_.clear();
        } else {
            for (auto& [idx, v] : coeffs_) v *= scalar;
        }
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Rational& s) { return a *= s; }
    friend Form operator*(const Rational& s, Form a) { return a *= s; }
    friend Form operator/(Form a, const Rational& s)
    {
        if (s == 0) throw Error("form division by zero scalar");
        return a *= Rational(1) / s;
    }

    std::string str() const
    {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [idx, v] : coeffs_) {
            if (!first) s += " + ";
            s += to_fraction_string(v) + "*e" + idx.str();
            first = false;
        }
        return s;
    }

private:
    void check_index(const MultiIndex& idx) const
    {
        if (idx.size() != k_)
            throw GradeMismatch("index " + idx.str() + " has grade " + std::to_string(idx.size()) +
                                ", form has grade " + std::to_string(k_));
        if (idx.max_entry() > n_)
            throw DimensionMismatch("index " + idx.str() + " exceeds dimension " +
                                    std::to_string(n_));
    }

    void require_compatible(const Form& other) const
    {
        if (n_ != other.n_)
            throw DimensionMismatch("form dimensions differ: " + std::to_string(n_) + " vs " +
                                    std::to_string(other.n_));
        if (k_ != other.k_)
            throw GradeMismatch("form grades differ: " + std::to_string(k_) + " vs " +
                                std::to_string(other.k_));
    }

    int n_, k_;
    std::map<MultiIndex, Rational> coeffs_;
};

// Exterior product. Grade k+l; identically zero past the ambient dimension.
inline Form wedge(const Form& u, const Form& v)
{
    if (u.dimension() != v.dimension())
        throw DimensionMismatch("wedge: ambient dimensions differ");
    Form out(u.dimension(), u.grade() + v.grade());
    if (out.grade() > u.dimension()) return out;
    for (const auto& [iu, cu] : u.coeffs()) {
        for (const auto& [iv, cv] : v.coeffs()) {
            bool overlap = false;
            for (int e : iv)
                if (iu.contains(e)) { overlap = true; break; }
            if (overlap) continue;
            const auto merged = merge_sign(iu, iv);
            out.add_to(merged.merged, Rational(merged.sign) * cu * cv);
        }
    }
    return out;
}

// Plain s-fold product u ^ ... ^ u, no normalization; u^0 = 1.
inline Form wedge_power(const Form& u, int s)
{
    if (s < 0) throw ValidationError("wedge_power: negative exponent");
    Form out = Form::unit_scalar(u.dimension());
    for (int i = 0; i < s; ++i) out = wedge(out, u);
    return out;
}

// Scalar product on each grade: sum of products of matching coefficients.
inline Rational inner(const Form& u, const Form& v)
{
    if (u.dimension() != v.dimension())
        throw DimensionMismatch("inner: ambient dimensions differ");
    if (u.grade() != v.grade())
        throw GradeMismatch("inner: grades differ");
    Rational acc(0);
    const bool u_smaller = u.coeffs().size() <= v.coeffs().size();
    const Form& a = u_smaller ? u : v;
    const Form& b = u_smaller ? v : u;
    for (const auto& [idx, c] : a.coeffs()) {
        auto it = b.coeffs().find(idx);
        if (it != b.coeffs().end()) acc += c * it->second;
    }
    return acc;
}

// Interior product, the adjoint of left exterior multiplication:
// <f ~| u ; beta> = <u ; f ^ beta>. On basis forms e^S ~| e^K =
// sgn(S, K\S) e^{K\S} when S is contained in K, zero otherwise.
inline Form interior(const Form& f, const Form& u)
{
    if (f.dimension() != u.dimension())
        throw DimensionMismatch("interior: ambient dimensions differ");
    if (f.grade() > u.grade()) return Form::zero(u.dimension(), 0);
    Form out(u.dimension(), u.grade() - f.grade());
    for (const auto& [is, cs] : f.coeffs()) {
        for (const auto& [ik, ck] : u.coeffs()) {
            bool subset = true;
            for (int e : is)
                if (!ik.contains(e)) { subset = false; break; }
            if (!subset) continue;
            std::vector<int> rest;
            rest.reserve(static_cast<std::size_t>(ik.size() - is.size()));
            for (int e : ik)
                if (!is.contains(e)) rest.push_back(e);
            const auto merged = merge_sign(is, MultiIndex(rest));
            out.add_to(MultiIndex(std::move(rest)), Rational(merged.sign) * cs * ck);
        }
    }
    return out;
}

// Hodge star with the convention *e^I = sgn(I, I^c) e^{I^c}, which gives
// u ^ *u = |u|^2 e^{(1..n)} and ** = (-1)^{k(n-k)}.
inline Form hodge(const Form& u)
{
    const int n = u.dimension();
    if (u.grade() > n) throw GradeMismatch("hodge: grade exceeds dimension");
    Form out(n, n - u.grade());
    for (const auto& [idx, c] : u.coeffs()) {
        const MultiIndex comp = complement(idx, n);
        const auto merged = merge_sign(idx, comp);
        out.add_to(comp, Rational(merged.sign) * c);
    }
    return out;
}

// Tangential/normal split of u along a nonzero axis x:
// u = x ^ tangential + normal with x ~| tangential = x ~| normal = 0.
// Any nonzero rational axis is accepted; the unit-vector statement is
// recovered by dividing the contraction by |x|^2.
struct Decomposition {
    Form tangential; // grade k-1
    Form normal;     // grade k
    Form axis;       // grade 1
};

inline Decomposition decompose(const Form& u, const Form& x)
{
    if (x.grade() != 1) throw GradeMismatch("decompose: axis must have grade 1");
    if (x.dimension() != u.dimension())
        throw DimensionMismatch("decompose: ambient dimensions differ");
    const Rational norm2 = inner(x, x);
    if (norm2 == 0) throw ZeroAxisError("decompose: axis is zero");
    Form tangential = interior(x, u) / norm2;
    Form normal = u - wedge(x, tangential);
    return Decomposition{std::move(tangential), std::move(normal), x};
}

// Given a != 0, returns (c, d) with c ^ d = a ^ b and c ~| d = 0.
inline std::pair<Form, Form> orthogonalize_direction(const Form& a, const Form& b)
{
    if (a.grade() != 1) throw GradeMismatch("orthogonalize_direction: a must have grade 1");
    if (a.dimension() != b.dimension())
        throw DimensionMismatch("orthogonalize_direction: ambient dimensions differ");
    const Rational norm2 = inner(a, a);
    if (norm2 == 0) throw ZeroAxisError("orthogonalize_direction: a is zero");
    Form d = b - wedge(a, interior(a, b)) / norm2;
    return {a, std::move(d)};
}

// Exact basis of Ann(u, s) = { f in Lambda^s : f ~| u = 0 }, computed as the
// kernel of the contraction map over Q.
inline std::vector<Form> annihilator(const Form& u, int s)
{
    const int n = u.dimension();
    const int k = u.grade();
    if (s < 0 || s > k) throw ValidationError("annihilator: order out of range");
    const auto domain = enumerate(n, s);
    const auto range = enumerate(n, k - s);
    QMatrix m(range.size(), domain.size());
    for (std::size_t col = 0; col < domain.size(); ++col) {
        const Form image = interior(Form::basis(n, domain[col]), u);
        for (std::size_t row = 0; row < range.size(); ++row)
            m.at(row, col) = image.coeff(range[row]);
    }
    std::vector<Form> basis;
    for (const auto& vec : kernel_basis(std::move(m))) {
        Form f(n, s);
        for (std::size_t col = 0; col < domain.size(); ++col) f.set(domain[col], vec[col]);
        basis.push_back(std::move(f));
    }
    return basis;
}

// rank_s(u) = C(n,s) - dim Ann(u, s).
inline int rank_s(const Form& u, int s)
{
    return static_cast<int>(binomial(u.dimension(), s)) -
           static_cast<int>(annihilator(u, s).size());
}

} // namespace extaff
