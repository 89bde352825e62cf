#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "extaff/multiindex.hpp"
#include "extaff/rational.hpp"

namespace extaff {

// Variable families of the function model. Omega is the argument of a
// single-form function, Xi/Eta the two arguments of a pair function, DirA and
// DirB the symbolic direction components, T the line parameter.
enum class Family : std::uint8_t { Omega = 0, Xi = 1, Eta = 2, DirA = 3, DirB = 4, T = 5 };

inline const char* family_name(Family f)
{
    switch (f) {
    case Family::Omega: return "omega";
    case Family::Xi: return "xi";
    case Family::Eta: return "eta";
    case Family::DirA: return "a";
    case Family::DirB: return "b";
    case Family::T: return "t";
    }
    return "?";
}

struct Var {
    Family family;
    MultiIndex index; // empty for T

    auto operator<=>(const Var&) const = default;

    std::string str() const
    {
        std::string s = family_name(family);
        if (family != Family::T) s += index.str();
        return s;
    }
};

inline Var t_var() { return Var{Family::T, MultiIndex{}}; }

// A monomial is a sorted list of (variable, exponent) pairs, exponents >= 1.
// The empty monomial is 1.
using Monomial = std::vector<std::pair<Var, int>>;

inline int monomial_degree(const Monomial& m)
{
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Graded lexicographic order: total degree first, then higher power on the
// earlier variable wins. Used both as the canonical serialization order and
// for leading-monomial selection.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const
    {
        const int dx = monomial_degree(x), dy = monomial_degree(y);
        if (dx != dy) return dx < dy;
        std::size_t i = 0;
        while (i < x.size() && i < y.size()) {
            if (x[i].first != y[i].first) return y[i].first < x[i].first;
            if (x[i].second != y[i].second) return x[i].second < y[i].second;
            ++i;
        }
        return false; // equal degree and common prefix: identical
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

// Sparse multivariate polynomial over the rationals with exact arithmetic.
// Canonical: zero coefficients are never stored, so map equality decides
// polynomial equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;

    static Polynomial constant(Rational c)
    {
        Polynomial p;
        if (c != 0) p.terms_[Monomial{}] = std::move(c);
        return p;
    }

    static Polynomial variable(Var v, int exponent = 1)
    {
        if (exponent < 0) throw ValidationError("polynomial: negative exponent");
        Polynomial p;
        if (exponent == 0)
            p.terms_[Monomial{}] = 1;
        else
            p.terms_[Monomial{{std::move(v), exponent}}] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_value() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const
    {
        return terms_.empty() ? 0 : monomial_degree(terms_.rbegin()->first);
    }

    int degree_in(const Var& v) const
    {
        int d = 0;
        for (const auto& [m, c] : terms_)
            for (const auto& [mv, e] : m)
                if (mv == v && e > d) d = e;
        return d;
    }

    // Degree counting only the variables of one family.
    int degree_in_family(Family f) const
    {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int md = 0;
            for (const auto& [mv, e] : m)
                if (mv.family == f) md += e;
            if (md > d) d = md;
        }
        return d;
    }

    std::set<Var> variables() const
    {
        std::set<Var> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) out.insert(v);
        return out;
    }

    const Monomial& leading_monomial() const
    {
        if (terms_.empty()) throw Error("leading_monomial of zero polynomial");
        return terms_.rbegin()->first;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const Polynomial& other) const = default;

    Polynomial operator-() const
    {
        Polynomial out;
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& other)
    {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other)
    {
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s)
    {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [m, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }

    Polynomial pow(int e) const
    {
        if (e < 0) throw ValidationError("polynomial: negative power");
        Polynomial out = constant(1);
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    // Simultaneous substitution; variables absent from the map are kept.
    Polynomial substitute(const std::map<Var, Polynomial>& repl) const
    {
        std::map<std::pair<Var, int>, Polynomial> power_cache;
        auto power_of = [&](const Var& v, int e) -> const Polynomial& {
            auto key = std::make_pair(v, e);
            auto it = power_cache.find(key);
            if (it != power_cache.end()) return it->second;
            auto rit = repl.find(v);
            Polynomial base = rit != repl.end() ? rit->second : variable(v);
            return power_cache.emplace(key, base.pow(e)).first->second;
        };
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(c);
            for (const auto& [v, e] : m) term = term * power_of(v, e);
            out += term;
        }
        return out;
    }

    // Full evaluation; every variable of the polynomial must be assigned.
    Rational evaluate(const std::map<Var, Rational>& assignment) const
    {
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational term = c;
            for (const auto& [v, e] : m) {
                auto it = assignment.find(v);
                if (it == assignment.end())
                    throw Error("evaluate: no value for variable " + v.str());
                for (int i = 0; i < e; ++i) term *= it->second;
                if (term == 0) break;
            }
            acc += term;
        }
        return acc;
    }

    // Zeroes out every monomial using a variable outside `support`.
    Polynomial restrict_to_support(const std::set<Var>& support) const
    {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            bool keep = true;
            for (const auto& [v, e] : m)
                if (!support.count(v)) { keep = false; break; }
            if (keep) out.terms_[m] = c;
        }
        return out;
    }

    // Splits by powers of the line parameter t, stripping t itself:
    // result[m] is the coefficient polynomial of t^m.
    std::vector<Polynomial> collect_t_powers() const
    {
        std::vector<Polynomial> out;
        for (const auto& [m, c] : terms_) {
            int tdeg = 0;
            Monomial rest;
            for (const auto& [v, e] : m) {
                if (v.family == Family::T)
                    tdeg = e;
                else
                    rest.push_back({v, e});
            }
            if (static_cast<std::size_t>(tdeg) >= out.size())
                out.resize(static_cast<std::size_t>(tdeg) + 1);
            out[static_cast<std::size_t>(tdeg)].add_term(rest, c);
        }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) s += " + ";
            s += to_fraction_string(c);
            for (const auto& [v, e] : m) {
                s += "*" + v.str();
                if (e > 1) s += "^" + std::to_string(e);
            }
            first = false;
        }
        return s;
    }

private:
    TermMap terms_;
};

} // namespace extaff
