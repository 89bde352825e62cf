#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "extaff/errors.hpp"

namespace extaff {

// All arithmetic in this library is exact. Rational is an arbitrary-precision
// fraction kept in lowest terms with a positive denominator; there is no
// floating-point fallback anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Canonical fraction string: "p" for integers, "p/q" otherwise.
inline std::string to_fraction_string(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

// Parses "p" or "p/q" with optional leading '-'. Rejects anything else
// (decimals in particular are not a thing here).
inline Rational parse_fraction(std::string_view text)
{
    auto bad = [&] { throw ParseError("invalid fraction '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    const std::string_view num_part = text.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    auto check_digits = [&](std::string_view s, bool sign_ok) {
        if (s.empty()) bad();
        std::size_t i = (sign_ok && s[0] == '-') ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad();
    };
    check_digits(num_part, true);
    check_digits(den_part, false);
    const Integer num{std::string(num_part)};
    const Integer den{std::string(den_part)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

} // namespace extaff
