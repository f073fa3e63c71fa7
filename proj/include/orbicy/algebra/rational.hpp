#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "orbicy/errors.hpp"

namespace orbicy {

using Integer = boost::multiprecision::cpp_int;
// Always kept in lowest terms with a positive denominator by the backend.
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline Rational make_rational(std::int64_t n, std::int64_t d = 1) {
    if (d == 0) throw DivisionByZero();
    if (d < 0) n = -n, d = -d;
    return Rational(Integer(n), Integer(d));
}

inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

// Accepts "7", "-3", "3/6"; the result is reduced.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw UsageError("malformed rational: '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw UsageError("malformed rational: '" + std::string(text) + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw UsageError("malformed rational: '" + std::string(text) + "'");
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer d = parse_int(text.substr(slash + 1));
    if (d == 0) throw DivisionByZero();
    Integer n = parse_int(text.substr(0, slash));
    if (d < 0) n = -n, d = -d;
    return Rational(n, d);
}

// Fractional part in [0, 1).
inline Rational frac(const Rational& q) {
    Integer n = num(q), d = den(q);
    Integer r = n % d;
    if (r < 0) r += d;
    return Rational(r, d);
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t to_int64(const Integer& z) { return z.convert_to<std::int64_t>(); }

}  // namespace orbicy
