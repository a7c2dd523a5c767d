#ifndef MTC_RATIONAL_HPP
#define MTC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "mtc/errors.hpp"

namespace mtc {

// Exact arithmetic backing the whole pipeline. Denominators stay small in
// practice (bounded by the category data), but nothing here may wrap.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& num, const Int& den) {
    Int q = num / den; // truncates toward zero
    if ((num % den) != 0 && ((num < 0) != (den < 0)))
        --q;
    return q;
}

// Fractional part in [0, 1).
inline Rational mod_one(const Rational& r) {
    Int fl = floor_div(numerator(r), denominator(r));
    return r - Rational(fl);
}

inline Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

// Always emits an explicit denominator, e.g. "0/1", "3/4".
inline std::string format_fraction(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" (q != 0) or a bare integer "p"; non-reduced input is
// canonicalized by the Rational constructor.
inline Rational parse_fraction(std::string_view text) {
    auto fail = [&] { throw ParseError("invalid fraction '" + std::string(text) + "'"); };
    if (text.empty())
        fail();
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text))
                fail();
            return Rational(Int(std::string(text)));
        }
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            fail();
        Int d{std::string(den)};
        if (d == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(Int(std::string(num)), d);
    } catch (const std::exception& e) {
        throw ParseError("invalid fraction '" + std::string(text) + "': " + e.what());
    }
}

} // namespace mtc

#endif
