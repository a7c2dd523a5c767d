#ifndef MTC_ROOT_OF_UNITY_HPP
#define MTC_ROOT_OF_UNITY_HPP

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <string>
#include <string_view>

#include "mtc/rational.hpp"

namespace mtc {

/// A complex number of modulus one, e^{2 pi i p/q}, stored as the reduced
/// rational exponent p/q with 0 <= p/q < 1. All arithmetic is exact; every
/// twist, monodromy charge, KSB value and epsilon-form value lives here.
class RootOfUnity {
public:
    RootOfUnity() : turns_(0) {}
    explicit RootOfUnity(Rational turns) : turns_(mod_one(turns)) {}

    static RootOfUnity from_fraction(const Int& num, const Int& den) {
        if (den == 0)
            throw ParseError("root of unity with zero denominator");
        return RootOfUnity(Rational(num, den));
    }

    static RootOfUnity one() { return RootOfUnity(); }
    static RootOfUnity minus_one() { return RootOfUnity(Rational(1, 2)); }

    static RootOfUnity parse(std::string_view text) {
        return RootOfUnity(parse_fraction(text));
    }

    /// Exponent as a rational number of turns, canonical in [0, 1).
    const Rational& exponent() const { return turns_; }

    bool is_one() const { return turns_ == 0; }

    /// Multiplicative order, i.e. the denominator of the exponent.
    Int order() const { return denominator(turns_); }

    RootOfUnity operator*(const RootOfUnity& o) const {
        return RootOfUnity(turns_ + o.turns_);
    }
    RootOfUnity& operator*=(const RootOfUnity& o) {
        turns_ = mod_one(turns_ + o.turns_);
        return *this;
    }
    RootOfUnity operator/(const RootOfUnity& o) const {
        return RootOfUnity(turns_ - o.turns_);
    }

    RootOfUnity inverse() const { return RootOfUnity(-turns_); }
    RootOfUnity conjugate() const { return inverse(); }

    RootOfUnity pow(const Int& n) const { return RootOfUnity(turns_ * Rational(n)); }
    RootOfUnity pow(long long n) const { return pow(Int(n)); }

    /// Both square roots, exponents d/2 and d/2 + 1/2.
    std::array<RootOfUnity, 2> square_roots() const {
        Rational half = turns_ / 2;
        return {RootOfUnity(half), RootOfUnity(half + Rational(1, 2))};
    }

    std::complex<double> to_complex() const {
        const Int& q = denominator(turns_);
        const Int& p = numerator(turns_);
        // Exact values on the axes.
        if (q == 1)
            return {1.0, 0.0};
        if (q == 2)
            return {-1.0, 0.0};
        if (q == 4)
            return (p == 1) ? std::complex<double>{0.0, 1.0}
                            : std::complex<double>{0.0, -1.0};
        const double angle = 2.0 * M_PI * turns_.convert_to<double>();
        return {std::cos(angle), std::sin(angle)};
    }

    std::string str() const { return format_fraction(turns_); }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
        if (a.turns_ < b.turns_)
            return std::strong_ordering::less;
        if (b.turns_ < a.turns_)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational turns_;
};

} // namespace mtc

#endif
