#ifndef MTC_COMPLEX_APPROX_HPP
#define MTC_COMPLEX_APPROX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace mtc {

inline constexpr double kDefaultTol = 1e-8;

// Tolerance-relative comparison: |a - b| <= tol * max(1, |a|, |b|).
inline bool approx_equal(std::complex<double> a, std::complex<double> b, double tol) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

inline bool approx_equal(double a, double b, double tol) {
    return approx_equal(std::complex<double>(a, 0.0), std::complex<double>(b, 0.0), tol);
}

/// A complex value paired with the tolerance under which it was produced.
/// S-matrix entries and quantum dimensions are floats; everything that can
/// be exact goes through RootOfUnity instead.
struct ComplexApprox {
    std::complex<double> value{0.0, 0.0};
    double tol = kDefaultTol;

    double re() const { return value.real(); }
    double im() const { return value.imag(); }

    bool equals(std::complex<double> v) const { return approx_equal(value, v, tol); }
};

// 15 significant digits, enough to round-trip the working precision of the
// pipeline through the decimal-string file format.
inline std::string format_decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

} // namespace mtc

#endif
