#ifndef MTC_BUILTINS_HPP
#define MTC_BUILTINS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "mtc/modular_data.hpp"

namespace mtc {

/// Cyclic anyon model on Z_N, N even: theta_a = e^{2 pi i a^2/(2N)},
/// S_ab = N^{-1/2} e^{-2 pi i ab/N}. Fusion is addition mod N, so every
/// label is invertible. Odd N is rejected (the quadratic refinement is
/// not unique there).
inline ModularData builtin_cyclic(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("cyclic model needs an even N >= 2, got " +
                                    std::to_string(n));
    ModularData md;
    md.name = "cyclic:" + std::to_string(n);
    md.labels.reserve(static_cast<size_t>(n));
    md.theta.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        md.labels.push_back(std::to_string(a));
        md.theta.push_back(RootOfUnity::from_fraction(Int(a) * a, Int(2) * n));
    }
    md.s.resize(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double angle = -2.0 * M_PI * static_cast<double>((a * b) % n) / n;
            md.s(a, b) = norm * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    return md;
}

/// su(2) level k model: labels a = 0..k, theta_a = e^{2 pi i a(a+2)/(4(k+2))},
/// S_ab = sqrt(2/(k+2)) sin(pi (a+1)(b+1)/(k+2)).
inline ModularData builtin_su2(int level) {
    if (level < 1)
        throw std::invalid_argument("su2 model needs level k >= 1, got " +
                                    std::to_string(level));
    ModularData md;
    md.name = "su2:" + std::to_string(level);
    const int n = level + 1;
    md.labels.reserve(static_cast<size_t>(n));
    md.theta.reserve(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        md.labels.push_back(std::to_string(a));
        md.theta.push_back(RootOfUnity::from_fraction(Int(a) * (a + 2), Int(4) * (level + 2)));
    }
    md.s.resize(n, n);
    const double norm = std::sqrt(2.0 / (level + 2));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            md.s(a, b) = norm * std::sin(M_PI * (a + 1.0) * (b + 1.0) / (level + 2));
    return md;
}

inline std::vector<std::string> builtin_families() {
    return {"su2:<k>    su(2) level k, k >= 1",
            "cyclic:<N> cyclic Z_N model, N even >= 2"};
}

/// Parses "family:parameter" specs such as "su2:4" or "cyclic:6".
inline ModularData make_builtin(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("builtin spec must be family:parameter, got '" + spec + "'");
    const std::string family = spec.substr(0, colon);
    int param = 0;
    try {
        size_t used = 0;
        param = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw ParseError("bad builtin parameter in '" + spec + "'");
    }
    try {
        if (family == "su2")
            return builtin_su2(param);
        if (family == "cyclic")
            return builtin_cyclic(param);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown builtin family '" + family + "'");
}

} // namespace mtc

#endif
