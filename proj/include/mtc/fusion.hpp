#ifndef MTC_FUSION_HPP
#define MTC_FUSION_HPP

#include <cmath>
#include <string>
#include <vector>

#include "mtc/modular_data.hpp"

namespace mtc {

/// Integer fusion multiplicities N_ij^k recovered from the S-matrix by the
/// Verlinde formula, plus the charge conjugation permutation i -> ibar
/// defined by N_i,ibar^0 = 1.
class FusionTable {
public:
    FusionTable() = default;
    FusionTable(int n, std::vector<int> mult, std::vector<int> conj)
        : n_(n), mult_(std::move(mult)), conj_(std::move(conj)) {}

    int size() const { return n_; }

    int n(int i, int j, int k) const {
        return mult_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
    }

    int conj(int i) const { return conj_[static_cast<size_t>(i)]; }
    const std::vector<int>& conjugation() const { return conj_; }

    /// Labels k with N_ij^k > 0.
    std::vector<int> product(int i, int j) const {
        std::vector<int> out;
        for (int k = 0; k < n_; ++k)
            if (n(i, j, k) > 0)
                out.push_back(k);
        return out;
    }

private:
    int n_ = 0;
    std::vector<int> mult_;
    std::vector<int> conj_;
};

/// Verlinde inversion of the S-matrix. A rounding residual above md.tol is a
/// hard error naming the offending coefficient, never silently floored.
inline FusionTable fusion(const ModularData& md) {
    md.require_consistent_shape();
    const int n = md.size();
    std::vector<int> mult(static_cast<size_t>(n) * n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const std::complex<double> v = detail::verlinde_sum(md, i, j, k);
                const double rounded = std::round(v.real());
                const double res = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
                if (res > md.tol || rounded < -0.5)
                    throw DataError("non-integral fusion coefficient N(" + std::to_string(i) +
                                    "," + std::to_string(j) + ";" + std::to_string(k) +
                                    ") = " + std::to_string(v.real()) + "+" +
                                    std::to_string(v.imag()) + "i");
                mult[(static_cast<size_t>(i) * n + j) * n + k] = static_cast<int>(rounded);
            }

    std::vector<int> conj(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        int found = -1;
        for (int j = 0; j < n; ++j)
            if (mult[(static_cast<size_t>(i) * n + j) * n + 0] == 1) {
                if (found >= 0)
                    throw DataError("label " + std::to_string(i) + " has several duals");
                found = j;
            }
        if (found < 0)
            throw DataError("label " + std::to_string(i) + " has no dual");
        conj[static_cast<size_t>(i)] = found;
    }
    for (int i = 0; i < n; ++i)
        if (conj[static_cast<size_t>(conj[static_cast<size_t>(i)])] != i)
            throw DataError("conjugation is not an involution at label " + std::to_string(i));
    if (conj[0] != 0)
        throw DataError("tensor unit is not self-dual");

    return FusionTable(n, std::move(mult), std::move(conj));
}

} // namespace mtc

#endif
