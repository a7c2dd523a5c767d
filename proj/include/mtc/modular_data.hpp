#ifndef MTC_MODULAR_DATA_HPP
#define MTC_MODULAR_DATA_HPP

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "mtc/complex_approx.hpp"
#include "mtc/errors.hpp"
#include "mtc/report.hpp"
#include "mtc/root_of_unity.hpp"

namespace mtc {

/// Modular data of a modular tensor category: an ordered list of simple
/// labels with label 0 the tensor unit, the normalized (unitary) S-matrix,
/// and the exact twists theta_i. Immutable by convention once built.
struct ModularData {
    std::string name;
    std::vector<std::string> labels;
    Eigen::MatrixXcd s;
    std::vector<RootOfUnity> theta;
    double tol = kDefaultTol;

    int size() const { return static_cast<int>(labels.size()); }

    const std::string& label(int i) const { return labels.at(static_cast<size_t>(i)); }

    // Shape consistency between labels, S and theta. Throws StructureError;
    // axiom failures are reported by validate() instead.
    void require_consistent_shape() const {
        const auto n = static_cast<Eigen::Index>(labels.size());
        if (n < 1)
            throw StructureError("modular data needs at least one label");
        if (s.rows() != n || s.cols() != n)
            throw StructureError("S-matrix shape " + std::to_string(s.rows()) + "x" +
                                 std::to_string(s.cols()) + " does not match " +
                                 std::to_string(n) + " labels");
        if (static_cast<Eigen::Index>(theta.size()) != n)
            throw StructureError("theta list has " + std::to_string(theta.size()) +
                                 " entries for " + std::to_string(n) + " labels");
    }
};

namespace detail {

// Raw Verlinde sum sum_m S_im S_jm conj(S_km) / S_0m.
inline std::complex<double> verlinde_sum(const ModularData& md, int i, int j, int k) {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < md.size(); ++m)
        acc += md.s(i, m) * md.s(j, m) * std::conj(md.s(k, m)) / md.s(0, m);
    return acc;
}

// S^2 should be a permutation matrix (charge conjugation). Returns the
// permutation and the worst deviation of entries from {0,1}.
inline bool permutation_from_s_squared(const ModularData& md, std::vector<int>& perm,
                                       double& residual) {
    const int n = md.size();
    const Eigen::MatrixXcd p = md.s * md.s;
    perm.assign(static_cast<size_t>(n), -1);
    residual = 0.0;
    bool ok = true;
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int found = -1;
        for (int j = 0; j < n; ++j) {
            const double dist_zero = std::abs(p(i, j));
            const double dist_one = std::abs(p(i, j) - std::complex<double>(1.0, 0.0));
            residual = std::max(residual, std::min(dist_zero, dist_one));
            if (dist_one <= md.tol) {
                if (found >= 0 || hit[static_cast<size_t>(j)])
                    ok = false;
                found = j;
                hit[static_cast<size_t>(j)] = true;
            } else if (dist_zero > md.tol) {
                ok = false;
            }
        }
        if (found < 0)
            ok = false;
        perm[static_cast<size_t>(i)] = found;
    }
    if (ok)
        for (int i = 0; i < n; ++i) {
            const int c = perm[static_cast<size_t>(i)];
            if (c < 0 || perm[static_cast<size_t>(c)] != i)
                ok = false; // must be an involution
        }
    return ok;
}

} // namespace detail

/// Axiom checks on modular data: unit twist, S symmetry, unitarity,
/// S^2-permutation, and Verlinde integrality. Throws only on shape errors.
inline Report validate(const ModularData& md) {
    md.require_consistent_shape();
    const int n = md.size();
    Report report;

    report.add("unit twist", md.theta[0].is_one(), md.theta[0].is_one() ? 0.0 : 1.0,
               md.theta[0].is_one() ? "" : "theta_0 = " + md.theta[0].str());

    double sym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sym = std::max(sym, std::abs(md.s(i, j) - md.s(j, i)));
    report.add("S symmetry", sym <= md.tol, sym);

    const Eigen::MatrixXcd gram = md.s * md.s.adjoint() -
                                  Eigen::MatrixXcd::Identity(n, n);
    const double uni = gram.cwiseAbs().maxCoeff();
    report.add("S unitarity", uni <= md.tol, uni);

    std::vector<int> perm;
    double perm_res = 0.0;
    const bool perm_ok = detail::permutation_from_s_squared(md, perm, perm_res);
    report.add("S^2 permutation", perm_ok, perm_res,
               perm_ok ? "" : "S^2 is not an involutive permutation matrix");

    double verlinde_res = 0.0;
    bool verlinde_ok = true;
    std::string witness;
    for (int i = 0; i < n && verlinde_ok; ++i)
        for (int j = 0; j < n && verlinde_ok; ++j)
            for (int k = 0; k < n; ++k) {
                const std::complex<double> v = detail::verlinde_sum(md, i, j, k);
                const double rounded = std::round(v.real());
                const double res = std::max(std::abs(v.real() - rounded), std::abs(v.imag()));
                verlinde_res = std::max(verlinde_res, res);
                if (res > md.tol || rounded < -0.5) {
                    verlinde_ok = false;
                    witness = "N(" + std::to_string(i) + "," + std::to_string(j) + ";" +
                              std::to_string(k) + ")";
                    break;
                }
            }
    report.add("Verlinde integrality", verlinde_ok, verlinde_res, witness);

    return report;
}

/// Quantum dimension S_0i / S_00.
inline ComplexApprox qdim(const ModularData& md, int i) {
    md.require_consistent_shape();
    return {md.s(0, i) / md.s(0, 0), md.tol};
}

} // namespace mtc

#endif
