#ifndef MTC_TORUS_HPP
#define MTC_TORUS_HPP

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtc/bihom.hpp"
#include "mtc/cyclotomic.hpp"
#include "mtc/fusion.hpp"
#include "mtc/picard.hpp"

namespace mtc {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = Eigen::MatrixXi;

/// A torus partition function candidate: nonnegative integer matrix indexed
/// (left-mover label i, right-mover label j), with its validation flags.
struct TorusInvariant {
    IntMatrix z;
    std::string algebra_id;
    bool modular_invariant = false;
    bool physical = false;
};

/// Z_ij(A) = (1/|H|) sum_{g,h in H} chi_{U_i}(h) Xi(h,g) [jbar = g.i],
/// evaluated exactly: every entry is a sum of roots of unity divided by |H|,
/// reduced in the cyclotomic ring. A non-rational entry means the candidate
/// bihomomorphism is inconsistent, and is an error naming the entry.
inline RationalMatrix ks_partition_function(const ModularData& md, const FusionTable& ft,
                                            const PicardGroup& pg, const Subgroup& support,
                                            const Bihomomorphism& ksb) {
    const int n = md.size();
    const Rational group_size(static_cast<int>(support.members.size()));
    RationalMatrix z(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), 0));

    for (int i = 0; i < n; ++i) {
        std::map<int, RootSum> cells; // column j -> accumulated terms
        for (int g : support.members) {
            const int j = ft.conj(pg.act(g, i)); // jbar = g.i
            RootSum& cell = cells[j];
            for (int h : support.members)
                cell.add(charge(md, pg, i, h) * ksb.eval_labels(h, g));
        }
        for (const auto& [j, sum] : cells) {
            const auto value = sum.rational_value();
            if (!value)
                throw DataError("inconsistent candidate: non-rational partition function "
                                "entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            z[static_cast<size_t>(i)][static_cast<size_t>(j)] = *value / group_size;
        }
    }
    return z;
}

/// True iff all entries are nonnegative integers and Z_00 = 1 (unique vacuum).
inline bool is_physical(const RationalMatrix& z) {
    if (z.empty() || z[0].empty() || z[0][0] != 1)
        return false;
    for (const auto& row : z)
        for (const auto& e : row)
            if (e < 0 || denominator(e) != 1)
                return false;
    return true;
}

inline bool is_physical(const IntMatrix& z) {
    if (z.rows() == 0 || z(0, 0) != 1)
        return false;
    return (z.array() >= 0).all();
}

inline std::optional<IntMatrix> to_integer_matrix(const RationalMatrix& z) {
    const int n = static_cast<int>(z.size());
    IntMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& e = z[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (denominator(e) != 1)
                return std::nullopt;
            out(i, j) = numerator(e).convert_to<int>();
        }
    return out;
}

/// T-invariance is exact: theta_i = theta_j on the support of Z. The
/// S-commutation check is float, with tolerance md.tol scaled by n.
inline Report modular_invariance_report(const ModularData& md, const IntMatrix& z) {
    md.require_consistent_shape();
    const int n = md.size();
    if (z.rows() != n || z.cols() != n)
        throw StructureError("partition function shape does not match modular data");
    Report report;

    bool t_ok = true;
    std::string witness;
    for (int i = 0; i < n && t_ok; ++i)
        for (int j = 0; j < n; ++j)
            if (z(i, j) != 0 && !(md.theta[static_cast<size_t>(i)] ==
                                  md.theta[static_cast<size_t>(j)])) {
                t_ok = false;
                witness = "Z_" + std::to_string(i) + std::to_string(j) + " != 0 but theta_" +
                          std::to_string(i) + " = " + md.theta[static_cast<size_t>(i)].str() +
                          " != theta_" + std::to_string(j) + " = " +
                          md.theta[static_cast<size_t>(j)].str();
                break;
            }
    report.add("T invariance (exact)", t_ok, t_ok ? 0.0 : 1.0, witness);

    const Eigen::MatrixXcd zc = z.cast<std::complex<double>>();
    const double s_res = (md.s * zc - zc * md.s).cwiseAbs().maxCoeff();
    const double s_tol = md.tol * n;
    report.add("S commutation", s_res <= s_tol, s_res, "tolerance " + format_decimal(s_tol));

    return report;
}

inline bool is_modular_invariant(const ModularData& md, const IntMatrix& z) {
    return modular_invariance_report(md, z).ok();
}

struct SpectrumCounts {
    long long module_count_hint = 0; // sum_i Z_{i,ibar}
    long long defect_count_hint = 0; // sum_ij Z_ij^2
};

/// Standard cross-check counts: trace against charge conjugation counts
/// simple modules, the entry-wise square sum counts simple defects.
inline SpectrumCounts spectrum_counts(const FusionTable& ft, const IntMatrix& z) {
    SpectrumCounts out;
    for (int i = 0; i < z.rows(); ++i) {
        out.module_count_hint += z(i, ft.conj(i));
        for (int j = 0; j < z.cols(); ++j)
            out.defect_count_hint += static_cast<long long>(z(i, j)) * z(i, j);
    }
    return out;
}

} // namespace mtc

#endif
