#ifndef MTC_PICARD_HPP
#define MTC_PICARD_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "mtc/abelian.hpp"
#include "mtc/fusion.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

/// The group of invertible simple objects (simple currents) of a modular
/// tensor category, extracted from the fusion table. Carries the quadratic
/// form q(g) = theta_g and the permutation action of each invertible on all
/// simple labels. All public accessors are keyed by category label.
class PicardGroup {
public:
    int size() const { return static_cast<int>(elements_.size()); }
    int num_labels() const { return static_cast<int>(pos_of_label_.size()); }

    /// Invertible labels in ascending order; elements()[0] == 0.
    const std::vector<int>& elements() const { return elements_; }

    bool is_invertible(int label) const { return pos_of_label_[static_cast<size_t>(label)] >= 0; }

    int pos(int label) const {
        const int p = pos_of_label_[static_cast<size_t>(label)];
        if (p < 0)
            throw DataError("label " + std::to_string(label) + " is not invertible");
        return p;
    }
    int label_at(int p) const { return elements_[static_cast<size_t>(p)]; }

    int mul(int g, int h) const { return label_at(group_.mul(pos(g), pos(h))); }
    int inv(int g) const { return label_at(group_.inv(pos(g))); }
    int order(int g) const { return group_.order(pos(g)); }
    int pow(int g, long long n) const { return label_at(group_.pow(pos(g), n)); }

    /// q(g) = theta_g, the quadratic form on the Picard group.
    const RootOfUnity& q(int g) const { return q_[static_cast<size_t>(pos(g))]; }

    /// Label of L_g (x) U_i.
    int act(int g, int label_i) const {
        return action_[static_cast<size_t>(pos(g))][static_cast<size_t>(label_i)];
    }

    /// Cyclic decomposition as (label, order) pairs, orders non-increasing.
    std::vector<std::pair<int, int>> generators() const {
        std::vector<std::pair<int, int>> out;
        for (size_t i = 0; i < group_.generators().size(); ++i)
            out.emplace_back(label_at(group_.generators()[i]), group_.generator_orders()[i]);
        return out;
    }

    /// The underlying abstract group on element positions.
    const AbelianGroup& group() const { return group_; }

    friend PicardGroup picard_group(const ModularData&, const FusionTable&);

private:
    std::vector<int> elements_;
    std::vector<int> pos_of_label_;
    AbelianGroup group_;
    std::vector<RootOfUnity> q_;
    std::vector<std::vector<int>> action_;
};

/// A subgroup of the Picard group, stored as sorted member labels.
struct Subgroup {
    const PicardGroup* pic = nullptr;
    std::vector<int> members; // sorted, always contains 0

    int size() const { return static_cast<int>(members.size()); }

    bool contains(int label) const {
        return std::binary_search(members.begin(), members.end(), label);
    }

    int index_of(int label) const {
        const auto it = std::lower_bound(members.begin(), members.end(), label);
        if (it == members.end() || *it != label)
            throw DataError("label " + std::to_string(label) + " is not in the subgroup");
        return static_cast<int>(it - members.begin());
    }

    /// The subgroup as a standalone abelian group over member indices.
    AbelianGroup as_group() const {
        const int k = size();
        std::vector<std::vector<int>> mul(static_cast<size_t>(k),
                                          std::vector<int>(static_cast<size_t>(k)));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                const int prod = pic->mul(members[static_cast<size_t>(a)],
                                          members[static_cast<size_t>(b)]);
                mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = index_of(prod);
            }
        return AbelianGroup::from_mul_table(std::move(mul));
    }

    std::string describe() const {
        std::string out = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i)
                out += ",";
            out += std::to_string(members[i]);
        }
        return out + "}";
    }

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.members == b.members;
    }
};

/// Extracts the Picard group. A label g is invertible iff g (x) gbar is
/// exactly the tensor unit with multiplicity one; detection is integer-exact,
/// no quantum-dimension thresholding.
inline PicardGroup picard_group(const ModularData& md, const FusionTable& ft) {
    md.require_consistent_shape();
    const int n = md.size();
    if (ft.size() != n)
        throw StructureError("fusion table size does not match modular data");

    PicardGroup pg;
    pg.pos_of_label_.assign(static_cast<size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        bool invertible = true;
        for (int k = 0; k < n; ++k) {
            const int expected = (k == 0) ? 1 : 0;
            if (ft.n(g, ft.conj(g), k) != expected) {
                invertible = false;
                break;
            }
        }
        if (invertible) {
            pg.pos_of_label_[static_cast<size_t>(g)] = static_cast<int>(pg.elements_.size());
            pg.elements_.push_back(g);
        }
    }

    const int m = pg.size();
    std::vector<std::vector<int>> mul(static_cast<size_t>(m),
                                      std::vector<int>(static_cast<size_t>(m)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const auto prod = ft.product(pg.elements_[static_cast<size_t>(a)],
                                         pg.elements_[static_cast<size_t>(b)]);
            if (prod.size() != 1 ||
                ft.n(pg.elements_[static_cast<size_t>(a)], pg.elements_[static_cast<size_t>(b)],
                     prod[0]) != 1)
                throw DataError("fusion of invertibles " +
                                std::to_string(pg.elements_[static_cast<size_t>(a)]) + " and " +
                                std::to_string(pg.elements_[static_cast<size_t>(b)]) +
                                " is not simple; data corrupt");
            const int p = pg.pos_of_label_[static_cast<size_t>(prod[0])];
            if (p < 0)
                throw DataError("product of invertibles gives non-invertible label " +
                                std::to_string(prod[0]));
            mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = p;
        }
    pg.group_ = AbelianGroup::from_mul_table(std::move(mul)); // asserts abelian group axioms

    for (int a = 0; a < m; ++a) {
        const int g = pg.elements_[static_cast<size_t>(a)];
        if (pg.label_at(pg.group_.inv(a)) != ft.conj(g))
            throw DataError("inverse of invertible " + std::to_string(g) +
                            " does not match its conjugate");
        pg.q_.push_back(md.theta[static_cast<size_t>(g)]);
    }

    pg.action_.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(n), -1));
    for (int a = 0; a < m; ++a) {
        const int g = pg.elements_[static_cast<size_t>(a)];
        std::vector<bool> hit(static_cast<size_t>(n), false);
        for (int i = 0; i < n; ++i) {
            const auto prod = ft.product(g, i);
            if (prod.size() != 1 || ft.n(g, i, prod[0]) != 1)
                throw DataError("invertible " + std::to_string(g) +
                                " does not act simply on label " + std::to_string(i));
            pg.action_[static_cast<size_t>(a)][static_cast<size_t>(i)] = prod[0];
            hit[static_cast<size_t>(prod[0])] = true;
        }
        if (std::find(hit.begin(), hit.end(), false) != hit.end())
            throw DataError("action of invertible " + std::to_string(g) +
                            " is not a permutation of the labels");
    }
    return pg;
}

/// Monodromy q(gh) / (q(g) q(h)), the bilinear form associated to q.
inline RootOfUnity monodromy(const PicardGroup& pg, int g, int h) {
    return pg.q(pg.mul(g, h)) / (pg.q(g) * pg.q(h));
}

/// Exponentiated monodromy charge chi_{U_i}(g) = theta_{g.i} / (theta_g theta_i).
inline RootOfUnity charge(const ModularData& md, const PicardGroup& pg, int label_i, int g) {
    return md.theta[static_cast<size_t>(pg.act(g, label_i))] /
           (pg.q(g) * md.theta[static_cast<size_t>(label_i)]);
}

/// All subgroups, deterministic order: by size, then lexicographic members.
inline std::vector<Subgroup> subgroups(const PicardGroup& pg) {
    std::vector<Subgroup> out;
    for (const auto& sub : pg.group().subgroups()) {
        Subgroup s;
        s.pic = &pg;
        for (int p : sub)
            s.members.push_back(pg.label_at(p));
        std::sort(s.members.begin(), s.members.end());
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

inline Subgroup trivial_subgroup(const PicardGroup& pg) { return {&pg, {0}}; }

inline Subgroup full_subgroup(const PicardGroup& pg) { return {&pg, pg.elements()}; }

/// Verifies that g -> q(g) is a quadratic form: q(g^n) = q(g)^(n^2) for all
/// 0 <= n <= ord(g), and that its polar form b(g,h) = q(gh)/(q(g)q(h)) is a
/// bihomomorphism. Exact; failures are reported with witnesses, not thrown.
inline Report quadratic_form_check(const PicardGroup& pg) {
    Report report;

    bool power_ok = true;
    std::string witness;
    for (int g : pg.elements()) {
        for (int n = 0; n <= pg.order(g) && power_ok; ++n) {
            const RootOfUnity lhs = pg.q(pg.pow(g, n));
            const RootOfUnity rhs = pg.q(g).pow(static_cast<long long>(n) * n);
            if (!(lhs == rhs)) {
                power_ok = false;
                witness = "q(" + std::to_string(g) + "^" + std::to_string(n) + ") = " +
                          lhs.str() + " != " + rhs.str();
            }
        }
        if (!power_ok)
            break;
    }
    report.add("quadratic power rule", power_ok, power_ok ? 0.0 : 1.0, witness);

    bool bihom_ok = true;
    witness.clear();
    for (int g1 : pg.elements()) {
        for (int g2 : pg.elements()) {
            for (int h : pg.elements()) {
                const RootOfUnity lhs = monodromy(pg, pg.mul(g1, g2), h);
                const RootOfUnity rhs = monodromy(pg, g1, h) * monodromy(pg, g2, h);
                if (!(lhs == rhs)) {
                    bihom_ok = false;
                    witness = "b(" + std::to_string(g1) + "*" + std::to_string(g2) + "," +
                              std::to_string(h) + ") is not multiplicative";
                    break;
                }
            }
            if (!bihom_ok)
                break;
        }
        if (!bihom_ok)
            break;
    }
    report.add("polar form bihomomorphism", bihom_ok, bihom_ok ? 0.0 : 1.0, witness);

    return report;
}

} // namespace mtc

#endif
