#ifndef MTC_SCHELLEKENS_HPP
#define MTC_SCHELLEKENS_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mtc/bihom.hpp"
#include "mtc/picard.hpp"
#include "mtc/torus.hpp"

namespace mtc {

/// Subgroups H with (theta_h)^{ord h} = 1 for every member, the exact
/// admissibility condition for a support of a Schellekens algebra.
inline std::vector<Subgroup> admissible_supports(const PicardGroup& pg) {
    std::vector<Subgroup> out;
    for (auto& sub : subgroups(pg)) {
        bool ok = true;
        for (int h : sub.members)
            if (!pg.q(h).pow(pg.order(h)).is_one()) {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(std::move(sub));
    }
    return out;
}

/// All bihomomorphisms Xi on H with Xi(g,h) Xi(h,g) = theta_g theta_h /
/// theta_gh, enumerated over generator-pair values: square roots of the
/// theta-ratio on the diagonal, mu_gcd choices above it with the mirror
/// value forced. Candidates are re-verified on every pair, and returned in
/// lexicographic order of their exponent matrices. May be empty.
inline std::vector<Bihomomorphism> symmetrizer_candidates(const PicardGroup& pg,
                                                          const Subgroup& support) {
    const AbelianGroup hg = support.as_group();
    const std::vector<int>& labels = support.members;
    const auto& gens = hg.generators();
    const auto& orders = hg.generator_orders();
    const size_t r = gens.size();

    // Value of the symmetrizer right-hand side on a pair of member labels.
    auto rhs = [&](int g_label, int h_label) {
        return (pg.q(g_label) * pg.q(h_label)) / pg.q(pg.mul(g_label, h_label));
    };

    struct Slot {
        size_t a, b;                       // generator indices, a <= b
        std::vector<RootOfUnity> choices;  // admissible values at (a,b)
    };
    std::vector<Slot> slots;
    for (size_t a = 0; a < r; ++a) {
        {
            Slot diag{a, a, {}};
            const int la = labels[static_cast<size_t>(gens[a])];
            for (const auto& root : rhs(la, la).square_roots())
                if (root.pow(orders[a]).is_one())
                    diag.choices.push_back(root);
            std::sort(diag.choices.begin(), diag.choices.end());
            slots.push_back(std::move(diag));
        }
        for (size_t b = a + 1; b < r; ++b) {
            Slot off{a, b, {}};
            const int m = std::gcd(orders[a], orders[b]);
            const int la = labels[static_cast<size_t>(gens[a])];
            const int lb = labels[static_cast<size_t>(gens[b])];
            const RootOfUnity target = rhs(la, lb);
            for (int j = 0; j < m; ++j) {
                const RootOfUnity x = RootOfUnity::from_fraction(j, m);
                if ((target / x).pow(m).is_one())
                    off.choices.push_back(x);
            }
            slots.push_back(std::move(off));
        }
    }

    std::vector<Bihomomorphism> out;
    for (const auto& slot : slots)
        if (slot.choices.empty())
            return out; // no candidate can exist

    std::vector<size_t> choice(slots.size(), 0);
    while (true) {
        std::vector<std::vector<RootOfUnity>> vals(r, std::vector<RootOfUnity>(r));
        for (size_t s = 0; s < slots.size(); ++s) {
            const auto& slot = slots[s];
            const RootOfUnity v = slot.choices[choice[s]];
            vals[slot.a][slot.b] = v;
            if (slot.a != slot.b) {
                const int la = labels[static_cast<size_t>(gens[slot.a])];
                const int lb = labels[static_cast<size_t>(gens[slot.b])];
                vals[slot.b][slot.a] = rhs(la, lb) / v;
            }
        }
        Bihomomorphism candidate(hg, labels, std::move(vals));

        bool valid = true;
        for (int g : labels) {
            for (int h : labels)
                if (!(candidate.eval_labels(g, h) * candidate.eval_labels(h, g) == rhs(g, h))) {
                    valid = false;
                    break;
                }
            if (!valid)
                break;
        }
        if (valid)
            out.push_back(std::move(candidate));

        size_t s = slots.size();
        bool done = true;
        while (s-- > 0) {
            if (++choice[s] < slots[s].choices.size()) {
                done = false;
                break;
            }
            choice[s] = 0;
        }
        if (done || slots.empty())
            break;
    }
    return out;
}

/// A validated Schellekens algebra: an admissible support, a KSB that
/// survives the modular-invariance and physicality filter, and the cached
/// torus partition function it produces.
struct SchellekensAlgebra {
    const ModularData* md = nullptr;
    Subgroup support;
    Bihomomorphism ksb;
    TorusInvariant z;
    std::optional<size_t> duplicate_of; // earlier algebra with identical Z, if any
};

/// Enumerates all Schellekens algebras of the category: every admissible
/// support, every symmetrizer candidate, kept iff the resulting partition
/// function is physical and modular invariant. The Cardy algebra (trivial
/// support) is always present. Deterministic order.
inline std::vector<SchellekensAlgebra> enumerate_schellekens(const ModularData& md,
                                                             const FusionTable& ft,
                                                             const PicardGroup& pg) {
    std::vector<SchellekensAlgebra> out;
    for (const auto& support : admissible_supports(pg)) {
        for (auto& ksb : symmetrizer_candidates(pg, support)) {
            RationalMatrix zq;
            try {
                zq = ks_partition_function(md, ft, pg, support, ksb);
            } catch (const DataError&) {
                continue; // inconsistent candidate
            }
            if (!is_physical(zq))
                continue;
            const auto zi = to_integer_matrix(zq);
            if (!zi || !is_modular_invariant(md, *zi))
                continue;
            SchellekensAlgebra alg;
            alg.md = &md;
            alg.support = support;
            alg.z = TorusInvariant{*zi, "H=" + support.describe() + " Xi " + ksb.describe(),
                                   true, true};
            alg.ksb = std::move(ksb);
            for (size_t k = 0; k < out.size(); ++k)
                if (out[k].z.z == alg.z.z) {
                    alg.duplicate_of = k;
                    break;
                }
            out.push_back(std::move(alg));
        }
    }
    return out;
}

} // namespace mtc

#endif
