#ifndef MTC_BIHOM_HPP
#define MTC_BIHOM_HPP

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mtc/abelian.hpp"
#include "mtc/root_of_unity.hpp"

namespace mtc {

/// A bihomomorphism G x G -> roots of unity on a finite abelian group,
/// stored by its values on a generator basis and extended everywhere by
/// bimultiplicativity. Elements carry external labels (category labels for
/// KSBs, member labels for stabilizer forms).
class Bihomomorphism {
public:
    Bihomomorphism() = default;

    Bihomomorphism(AbelianGroup grp, std::vector<int> labels,
                   std::vector<std::vector<RootOfUnity>> gen_vals)
        : grp_(std::move(grp)), labels_(std::move(labels)), gen_vals_(std::move(gen_vals)) {
        const size_t r = grp_.generators().size();
        if (labels_.size() != static_cast<size_t>(grp_.size()))
            throw DataError("bihomomorphism label list does not match group size");
        if (gen_vals_.size() != r)
            throw DataError("generator value matrix has wrong row count");
        for (size_t a = 0; a < r; ++a) {
            if (gen_vals_[a].size() != r)
                throw DataError("generator value matrix is not square");
            for (size_t b = 0; b < r; ++b) {
                const auto& v = gen_vals_[a][b];
                if (!v.pow(grp_.generator_orders()[a]).is_one() ||
                    !v.pow(grp_.generator_orders()[b]).is_one())
                    throw DataError("generator value at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ") violates the order constraints");
            }
        }
    }

    static Bihomomorphism trivial(AbelianGroup grp, std::vector<int> labels) {
        const size_t r = grp.generators().size();
        std::vector<std::vector<RootOfUnity>> vals(r, std::vector<RootOfUnity>(r));
        return Bihomomorphism(std::move(grp), std::move(labels), std::move(vals));
    }

    const AbelianGroup& group() const { return grp_; }
    const std::vector<int>& labels() const { return labels_; }
    const std::vector<std::vector<RootOfUnity>>& generator_values() const { return gen_vals_; }

    int index_of_label(int label) const {
        for (size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label)
                return static_cast<int>(i);
        throw DataError("label " + std::to_string(label) +
                        " is outside the bihomomorphism's group");
    }

    /// Value on a pair of group element indices.
    RootOfUnity eval(int a, int b) const {
        const auto& x = grp_.coordinates(a);
        const auto& y = grp_.coordinates(b);
        Rational exponent = 0;
        for (size_t s = 0; s < x.size(); ++s)
            for (size_t t = 0; t < y.size(); ++t)
                if (x[s] != 0 && y[t] != 0)
                    exponent += gen_vals_[s][t].exponent() * (Int(x[s]) * y[t]);
        return RootOfUnity(exponent);
    }

    RootOfUnity eval_labels(int g, int h) const {
        return eval(index_of_label(g), index_of_label(h));
    }

    bool is_alternating() const {
        for (int a = 0; a < grp_.size(); ++a)
            if (!eval(a, a).is_one())
                return false;
        return true;
    }

    /// Pointwise product; both forms must live on the same labelled group.
    Bihomomorphism pointwise_product(const Bihomomorphism& o) const {
        if (labels_ != o.labels_)
            throw DataError("cannot multiply bihomomorphisms on different groups");
        auto vals = gen_vals_;
        for (size_t a = 0; a < vals.size(); ++a)
            for (size_t b = 0; b < vals.size(); ++b)
                vals[a][b] *= o.gen_vals_[a][b];
        return Bihomomorphism(grp_, labels_, std::move(vals));
    }

    /// Flattened exponent matrix, the deterministic sort key.
    std::vector<Rational> key() const {
        std::vector<Rational> out;
        for (const auto& row : gen_vals_)
            for (const auto& v : row)
                out.push_back(v.exponent());
        return out;
    }

    /// Generator-pair assignments as "g,h=p/q" fragments.
    std::string describe() const {
        std::string out;
        const auto& gens = grp_.generators();
        for (size_t a = 0; a < gens.size(); ++a)
            for (size_t b = 0; b < gens.size(); ++b) {
                if (!out.empty())
                    out += " ";
                out += std::to_string(labels_[static_cast<size_t>(gens[a])]) + "," +
                       std::to_string(labels_[static_cast<size_t>(gens[b])]) + "=" +
                       gen_vals_[a][b].str();
            }
        return out.empty() ? "(trivial)" : out;
    }

    friend bool operator==(const Bihomomorphism& a, const Bihomomorphism& b) {
        return a.labels_ == b.labels_ && a.gen_vals_ == b.gen_vals_;
    }

private:
    AbelianGroup grp_;
    std::vector<int> labels_;
    std::vector<std::vector<RootOfUnity>> gen_vals_;
};

/// All alternating bihomomorphisms on the group: trivial on the diagonal,
/// free values in mu_gcd on generator pairs above it, inverses below. The
/// result is closed under pointwise product. Deterministic order.
inline std::vector<Bihomomorphism> alternating_bihoms(const AbelianGroup& grp,
                                                      std::vector<int> labels) {
    const auto& orders = grp.generator_orders();
    const size_t r = orders.size();

    struct Slot {
        size_t a, b;
        int modulus;
    };
    std::vector<Slot> slots;
    for (size_t a = 0; a < r; ++a)
        for (size_t b = a + 1; b < r; ++b)
            slots.push_back({a, b, std::gcd(orders[a], orders[b])});

    std::vector<Bihomomorphism> out;
    std::vector<int> choice(slots.size(), 0);
    while (true) {
        std::vector<std::vector<RootOfUnity>> vals(r, std::vector<RootOfUnity>(r));
        for (size_t s = 0; s < slots.size(); ++s) {
            const RootOfUnity v = RootOfUnity::from_fraction(choice[s], slots[s].modulus);
            vals[slots[s].a][slots[s].b] = v;
            vals[slots[s].b][slots[s].a] = v.inverse();
        }
        out.emplace_back(grp, labels, std::move(vals));
        size_t s = slots.size();
        bool done = true;
        while (s-- > 0) {
            if (++choice[s] < slots[s].modulus) {
                done = false;
                break;
            }
            choice[s] = 0;
        }
        if (done)
            break;
    }
    return out;
}

} // namespace mtc

#endif
