#ifndef MTC_ABELIAN_HPP
#define MTC_ABELIAN_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "mtc/errors.hpp"

namespace mtc {

/// A finite abelian group on elements {0, ..., size-1} with identity 0,
/// given by its multiplication table. Construction verifies the group
/// axioms and computes a cyclic-factor basis, so that every element has
/// unique coordinates over the generators. Immutable once built.
class AbelianGroup {
public:
    AbelianGroup() = default;

    static AbelianGroup from_mul_table(std::vector<std::vector<int>> mul) {
        AbelianGroup g;
        g.mul_ = std::move(mul);
        g.check_axioms();
        g.compute_orders();
        g.compute_basis();
        return g;
    }

    /// Direct product Z_{orders[0]} x ... x Z_{orders[r-1]} with elements
    /// numbered in mixed-radix order.
    static AbelianGroup direct_product(const std::vector<int>& orders) {
        long long total = 1;
        for (int m : orders) {
            if (m < 1)
                throw std::invalid_argument("cyclic factor order must be >= 1");
            total *= m;
        }
        const int n = static_cast<int>(total);
        auto decode = [&](int x) {
            std::vector<int> digits(orders.size());
            for (size_t i = orders.size(); i-- > 0;) {
                digits[i] = x % orders[i];
                x /= orders[i];
            }
            return digits;
        };
        auto encode = [&](const std::vector<int>& d) {
            int x = 0;
            for (size_t i = 0; i < orders.size(); ++i)
                x = x * orders[i] + d[i];
            return x;
        };
        std::vector<std::vector<int>> mul(static_cast<size_t>(n),
                                          std::vector<int>(static_cast<size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto da = decode(a), db = decode(b);
                std::vector<int> dc(orders.size());
                for (size_t i = 0; i < orders.size(); ++i)
                    dc[i] = (da[i] + db[i]) % orders[i];
                mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = encode(dc);
            }
        return from_mul_table(std::move(mul));
    }

    int size() const { return static_cast<int>(mul_.size()); }

    int mul(int a, int b) const { return mul_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

    int pow(int a, long long n) const {
        const int m = order(a);
        long long e = n % m;
        if (e < 0)
            e += m;
        int acc = 0;
        for (long long i = 0; i < e; ++i)
            acc = mul(acc, a);
        return acc;
    }

    int order(int a) const { return order_[static_cast<size_t>(a)]; }

    /// Basis of a cyclic-factor decomposition, orders non-increasing.
    const std::vector<int>& generators() const { return basis_; }
    const std::vector<int>& generator_orders() const { return basis_orders_; }

    /// Coordinates of a over the basis, 0 <= coord[i] < generator_orders()[i].
    const std::vector<int>& coordinates(int a) const { return coords_[static_cast<size_t>(a)]; }

    bool is_cyclic() const { return basis_.size() <= 1; }

    /// Smallest subgroup containing the seed elements, as a sorted list.
    std::vector<int> closure(std::vector<int> seed) const {
        std::set<int> members{0};
        for (int s : seed)
            members.insert(s);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> current(members.begin(), members.end());
            for (int a : current)
                for (int b : current)
                    if (members.insert(mul(a, b)).second)
                        grew = true;
        }
        return {members.begin(), members.end()};
    }

    /// All subgroups as sorted member lists, enumerated by closing one
    /// added generator at a time; deterministic order (size, then lex).
    std::vector<std::vector<int>> subgroups() const {
        std::set<std::vector<int>> found;
        found.insert({0});
        std::vector<std::vector<int>> frontier{{0}};
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& sub : frontier)
                for (int g = 1; g < size(); ++g) {
                    if (std::binary_search(sub.begin(), sub.end(), g))
                        continue;
                    auto bigger = sub;
                    bigger.push_back(g);
                    auto closed = closure(std::move(bigger));
                    if (found.insert(closed).second)
                        next.push_back(std::move(closed));
                }
            frontier = std::move(next);
        }
        std::vector<std::vector<int>> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size())
                return a.size() < b.size();
            return a < b;
        });
        return out;
    }

private:
    void check_axioms() {
        const int n = size();
        if (n < 1)
            throw DataError("group must be non-empty");
        for (const auto& row : mul_)
            if (static_cast<int>(row.size()) != n)
                throw DataError("multiplication table is not square");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const int ab = mul(a, b);
                if (ab < 0 || ab >= n)
                    throw DataError("multiplication table entry out of range");
                if (ab != mul(b, a))
                    throw DataError("group is not abelian at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
            }
        for (int a = 0; a < n; ++a)
            if (mul(0, a) != a)
                throw DataError("0 is not an identity");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw DataError("multiplication is not associative");
        inv_.assign(static_cast<size_t>(n), -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (mul(a, b) == 0) {
                    inv_[static_cast<size_t>(a)] = b;
                    break;
                }
            if (inv_[static_cast<size_t>(a)] < 0)
                throw DataError("element " + std::to_string(a) + " has no inverse");
        }
    }

    void compute_orders() {
        order_.assign(static_cast<size_t>(size()), 0);
        for (int a = 0; a < size(); ++a) {
            int x = a, m = 1;
            while (x != 0) {
                x = mul(x, a);
                ++m;
            }
            order_[static_cast<size_t>(a)] = m;
        }
    }

    // Greedy maximal-order generator peeling with backtracking. A list of
    // generators is independent iff the subgroup it generates has size equal
    // to the product of the generator orders; that product check makes the
    // search self-verifying.
    void compute_basis() {
        std::vector<int> by_order(static_cast<size_t>(size() - 1));
        std::iota(by_order.begin(), by_order.end(), 1);
        std::sort(by_order.begin(), by_order.end(), [&](int a, int b) {
            if (order(a) != order(b))
                return order(a) > order(b);
            return a < b;
        });

        std::vector<int> basis;
        if (!extend_basis(basis, by_order, 1))
            throw DataError("failed to decompose abelian group into cyclic factors");
        basis_ = std::move(basis);
        basis_orders_.clear();
        for (int g : basis_)
            basis_orders_.push_back(order(g));

        coords_.assign(static_cast<size_t>(size()), {});
        const size_t r = basis_.size();
        std::vector<int> digits(r, 0);
        while (true) {
            int elem = 0;
            for (size_t i = 0; i < r; ++i)
                elem = mul(elem, pow(basis_[i], digits[i]));
            coords_[static_cast<size_t>(elem)] = digits;
            size_t i = r;
            while (i-- > 0) {
                if (++digits[i] < basis_orders_[i])
                    break;
                digits[i] = 0;
                if (i == 0)
                    return;
            }
            if (r == 0)
                break;
        }
    }

    bool extend_basis(std::vector<int>& basis, const std::vector<int>& by_order,
                      long long span_size) {
        if (span_size == size())
            return true;
        std::vector<int> span_members = closure(basis);
        int max_usable = order_ceiling(basis);
        for (int g : by_order) {
            if (order(g) > max_usable)
                continue; // keep orders non-increasing along the basis
            if (std::binary_search(span_members.begin(), span_members.end(), g))
                continue;
            auto seed = basis;
            seed.push_back(g);
            const auto grown = closure(seed);
            if (static_cast<long long>(grown.size()) != span_size * order(g))
                continue; // not independent of the current basis
            basis.push_back(g);
            if (extend_basis(basis, by_order, span_size * order(g)))
                return true;
            basis.pop_back();
        }
        return false;
    }

    int order_ceiling(const std::vector<int>& basis) const {
        return basis.empty() ? size() : order(basis.back());
    }

    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<int> order_;
    std::vector<int> basis_;
    std::vector<int> basis_orders_;
    std::vector<std::vector<int>> coords_;
};

} // namespace mtc

#endif
