#ifndef MTC_CYCLOTOMIC_HPP
#define MTC_CYCLOTOMIC_HPP

#include <map>
#include <optional>
#include <vector>

#include "mtc/rational.hpp"
#include "mtc/root_of_unity.hpp"

namespace mtc {

namespace detail {

// Exact division of integer polynomials with monic divisor; throws if the
// division leaves a remainder.
inline std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    const size_t dd = den.size() - 1;
    if (den.back() != 1)
        throw DataError("polynomial divisor must be monic");
    if (num.size() < den.size())
        throw DataError("polynomial division underflow");
    std::vector<Int> quot(num.size() - dd, 0);
    for (size_t d = num.size(); d-- > dd;) {
        const Int c = num[d];
        if (c == 0)
            continue;
        quot[d - dd] = c;
        for (size_t i = 0; i <= dd; ++i)
            num[d - dd + i] -= c * den[i];
    }
    for (const Int& c : num)
        if (c != 0)
            throw DataError("polynomial division left a remainder");
    return quot;
}

} // namespace detail

/// Coefficients of the q-th cyclotomic polynomial, ascending degree.
/// Computed by exact division of x^q - 1 by the lower cyclotomics.
inline std::vector<Int> cyclotomic_polynomial(long long q) {
    if (q < 1)
        throw std::invalid_argument("cyclotomic index must be positive");
    std::map<long long, std::vector<Int>> table;
    for (long long d = 1; d <= q; ++d) {
        if (q % d != 0)
            continue;
        std::vector<Int> poly(static_cast<size_t>(d) + 1, 0);
        poly[0] = -1;
        poly[static_cast<size_t>(d)] = 1; // x^d - 1
        for (const auto& [e, phi] : table)
            if (d % e == 0)
                poly = detail::poly_divide_exact(std::move(poly), phi);
        table[d] = std::move(poly);
    }
    return table[q];
}

/// Exact accumulator for sums of roots of unity. The sum is an algebraic
/// integer in Z[zeta_Q]; rational_value() reduces it modulo the Q-th
/// cyclotomic polynomial and reports the value iff the sum collapses to a
/// rational (hence integer) number.
class RootSum {
public:
    void add(const RootOfUnity& term) { terms_.push_back(term); }

    size_t term_count() const { return terms_.size(); }

    std::optional<Rational> rational_value() const {
        Int q_big = 1;
        for (const auto& t : terms_)
            q_big = lcm(q_big, denominator(t.exponent()));
        if (q_big > 1000000)
            throw DataError("root-of-unity sum with conductor beyond supported size");
        const long long q = q_big.convert_to<long long>();

        std::vector<Int> coeffs(static_cast<size_t>(q), 0);
        for (const auto& t : terms_) {
            const Int idx = numerator(t.exponent()) * (q_big / denominator(t.exponent()));
            coeffs[idx.convert_to<size_t>()] += 1;
        }
        if (q == 1)
            return Rational(coeffs[0]);

        const std::vector<Int> phi = cyclotomic_polynomial(q);
        const size_t deg = phi.size() - 1;
        for (size_t d = coeffs.size(); d-- > deg;) {
            const Int c = coeffs[d];
            if (c == 0)
                continue;
            for (size_t i = 0; i <= deg; ++i)
                coeffs[d - deg + i] -= c * phi[i];
        }
        for (size_t i = 1; i < deg; ++i)
            if (coeffs[i] != 0)
                return std::nullopt;
        return Rational(coeffs[0]);
    }

private:
    std::vector<RootOfUnity> terms_;
};

} // namespace mtc

#endif
