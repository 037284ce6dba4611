#pragma once

#include <optional>
#include <vector>

#include "standard_basis.hpp"

namespace vfindex {

/// Dimension of R^rank / submodule as a vector space: the number of
/// monomials (per position) divisible by no leading term. Infinite exactly
/// when some position, some variable has no pure power among that
/// position's leading terms; the witness names them.
struct QuotientDim {
    bool finite = false;
    unsigned long long value = 0;
    std::size_t infinite_position = 0; // witness when infinite
    std::size_t infinite_variable = 0; // witness when infinite

    static QuotientDim finite_value(unsigned long long v) { return {true, v, 0, 0}; }
    static QuotientDim infinite(std::size_t pos, std::size_t var) { return {false, 0, pos, var}; }
};

namespace detail {

/// Counts exponent vectors below `cap` componentwise that no monomial in
/// `lts` divides.
inline unsigned long long count_standard_in_box(const std::vector<int>& cap,
                                                const std::vector<Monomial>& lts) {
    const std::size_t n = cap.size();
    unsigned long long count = 0;
    std::vector<int> e(n, 0);
    while (true) {
        bool divisible = false;
        for (const auto& m : lts) {
            bool div = true;
            for (std::size_t i = 0; i < n && div; ++i)
                if (m[i] > e[i]) div = false;
            if (div) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;
        // advance odometer
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++e[i] < cap[i]) break;
            e[i] = 0;
        }
        if (i == n) break;
        if (n == 0) break;
    }
    return count;
}

} // namespace detail

inline QuotientDim quotient_dimension(const StandardBasis& basis) {
    const std::size_t nvars = basis.ring.nvars();
    unsigned long long total = 0;

    for (std::size_t pos = 0; pos < basis.rank; ++pos) {
        std::vector<Monomial> lts;
        for (std::size_t g = 0; g < basis.leading.size(); ++g)
            if (basis.leading[g].position == pos) lts.push_back(basis.leading[g].mono);

        // Pure-power caps: x_i^e with all other exponents zero. A missing
        // cap in any direction makes the quotient infinite.
        std::vector<int> cap(nvars, -1);
        for (std::size_t i = 0; i < nvars; ++i) {
            for (const auto& m : lts) {
                bool pure = true;
                for (std::size_t l = 0; l < nvars && pure; ++l)
                    if (l != i && m[l] != 0) pure = false;
                if (!pure) continue;
                if (cap[i] < 0 || m[i] < cap[i]) cap[i] = m[i];
            }
            if (cap[i] < 0) return QuotientDim::infinite(pos, i);
        }

        unsigned long long box = 1;
        for (std::size_t i = 0; i < nvars; ++i) {
            box *= static_cast<unsigned long long>(cap[i]);
            if (box > 100000000ULL)
                throw Error("standard-monomial enumeration box too large");
        }
        total += detail::count_standard_in_box(cap, lts);
    }
    return QuotientDim::finite_value(total);
}

} // namespace vfindex
