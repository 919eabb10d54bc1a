#pragma once

#include <cstdint>

#include "wittlab/quadratic_module.hpp"

namespace wittlab {

namespace detail {

/// Rank of the Gram matrix over GF(2), via bit-packed elimination.
inline int gf2_rank(const Mat& gram) {
    const int n = gram.rows();
    std::vector<uint64_t> rows(n, 0);
    if (n > 62) throw input_error("gf2_rank: rank too large for desk-scale check");
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (gram(r, c) % 2 != 0) rows[r] |= (uint64_t(1) << c);
    int rank = 0;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (rows[r] & (uint64_t(1) << c)) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (rows[r] & (uint64_t(1) << c))) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Arf invariant of the mod-2 quadratic form x -> mu(x), counted
/// democratically: 0 iff the value 0 is attained by a strict majority of the
/// 2^rank vectors over GF(2).
inline int arf_invariant(const QuadraticModule& m) {
    if (m.param != FormParameter::skew_even())
        throw input_error("arf_invariant requires form parameter (-1, 2Z)");
    if (detail::gf2_rank(m.gram) != m.rank)
        throw input_error("arf_invariant requires a mod-2 nondegenerate Gram matrix");
    if (m.rank > 24) throw input_error("arf_invariant: rank too large for exhaustive count");

    std::vector<uint8_t> mu_bit(m.rank), gram_bit(static_cast<size_t>(m.rank) * m.rank);
    for (int i = 0; i < m.rank; ++i) {
        mu_bit[i] = static_cast<uint8_t>(m.mu[i].value() % 2 != 0);
        for (int j = 0; j < m.rank; ++j)
            gram_bit[i * m.rank + j] = static_cast<uint8_t>(m.gram(i, j) % 2 != 0);
    }
    uint64_t zeros = 0;
    const uint64_t total = uint64_t(1) << m.rank;
    for (uint64_t x = 0; x < total; ++x) {
        uint8_t q = 0;
        for (int i = 0; i < m.rank; ++i) {
            if (!(x & (uint64_t(1) << i))) continue;
            q ^= mu_bit[i];
            for (int j = i + 1; j < m.rank; ++j)
                if (x & (uint64_t(1) << j)) q ^= gram_bit[i * m.rank + j];
        }
        zeros += (q == 0);
    }
    return zeros * 2 > total ? 0 : 1;
}

}  // namespace wittlab
