// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_FPMAT_HPP
#define MFCY_FPMAT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "field.hpp"

namespace mfcy {

// Dense elimination helpers over F_p for small matrices.

inline size_t fp_rank(std::vector<std::vector<uint64_t>> m, size_t ncols, const PrimeField& F) {
    size_t prow = 0;
    for (size_t col = 0; col < ncols && prow < m.size(); ++col) {
        size_t sel = prow;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[prow], m[sel]);
        uint64_t s = F.inv(m[prow][col]);
        for (size_t j = col; j < ncols; ++j) m[prow][j] = F.mul(m[prow][j], s);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == prow || m[r][col] == 0) continue;
            uint64_t f = m[r][col];
            for (size_t j = col; j < ncols; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[prow][j]));
        }
        ++prow;
    }
    return prow;
}

// Nullspace basis with the free-coordinate-equals-one convention; the
// result is canonical for a fixed input.
inline std::vector<std::vector<uint64_t>> fp_nullspace(std::vector<std::vector<uint64_t>> m,
                                                       size_t ncols, const PrimeField& F) {
    std::vector<size_t> pivots;
    size_t prow = 0;
    for (size_t col = 0; col < ncols && prow < m.size(); ++col) {
        size_t sel = prow;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[prow], m[sel]);
        uint64_t s = F.inv(m[prow][col]);
        for (size_t j = col; j < ncols; ++j) m[prow][j] = F.mul(m[prow][j], s);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == prow || m[r][col] == 0) continue;
            uint64_t f = m[r][col];
            for (size_t j = col; j < ncols; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[prow][j]));
        }
        pivots.push_back(col);
        ++prow;
    }
    std::vector<long> pivot_row(ncols, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<long>(i);
    std::vector<std::vector<uint64_t>> basis;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_row[col] >= 0) continue;
        std::vector<uint64_t> v(ncols, 0);
        v[col] = 1;
        for (size_t c2 = 0; c2 < ncols; ++c2)
            if (pivot_row[c2] >= 0) v[c2] = F.neg(m[static_cast<size_t>(pivot_row[c2])][col]);
        basis.push_back(v);
    }
    return basis;
}

inline uint64_t fp_det(std::vector<std::vector<uint64_t>> m, const PrimeField& F) {
    size_t n = m.size();
    uint64_t det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != col) {
            std::swap(m[col], m[sel]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        uint64_t inv = F.inv(m[col][col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            uint64_t f = F.mul(m[r][col], inv);
            for (size_t j = col; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[col][j]));
        }
    }
    return det;
}

} // namespace mfcy

#endif
