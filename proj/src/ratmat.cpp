// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ratmat.hpp"

#include <algorithm>

#include "field.hpp"

namespace mfcy {

std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

size_t rank(QMat m) { return rref(m).size(); }

QMat nullspace(const QMat& m, size_t ncols) {
    QMat r = m;
    std::vector<size_t> piv = rref(r);
    std::vector<bool> is_piv(ncols, false);
    for (size_t c : piv) is_piv[c] = true;
    QMat basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_piv[free_col]) continue;
        QVec v(ncols, Rat(0));
        v[free_col] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][free_col];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

bool spans_equal(const QMat& a, const QMat& b) {
    size_t ra = rank(a), rb = rank(b);
    if (ra != rb) return false;
    QMat both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(both) == ra;
}

bool span_contains(const QMat& basis, const QVec& v) {
    size_t r = rank(basis);
    QMat aug = basis;
    aug.push_back(v);
    return rank(aug) == r;
}

std::optional<QVec> solve_linear(const QMat& a, const QVec& rhs) {
    if (a.size() != rhs.size() || a.empty()) return std::nullopt;
    size_t ncols = a[0].size();
    QMat aug = a;
    for (size_t i = 0; i < a.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<size_t> piv;
    {
        // Echelon over the coefficient columns only; the augmented column
        // never pivots, so an inconsistency shows as a row (0 ... 0 | c).
        size_t row = 0;
        for (size_t col = 0; col < ncols && row < aug.size(); ++col) {
            size_t sel = row;
            while (sel < aug.size() && aug[sel][col] == 0) ++sel;
            if (sel == aug.size()) continue;
            std::swap(aug[row], aug[sel]);
            Rat inv = 1 / aug[row][col];
            for (auto& x : aug[row]) x *= inv;
            for (size_t i = 0; i < aug.size(); ++i) {
                if (i == row || aug[i][col] == 0) continue;
                Rat f = aug[i][col];
                for (size_t j = 0; j <= ncols; ++j) aug[i][j] -= f * aug[row][j];
            }
            piv.push_back(col);
            ++row;
        }
        for (size_t i = row; i < aug.size(); ++i)
            if (aug[i][ncols] != 0) return std::nullopt;
    }
    QVec x(ncols, Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][ncols];
    return x;
}

std::optional<std::vector<uint64_t>> reduce_vec_mod_p(const QVec& v, uint64_t p) {
    std::vector<uint64_t> out(v.size());
    Int pz(static_cast<unsigned long>(p));
    PrimeField f(p);
    for (size_t i = 0; i < v.size(); ++i) {
        Rat q = v[i];
        q.canonicalize();
        if (mpz_divisible_p(q.get_den().get_mpz_t(), pz.get_mpz_t())) return std::nullopt;
        Int num = q.get_num() % pz;
        Int den = q.get_den() % pz;
        if (num < 0) num += pz;
        out[i] = f.mul(num.get_ui(), f.inv(den.get_ui()));
    }
    return out;
}

} // namespace mfcy
