// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_RATMAT_HPP
#define MFCY_RATMAT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bigint.hpp"

namespace mfcy {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form with unit pivots; returns pivot columns.
// Zero rows are dropped.
std::vector<size_t> rref(QMat& m);

size_t rank(QMat m);

// Canonical basis of the right nullspace: RREF applied to the standard
// free-variable spanning set, so equal subspaces give byte-equal output.
QMat nullspace(const QMat& m, size_t ncols);

bool spans_equal(const QMat& a, const QMat& b);
bool span_contains(const QMat& basis, const QVec& v);

// Solves a x = rhs for square-or-tall exact systems restricted to the given
// column count. Free variables are set to zero. Returns nullopt when the
// system is inconsistent.
std::optional<QVec> solve_linear(const QMat& a, const QVec& rhs);

// Reduction of a rational vector mod p; nullopt when a denominator is
// divisible by p.
std::optional<std::vector<uint64_t>> reduce_vec_mod_p(const QVec& v, uint64_t p);

} // namespace mfcy

#endif
