// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_LINSYS_HPP
#define MFCY_LINSYS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "planegeom.hpp"
#include "ratmat.hpp"

namespace mfcy {

// A line for incidence conditions: a covector on P^2, or a ruling line on
// P^1 x P^1 obtained by fixing one factor at a point.
struct CondLine {
    // P2: covector (l0, l1, l2). P1xP1: factor 0 fixes the first
    // coordinate ({(a:b)} x P^1), factor 1 the second (P^1 x {(a:b)});
    // (a, b) sit in covec[0], covec[1].
    int ruling_factor = -1; // -1 on P^2
    QVec covec;
};

struct Condition {
    enum class Kind { PassThrough, TangentAt, InflectionAt } kind;
    QVec point; // 3 coords on P^2, 4 on P^1 x P^1
    CondLine line; // unused for PassThrough

    std::string str() const;
};

struct LinearSystem {
    Ambient ambient;
    QMat basis; // canonical echelon basis, rows of length 10 or 9
    std::vector<Condition> conditions;
    std::set<uint64_t> bad_primes;

    size_t dim() const { return basis.size(); }
};

// Row of monomial values at a rational point, in the fixed coefficient order.
QVec monomial_row(Ambient amb, const QVec& point);

// Condition matrix rows: one row for PassThrough; value plus
// gradient-parallelism minors for TangentAt on P^2; restriction-to-line
// vanishing of orders 2 / 3 for ruling tangency and InflectionAt.
QMat condition_rows(Ambient amb, const Condition& c);

LinearSystem solve_conditions(Ambient amb, const std::vector<Condition>& conds);

bool same_subspace(const LinearSystem& s, const QMat& vectors);

LinearSystem slice(const LinearSystem& s, const std::vector<Condition>& extra);

// Canonical basis reduced mod p; throws BadPrime on policy primes,
// denominator hits, or rank drop.
std::vector<FpCurve> reduce_mod_p(const LinearSystem& s, uint64_t p);

} // namespace mfcy

#endif
