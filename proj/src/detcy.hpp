// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_DETCY_HPP
#define MFCY_DETCY_HPP

#include <cstdint>
#include <vector>

#include "planegeom.hpp"
#include "ratmat.hpp"

namespace mfcy {

// The six-dimensional space of plane cubics through the standard frame
// of four points. Evaluating its basis at chosen points gives a 6 x n
// section matrix whose rank and determinant drive everything below.
struct AnticanonicalBasis {
    QMat base_points; // (1:0:0), (0:1:0), (0:0:1), (1:1:1)
    QMat basis;       // 6 echelon coefficient vectors
};

const AnticanonicalBasis& anticanonical_basis();

// Rank of the section matrix at 1..6 points. Points must avoid the
// four base points; generically the rank is the number of points.
size_t rank_profile(const std::vector<FpPoint>& pts, uint64_t p);
size_t rank_profile_exact(const QMat& pts);

// Determinant of the 6 x 6 section matrix under the fixed projective
// normalization of each point. Its vanishing, v6_member, does not
// depend on the normalization.
uint64_t det6(const std::vector<FpPoint>& pts, uint64_t p);
Rat det6_exact(const QMat& pts);
bool v6_member(const std::vector<FpPoint>& pts, uint64_t p);

// The unique cubic of the space through five general points; its zero
// locus is the fibre over the 5-point configuration.
FpCurve fibre_cubic(const std::vector<FpPoint>& fixed5, uint64_t p);

// Negation on a smooth fibre cubic with the fifth fixed point as
// origin. An involution; fixed points are the rational 2-torsion.
FpPoint tau_fibre(const std::vector<FpPoint>& fixed5, const FpPoint& Q, uint64_t p);

} // namespace mfcy

#endif
