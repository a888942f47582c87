// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_PLANEGEOM_HPP
#define MFCY_PLANEGEOM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace mfcy {

enum class Ambient { P2, P1xP1 };

// Fixed monomial order for ternary cubics:
// X^3, X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^3, Y^2Z, YZ^2, Z^3.
extern const std::array<std::array<int, 3>, 10> kCubicMonomials;

// Fixed order for bidegree-(2,2) forms on P^1 x P^1: index 3a+b holds
// U^a S^{2-a} V^b T^{2-b} with a, b in {0,1,2}; (U:S) first factor,
// (V:T) second.
inline int deg22_index(int a, int b) { return 3 * a + b; }

// Point of P^2 (3 coords) or P^1 x P^1 (2+2 coords) over F_p, stored
// normalized: first nonzero entry of each homogeneous block is 1.
struct FpPoint {
    std::vector<uint64_t> c;

    bool operator==(const FpPoint&) const = default;
    bool operator<(const FpPoint& o) const { return c < o.c; }
    std::string str() const; // "x:y:z" or "u:s,v:t"
};

FpPoint normalize_point(Ambient amb, std::vector<uint64_t> coords, const PrimeField& F);

struct FpCurve {
    Ambient amb;
    uint64_t p;
    std::vector<uint64_t> co; // 10 (cubic) or 9 ((2,2) form)
};

uint64_t eval_curve(const FpCurve& C, const FpPoint& P);

bool singular_at(const FpCurve& C, const FpPoint& P);

// Partials of a (2,2)-form with respect to all four coordinates.
std::array<uint64_t, 4> form22_gradient(const FpCurve& C, const FpPoint& P);

// Gradient of a ternary cubic at P.
std::array<uint64_t, 3> cubic_gradient(const FpCurve& C, const FpPoint& P);

// Deterministic enumeration of P^dim(F_p): representatives grouped by the
// position of the leading 1, later coordinates cycling fastest.
std::vector<std::vector<uint64_t>> proj_space(uint64_t p, size_t dim);
// Index of a normalized representative within the proj_space order.
size_t proj_index(const std::vector<uint64_t>& t, uint64_t p);

std::vector<FpPoint> ambient_points(Ambient amb, uint64_t p);

uint64_t count_points(const FpCurve& C);

// Singular locus over F_p, plus the strictly quadratic part when
// degree_bound = 2.
struct Fp2Point {
    std::array<QuadField::Elt, 3> c;
    std::string str(const QuadField& K) const;
};
struct SingularLocus {
    std::vector<FpPoint> rational;
    std::vector<Fp2Point> quadratic; // points with a genuinely quadratic coordinate
};
SingularLocus singular_points(const FpCurve& C, int degree_bound);

// a = -sum chi(x^3 + Ax + B); #E(F_p) = p + 1 - a. Odd p only.
int64_t weierstrass_trace(uint64_t A, uint64_t B, uint64_t p);
// Brute-force companion: affine solution count of y^2 = x^3 + Ax + B.
uint64_t weierstrass_affine_count(uint64_t A, uint64_t B, uint64_t p);

// Restriction of a cubic to the line through P and Q: coefficients
// [a30, a21, a12, a03] of F(sP + tQ) in s^{3-j} t^j.
std::array<uint64_t, 4> restrict_to_chord(const FpCurve& C, const FpPoint& P, const FpPoint& Q);

// Third point of intersection of C with the line PQ (tangent when P = Q).
FpPoint third_intersection(const FpCurve& C, const FpPoint& P, const FpPoint& Q);

struct CubicWithOrigin {
    FpCurve curve;
    FpPoint origin;
};

FpPoint cubic_add(const CubicWithOrigin& G, const FpPoint& P, const FpPoint& Q);
FpPoint cubic_neg(const CubicWithOrigin& G, const FpPoint& P);
// Least m <= bound with m*P = origin; nullopt when none.
std::optional<unsigned> cubic_order(const CubicWithOrigin& G, const FpPoint& P, unsigned bound);

} // namespace mfcy

#endif
