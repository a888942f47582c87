// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_FROBLAB_HPP
#define MFCY_FROBLAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "cache.hpp"
#include "planegeom.hpp"
#include "ratmat.hpp"
#include "series.hpp"

namespace mfcy {

// A fibred family of curves over a finite-dimensional parameter space.
// Cubic and (2,2) families are spanned by generator coefficient vectors
// (parameters in P^d); the Weierstrass family ranges over the affine
// (A, B) plane minus the discriminant locus.
struct Family {
    enum class Kind { Pencil, Weierstrass };

    std::string id;
    Kind kind = Kind::Pencil;
    Ambient amb = Ambient::P2;
    QMat generators; // d+1 rows; empty for Weierstrass

    // nonlinear parameter constraints of the alternate constructions
    enum class Predicate { None, ResidualMatch, ResidualRulingTangent };
    Predicate predicate = Predicate::None;

    QVec origin, marked; // group-law data, cubic families only
    unsigned torsion = 0;

    unsigned moment_exp = 0; // r
    unsigned form_level = 0, form_weight = 0;

    size_t dim() const { return kind == Kind::Weierstrass ? 2 : generators.size() - 1; }
};

const std::vector<Family>& family_registry();
const Family& family(const std::string& id);

// Scan policy: p > 5 and p coprime to the form level.
bool good_prime(const Family& F, uint64_t p);

std::vector<uint64_t> good_primes_up_to(const Family& F, uint64_t bound);

// Parameter rendering used in reports and cache records: coordinates
// joined by ':' regardless of dimension.
std::string param_str(const FpPoint& param);

struct TraceRecord {
    FpPoint param;
    uint64_t n;       // fibre point count
    int64_t a;        // p + 1 - n
    bool fp_singular; // fibre has a rational singular point
};

struct TraceTable {
    std::string family_id;
    uint64_t p = 0;
    std::vector<TraceRecord> records;
};

TraceTable scan(const Family& F, uint64_t p, const CacheStore* cache = nullptr);

// The fibre equation at one parameter point (pencil families).
FpCurve fibre_at(const Family& F, uint64_t p, const FpPoint& param);

struct MomentReport {
    std::string family_id;
    uint64_t p = 0;
    unsigned r = 0;
    Int m_all = 0, m_smooth = 0;
    size_t singular_count = 0, record_count = 0;
};

MomentReport moment(const TraceTable& T, unsigned r);

// Named fit-basis functions of p: "ap", "p*ap", "p^j" (with "1" and "p"
// accepted), and "chi<D>*p^j" for the quadratic character of discriminant D.
Rat basis_value(const std::string& name, const NewformSpec& form, uint64_t p);

struct FitModel {
    std::string family_id;
    unsigned r = 0;
    std::vector<std::string> basis;
    std::vector<Rat> coeffs;
    std::vector<uint64_t> fit_primes;
};

FitModel fit(const Family& F, unsigned r, const std::vector<std::string>& basis,
             const std::vector<uint64_t>& fit_primes, const CacheStore* cache = nullptr);

Rat eval_model(const FitModel& M, uint64_t p);

struct ResidualRow {
    uint64_t p;
    Rat residual; // moment minus model
};

std::vector<ResidualRow> validate(const FitModel& M, const std::vector<uint64_t>& primes,
                                  const CacheStore* cache = nullptr);

// Trace of sym^m of a Frobenius conjugacy class with trace a and
// determinant p^{k-1}.
Int sym_trace(const Int& a, uint64_t p, unsigned k, unsigned m);

Int rankin_trace(const Int& a_g, const Int& a_h);
unsigned rankin_weight(unsigned k, unsigned r);

struct KummerCounts {
    int64_t a = 0;
    uint64_t f2 = 0; // squared count of rational 2-torsion points
    uint64_t singular_quotient_count = 0;
    uint64_t smooth_model_count = 0;
};

// Closed-form counts for the quotient of a product of two copies of
// y^2 = x^3 + Ax + B by simultaneous negation, and its blow-up.
KummerCounts kummer_counts(uint64_t A, uint64_t B, uint64_t p);

// Independent route: enumerate Frobenius-stable orbits over F_{p^2}.
KummerCounts kummer_counts_enumerated(uint64_t A, uint64_t B, uint64_t p);

// Frobenius trace of the conductor-11 curve y^2 + y = x^3 - x^2 - 10x - 20.
int64_t conductor11_trace(uint64_t p);

} // namespace mfcy

#endif
