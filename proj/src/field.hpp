// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_FIELD_HPP
#define MFCY_FIELD_HPP

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace mfcy {

// Arithmetic in F_p for machine-word p. Elements are canonical residues
// in [0, p).
class PrimeField {
public:
    explicit PrimeField(uint64_t p);

    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t neg(uint64_t a) const { return a ? p_ - a : 0; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((__uint128_t)a * b % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    uint64_t reduce(long long a) const {
        long long r = a % static_cast<long long>(p_);
        return static_cast<uint64_t>(r < 0 ? r + static_cast<long long>(p_) : r);
    }

    // Quadratic character: 0 at 0, +1 on squares, -1 otherwise.
    int chi(uint64_t a) const;

    // Least quadratic nonresidue; requires odd p.
    uint64_t nonresidue() const;

private:
    uint64_t p_;
};

// F_{p^2} elements as a + b*w. For odd p, w^2 = n with n a fixed
// nonresidue; for p = 2, w^2 = w + 1. Frobenius and conjugation helpers
// included since the quadratic extension is only used for diagnostics.
class QuadField {
public:
    explicit QuadField(uint64_t p);

    struct Elt {
        uint64_t a, b;
        bool operator==(const Elt&) const = default;
    };

    uint64_t p() const { return fp_.p(); }
    const PrimeField& base() const { return fp_; }

    Elt make(uint64_t a, uint64_t b) const { return {a, b}; }
    Elt from_base(uint64_t a) const { return {a, 0}; }
    bool is_zero(const Elt& x) const { return x.a == 0 && x.b == 0; }

    Elt add(const Elt& x, const Elt& y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
    Elt sub(const Elt& x, const Elt& y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
    Elt neg(const Elt& x) const { return {fp_.neg(x.a), fp_.neg(x.b)}; }
    Elt mul(const Elt& x, const Elt& y) const;
    Elt scalar_mul(uint64_t c, const Elt& x) const { return {fp_.mul(c, x.a), fp_.mul(c, x.b)}; }
    Elt inv(const Elt& x) const;

    // x^p, the nontrivial field automorphism.
    Elt frobenius(const Elt& x) const;

    // All p^2 elements in a fixed order (b-major, then a).
    std::vector<Elt> all_elements() const;

private:
    PrimeField fp_;
    uint64_t nr_; // w^2 for odd p; unused for p = 2
};

} // namespace mfcy

#endif
