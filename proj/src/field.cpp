// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "field.hpp"

#include "bigint.hpp"

namespace mfcy {

PrimeField::PrimeField(uint64_t p) : p_(p) {
    if (!is_prime(p)) throw BadPrime("modulus " + std::to_string(p) + " is not prime");
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t PrimeField::inv(uint64_t a) const {
    a %= p_;
    if (a == 0) throw DegenerateError("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

int PrimeField::chi(uint64_t a) const {
    a %= p_;
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    uint64_t t = pow(a, (p_ - 1) / 2);
    return t == 1 ? 1 : -1;
}

uint64_t PrimeField::nonresidue() const {
    if (p_ == 2) throw BadPrime("no quadratic nonresidue in F_2");
    for (uint64_t n = 2; n < p_; ++n)
        if (chi(n) == -1) return n;
    throw DegenerateError("nonresidue search failed");
}

QuadField::QuadField(uint64_t p) : fp_(p), nr_(p == 2 ? 0 : fp_.nonresidue()) {}

QuadField::Elt QuadField::mul(const Elt& x, const Elt& y) const {
    const PrimeField& F = fp_;
    uint64_t cross = F.add(F.mul(x.a, y.b), F.mul(x.b, y.a));
    uint64_t bb = F.mul(x.b, y.b);
    if (F.p() == 2) {
        // w^2 = w + 1
        return {F.add(F.mul(x.a, y.a), bb), F.add(cross, bb)};
    }
    return {F.add(F.mul(x.a, y.a), F.mul(nr_, bb)), cross};
}

QuadField::Elt QuadField::inv(const Elt& x) const {
    const PrimeField& F = fp_;
    if (is_zero(x)) throw DegenerateError("division by zero in quadratic extension");
    if (F.p() == 2) {
        // Norm x * x^p; brute force over the 3 nonzero elements is overkill,
        // but the field has 4 elements so search directly.
        for (uint64_t a = 0; a < 2; ++a)
            for (uint64_t b = 0; b < 2; ++b) {
                Elt c{a, b};
                Elt prod = mul(x, c);
                if (prod.a == 1 && prod.b == 0) return c;
            }
        throw DegenerateError("inverse not found in F_4");
    }
    // (a + bw)(a - bw) = a^2 - n b^2
    uint64_t nrm = F.sub(F.mul(x.a, x.a), F.mul(nr_, F.mul(x.b, x.b)));
    uint64_t ni = F.inv(nrm);
    return {F.mul(x.a, ni), F.mul(F.neg(x.b), ni)};
}

QuadField::Elt QuadField::frobenius(const Elt& x) const {
    const PrimeField& F = fp_;
    if (F.p() == 2) {
        // (a + bw)^2 = a + b + bw using w^2 = w + 1 in characteristic 2
        return {F.add(x.a, x.b), x.b};
    }
    return {x.a, F.neg(x.b)};
}

std::vector<QuadField::Elt> QuadField::all_elements() const {
    std::vector<Elt> out;
    out.reserve(fp_.p() * fp_.p());
    for (uint64_t b = 0; b < fp_.p(); ++b)
        for (uint64_t a = 0; a < fp_.p(); ++a) out.push_back({a, b});
    return out;
}

} // namespace mfcy
