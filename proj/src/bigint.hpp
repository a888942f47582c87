// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_BIGINT_HPP
#define MFCY_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mfcy {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

// Renders n/1 as "n", otherwise "num/den" with den > 0.
inline std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<uint64_t> primes_below(uint64_t bound) {
    std::vector<uint64_t> out;
    for (uint64_t n = 2; n < bound; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

// Kronecker symbol (d|p) for odd prime p, d any integer.
inline int kronecker_mod_p(long d, uint64_t p) {
    Int a(d), m(static_cast<unsigned long>(p));
    return mpz_kronecker(a.get_mpz_t(), m.get_mpz_t());
}

} // namespace mfcy

#endif
