// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_TODDLAB_HPP
#define MFCY_TODDLAB_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace mfcy {

// Truncated power series with exact rational coefficients; index k holds
// the t^k coefficient.
struct RationalSeries {
    std::vector<Rat> coeffs;

    size_t prec() const { return coeffs.size(); }
    bool operator==(const RationalSeries&) const = default;
};

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
// reciprocal of a series with nonzero constant term
RationalSeries series_inv(const RationalSeries& a);
// exp wants constant term 0, log wants constant term 1; the two are
// mutually inverse up to truncation
RationalSeries series_exp(const RationalSeries& a);
RationalSeries series_log(const RationalSeries& a);

// t / (1 - exp(-t)) = 1 + t/2 + t^2/12 - t^4/720 + ..., by exact
// inversion of (1 - exp(-t)) / t.
RationalSeries td_series(size_t prec);

// m-th power sum of the formal roots, (-1)^(m-1) * m * [t^m] of the log
// of td_series. The log satisfies f(-t) = f(t) - t, so every odd power
// sum past the first vanishes.
Rat power_sum(unsigned m);

// Coefficient of c_m in the m-th graded piece below; equals
// power_sum(m), and is therefore 0 in every odd degree m >= 3.
Rat top_chern_coefficient(unsigned m);

// Polynomial in Chern classes c_1..c_m with exact coefficients; c_i has
// grade i and stored grades never exceed m. Keys are exponent vectors of
// length m.
struct ChernPolynomial {
    unsigned m = 0;
    std::map<std::vector<unsigned>, Rat> terms;

    Rat coefficient(const std::vector<unsigned>& expo) const;
    // substitute c_i := values[i-1]
    Rat evaluate(const std::vector<Rat>& values) const;
    // descending graded-lexicographic term order
    std::string str() const;

    bool operator==(const ChernPolynomial&) const = default;
};

// Degree-m graded piece of the multiplicative expansion, written in the
// c_i via power sums and Newton's identities. The bound caps term
// growth; raise it explicitly for larger m.
ChernPolynomial todd_polynomial(unsigned m, unsigned bound = 8);

// Same polynomial by brute force: expand the product of td(g_i t) over m
// symbolic roots and rewrite the symmetric result in elementary
// symmetric functions. Exists to cross-check the Newton route.
ChernPolynomial todd_polynomial_roots(unsigned m);

// Specialize todd_polynomial(m) at c_i = binomial(m+1, i), the Chern
// classes of projective m-space. Always 1.
Rat projective_genus(unsigned m);

} // namespace mfcy

#endif
