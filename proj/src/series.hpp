// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_SERIES_HPP
#define MFCY_SERIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace mfcy {

// Truncated integer power series in q. coeffs()[n] is the coefficient of
// q^n; precision is coeffs().size(), exclusive.
class PowerSeries {
public:
    explicit PowerSeries(size_t prec) : c_(prec, Int(0)) {
        if (prec == 0) throw UsageError("power series precision must be >= 1");
    }
    static PowerSeries one(size_t prec) {
        PowerSeries s(prec);
        s.c_[0] = 1;
        return s;
    }

    size_t prec() const { return c_.size(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& operator[](size_t n) const { return c_.at(n); }
    Int& at(size_t n) { return c_.at(n); }

    PowerSeries add(const PowerSeries& o) const;
    PowerSeries mul(const PowerSeries& o) const;
    // Integer power, negative allowed when the constant term is a unit.
    PowerSeries pow(long e) const;
    // Reciprocal; requires constant term +-1.
    PowerSeries inverse() const;
    // Substitute q -> q^d.
    PowerSeries spread(size_t d, size_t prec) const;
    PowerSeries truncate(size_t prec) const;

private:
    std::vector<Int> c_;
};

struct EtaFactor {
    unsigned d; // divisor argument: eta(d z)
    int r;      // exponent
};

struct EtaQuotient {
    std::vector<EtaFactor> factors;

    // Sum r_d / 2; integral for all registry entries.
    int weight_times_two() const;
    // Sum d r_d / 24 as an exact rational (num, den) in lowest terms.
    std::pair<long, long> q_order() const;
};

struct NewformSpec {
    unsigned level;
    unsigned weight;
    EtaQuotient recipe;
    std::string label;
};

// The built-in rational newforms, in (level, weight) order:
// (1,12), (2,8), (3,6), (4,6), (5,4), (6,4), (11,2).
const std::vector<NewformSpec>& newform_registry();

// Lookup by level and weight; throws UsageError when absent.
const NewformSpec& newform(unsigned level, unsigned weight);

// q^(q-order) * prod_d prod_m (1 - q^{dm})^{r_d}, truncated at prec.
PowerSeries eta_expand(const EtaQuotient& recipe, size_t prec);

// n-th coefficient of the expansion; a_1 = 1 for every registry form.
Int ap(const NewformSpec& spec, size_t n);

// One violated Hecke identity.
struct HeckeViolation {
    std::string identity; // rendered relation, e.g. "a_6 = a_2*a_3"
    Int lhs, rhs;
};

// Checks multiplicativity and the p-power recursions on all indices < prec.
// The series argument allows fault-injection tests; pass the natural
// expansion for a real check.
std::vector<HeckeViolation> hecke_check(const NewformSpec& spec, size_t prec);
std::vector<HeckeViolation> hecke_check_series(const NewformSpec& spec, const PowerSeries& s);

// Degree <= 2 local factor: [c0, c1, c2] meaning c0 + c1 T + c2 T^2.
std::vector<Int> euler_factor(const NewformSpec& spec, uint64_t p);

} // namespace mfcy

#endif
