// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "series.hpp"

#include <numeric>

namespace mfcy {

PowerSeries PowerSeries::add(const PowerSeries& o) const {
    size_t n = std::min(prec(), o.prec());
    PowerSeries r(n);
    for (size_t i = 0; i < n; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PowerSeries PowerSeries::mul(const PowerSeries& o) const {
    size_t n = std::min(prec(), o.prec());
    PowerSeries r(n);
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PowerSeries r = one(prec());
    PowerSeries b = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r.mul(b);
        if (k >>= 1) b = b.mul(b);
    }
    return r;
}

PowerSeries PowerSeries::inverse() const {
    if (c_[0] != 1 && c_[0] != -1)
        throw DegenerateError("series inverse needs unit constant term");
    size_t n = prec();
    PowerSeries r(n);
    Int u0 = c_[0]; // +-1, its own inverse
    r.c_[0] = u0;
    for (size_t k = 1; k < n; ++k) {
        Int acc(0);
        for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -u0 * acc;
    }
    return r;
}

PowerSeries PowerSeries::spread(size_t d, size_t prec_out) const {
    PowerSeries r(prec_out);
    for (size_t i = 0; i * d < prec_out && i < prec(); ++i) r.c_[i * d] = c_[i];
    return r;
}

PowerSeries PowerSeries::truncate(size_t prec_out) const {
    PowerSeries r(prec_out);
    for (size_t i = 0; i < prec_out && i < prec(); ++i) r.c_[i] = c_[i];
    return r;
}

int EtaQuotient::weight_times_two() const {
    int s = 0;
    for (auto& f : factors) s += f.r;
    return s;
}

std::pair<long, long> EtaQuotient::q_order() const {
    long num = 0;
    for (auto& f : factors) num += static_cast<long>(f.d) * f.r;
    long den = 24;
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

namespace {

// prod_{m >= 1} (1 - q^m) via the pentagonal number theorem; only
// O(sqrt(prec)) nonzero terms.
PowerSeries euler_product(size_t prec) {
    PowerSeries e(prec);
    e.at(0) = 1;
    for (long k = 1;; ++k) {
        long n1 = k * (3 * k - 1) / 2;
        long n2 = k * (3 * k + 1) / 2;
        if (n1 >= static_cast<long>(prec) && n2 >= static_cast<long>(prec)) break;
        Int sign = (k % 2 == 0) ? 1 : -1;
        if (n1 < static_cast<long>(prec)) e.at(n1) += sign;
        if (n2 < static_cast<long>(prec)) e.at(n2) += sign;
    }
    return e;
}

} // namespace

PowerSeries eta_expand(const EtaQuotient& recipe, size_t prec) {
    if (prec == 0) throw UsageError("eta expansion precision must be >= 1");
    auto [qnum, qden] = recipe.q_order();
    if (qden != 1 || qnum < 0)
        throw UsageError("eta quotient has non-integral or negative q-order");
    size_t shift = static_cast<size_t>(qnum);
    PowerSeries acc = PowerSeries::one(prec);
    PowerSeries base = euler_product(prec);
    for (auto& f : recipe.factors) {
        if (f.d == 0 || f.r == 0) throw UsageError("eta factor needs d >= 1 and r != 0");
        acc = acc.mul(base.spread(f.d, prec).pow(f.r));
    }
    PowerSeries out(prec);
    for (size_t i = 0; i + shift < prec; ++i) out.at(i + shift) = acc[i];
    return out;
}

const std::vector<NewformSpec>& newform_registry() {
    static const std::vector<NewformSpec> reg = {
        {1, 12, {{{1, 24}}}, "1.12"},
        {2, 8, {{{1, 8}, {2, 8}}}, "2.8"},
        {3, 6, {{{1, 6}, {3, 6}}}, "3.6"},
        {4, 6, {{{2, 12}}}, "4.6"},
        {5, 4, {{{1, 4}, {5, 4}}}, "5.4"},
        {6, 4, {{{1, 2}, {2, 2}, {3, 2}, {6, 2}}}, "6.4"},
        {11, 2, {{{1, 2}, {11, 2}}}, "11.2"},
    };
    return reg;
}

const NewformSpec& newform(unsigned level, unsigned weight) {
    for (auto& f : newform_registry())
        if (f.level == level && f.weight == weight) return f;
    throw UsageError("no registry form at level " + std::to_string(level) + " weight " +
                     std::to_string(weight));
}

Int ap(const NewformSpec& spec, size_t n) {
    if (n < 1) throw UsageError("coefficient index must be >= 1");
    PowerSeries s = eta_expand(spec.recipe, n + 1);
    return s[n];
}

std::vector<HeckeViolation> hecke_check(const NewformSpec& spec, size_t prec) {
    return hecke_check_series(spec, eta_expand(spec.recipe, prec));
}

std::vector<HeckeViolation> hecke_check_series(const NewformSpec& spec, const PowerSeries& s) {
    if (s.prec() < 2) throw UsageError("hecke check needs precision >= 2");
    std::vector<HeckeViolation> bad;
    size_t prec = s.prec();
    auto a = [&](size_t n) -> const Int& { return s[n]; };

    if (a(1) != 1)
        bad.push_back({"a_1 = 1", a(1), Int(1)});

    // a_{mn} = a_m a_n for coprime m, n > 1
    for (size_t m = 2; m * 2 < prec; ++m)
        for (size_t n = m + 1; m * n < prec; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (a(m * n) != a(m) * a(n))
                bad.push_back({"a_" + std::to_string(m * n) + " = a_" + std::to_string(m) +
                                   "*a_" + std::to_string(n),
                               a(m * n), a(m) * a(n)});
        }

    for (uint64_t p : primes_below(prec)) {
        bool divides = spec.level % p == 0;
        Int pk = divides ? Int(0) : int_pow(static_cast<long>(p), spec.weight - 1);
        // p-power ladder: a_{p^{r+1}} = a_p a_{p^r} - p^{k-1} a_{p^{r-1}} away
        // from the level, a_{p^r} = a_p^r at the level.
        size_t pr = p; // p^r
        size_t r = 1;
        while (pr * p < prec) {
            size_t next = pr * p;
            if (divides) {
                Int want = int_pow(a(p), static_cast<unsigned long>(r + 1));
                if (a(next) != want)
                    bad.push_back({"a_" + std::to_string(next) + " = a_" + std::to_string(p) +
                                       "^" + std::to_string(r + 1),
                                   a(next), want});
            } else {
                Int want = a(p) * a(pr) - pk * (r >= 2 ? a(pr / p) : Int(1));
                if (a(next) != want)
                    bad.push_back({"a_" + std::to_string(next) + " = a_" + std::to_string(p) +
                                       "*a_" + std::to_string(pr) + " - p^(k-1)*a_" +
                                       std::to_string(pr / p),
                                   a(next), want});
            }
            pr = next;
            ++r;
        }
    }
    return bad;
}

std::vector<Int> euler_factor(const NewformSpec& spec, uint64_t p) {
    if (!is_prime(p)) throw BadPrime(std::to_string(p) + " is not prime");
    Int a = ap(spec, p);
    if (spec.level % p == 0) return {Int(1), -a};
    return {Int(1), -a, int_pow(static_cast<long>(p), spec.weight - 1)};
}

} // namespace mfcy
