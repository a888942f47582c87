// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "toddlab.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "errors.hpp"

namespace mfcy {

namespace {

using Expo = std::vector<unsigned>;
using Poly = std::map<Expo, Rat>;

unsigned grade_of(const Expo& e, const std::vector<unsigned>& w) {
    unsigned g = 0;
    for (size_t i = 0; i < e.size(); ++i) g += e[i] * w[i];
    return g;
}

void add_term(Poly& p, const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = p.emplace(e, c);
    if (fresh) return;
    it->second += c;
    if (it->second == 0) p.erase(it);
}

Poly poly_mul(const Poly& a, const Poly& b, const std::vector<unsigned>& w, unsigned maxg) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        unsigned ga = grade_of(ea, w);
        for (const auto& [eb, cb] : b) {
            if (ga + grade_of(eb, w) > maxg) continue;
            Expo e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(out, e, ca * cb);
        }
    }
    return out;
}

// P_k in the c_i by Newton's identities, for k = 1..m.
std::vector<Poly> newton_power_sums(unsigned m) {
    std::vector<Poly> P(m + 1);
    for (unsigned k = 1; k <= m; ++k) {
        Poly pk;
        Expo ek(m, 0);
        ek[k - 1] = 1;
        add_term(pk, ek, Rat(k % 2 ? long(k) : -long(k)));
        for (unsigned i = 1; i < k; ++i) {
            Rat sign((k - 1 + i) % 2 == 0 ? 1 : -1);
            for (const auto& [e, c] : P[i]) {
                Expo e2 = e;
                e2[k - i - 1] += 1;
                add_term(pk, e2, sign * c);
            }
        }
        P[k] = std::move(pk);
    }
    return P;
}

} // namespace

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    size_t n = std::min(a.prec(), b.prec());
    RationalSeries out{std::vector<Rat>(n, Rat(0))};
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

RationalSeries series_inv(const RationalSeries& a) {
    if (a.prec() == 0 || a.coeffs[0] == 0)
        throw UsageError("series has no reciprocal without a unit constant term");
    RationalSeries out{std::vector<Rat>(a.prec(), Rat(0))};
    Rat u = Rat(1) / a.coeffs[0];
    out.coeffs[0] = u;
    for (size_t n = 1; n < a.prec(); ++n) {
        Rat s(0);
        for (size_t k = 1; k <= n; ++k) s += a.coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = -u * s;
    }
    return out;
}

RationalSeries series_exp(const RationalSeries& a) {
    if (a.prec() == 0 || a.coeffs[0] != 0)
        throw UsageError("exp needs constant term 0");
    RationalSeries out{std::vector<Rat>(a.prec(), Rat(0))};
    out.coeffs[0] = 1;
    // n E_n = sum_k k a_k E_{n-k}
    for (size_t n = 1; n < a.prec(); ++n) {
        Rat s(0);
        for (size_t k = 1; k <= n; ++k) s += Rat(long(k)) * a.coeffs[k] * out.coeffs[n - k];
        out.coeffs[n] = s / Rat(long(n));
    }
    return out;
}

RationalSeries series_log(const RationalSeries& a) {
    if (a.prec() == 0 || a.coeffs[0] != 1)
        throw UsageError("log needs constant term 1");
    RationalSeries out{std::vector<Rat>(a.prec(), Rat(0))};
    if (a.prec() == 1) return out;
    // L' = a'/a, integrated term by term
    RationalSeries da{std::vector<Rat>(a.prec() - 1, Rat(0))};
    RationalSeries at{std::vector<Rat>(a.coeffs.begin(), a.coeffs.end() - 1)};
    for (size_t k = 0; k + 1 < a.prec(); ++k) da.coeffs[k] = Rat(long(k + 1)) * a.coeffs[k + 1];
    RationalSeries q = series_mul(da, series_inv(at));
    for (size_t n = 1; n < a.prec(); ++n) out.coeffs[n] = q.coeffs[n - 1] / Rat(long(n));
    return out;
}

RationalSeries td_series(size_t prec) {
    if (prec == 0) throw UsageError("precision must be positive");
    // (1 - exp(-t)) / t has k-th coefficient (-1)^k / (k+1)!
    RationalSeries u{std::vector<Rat>(prec, Rat(0))};
    Int fact(1);
    for (size_t k = 0; k < prec; ++k) {
        fact *= long(k + 1);
        u.coeffs[k] = Rat(k % 2 ? -1 : 1) / Rat(fact);
    }
    return series_inv(u);
}

Rat power_sum(unsigned m) {
    if (m == 0) throw UsageError("power sums start at m = 1");
    RationalSeries lt = series_log(td_series(m + 1));
    Rat s = lt.coeffs[m];
    return Rat(m % 2 ? long(m) : -long(m)) * s;
}

Rat top_chern_coefficient(unsigned m) { return power_sum(m); }

Rat ChernPolynomial::coefficient(const std::vector<unsigned>& expo) const {
    if (expo.size() != m) throw UsageError("exponent vector has the wrong length");
    auto it = terms.find(expo);
    return it == terms.end() ? Rat(0) : it->second;
}

Rat ChernPolynomial::evaluate(const std::vector<Rat>& values) const {
    if (values.size() != m) throw UsageError("need one value per Chern class");
    Rat total(0);
    for (const auto& [e, c] : terms) {
        Rat term = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned rep = 0; rep < e[i]; ++rep) term *= values[i];
        total += term;
    }
    return total;
}

std::string ChernPolynomial::str() const {
    if (terms.empty()) return "0";
    std::vector<unsigned> w(m);
    for (unsigned i = 0; i < m; ++i) w[i] = i + 1;
    std::vector<std::pair<const Expo*, const Rat*>> order;
    for (const auto& [e, c] : terms) order.push_back({&e, &c});
    std::stable_sort(order.begin(), order.end(), [&](const auto& x, const auto& y) {
        unsigned gx = grade_of(*x.first, w), gy = grade_of(*y.first, w);
        if (gx != gy) return gx > gy;
        return *x.first > *y.first;
    });
    std::string out;
    for (const auto& [ep, cp] : order) {
        bool neg = *cp < 0;
        Rat mag = neg ? Rat(-*cp) : *cp;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        std::string mono;
        for (size_t i = 0; i < ep->size(); ++i) {
            if ((*ep)[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "c" + std::to_string(i + 1);
            if ((*ep)[i] > 1) mono += "^" + std::to_string((*ep)[i]);
        }
        if (mono.empty())
            out += rat_str(mag);
        else if (mag == 1)
            out += mono;
        else
            out += rat_str(mag) + "*" + mono;
    }
    return out;
}

ChernPolynomial todd_polynomial(unsigned m, unsigned bound) {
    if (m == 0) throw UsageError("degree must be positive");
    if (m > bound) throw UsageError("degree exceeds the polynomial bound");
    std::vector<unsigned> w(m);
    for (unsigned i = 0; i < m; ++i) w[i] = i + 1;
    std::vector<Poly> P = newton_power_sums(m);
    RationalSeries lt = series_log(td_series(m + 1));
    Poly A;
    for (unsigned k = 1; k <= m; ++k)
        for (const auto& [e, c] : P[k]) add_term(A, e, lt.coeffs[k] * c);
    Poly E;
    add_term(E, Expo(m, 0), Rat(1));
    Poly term = E;
    for (unsigned j = 1; j <= m; ++j) {
        term = poly_mul(term, A, w, m);
        for (auto& [e, c] : term) c /= long(j);
        for (const auto& [e, c] : term) add_term(E, e, c);
    }
    ChernPolynomial out{m, {}};
    for (const auto& [e, c] : E)
        if (grade_of(e, w) == m) out.terms.emplace(e, c);
    return out;
}

ChernPolynomial todd_polynomial_roots(unsigned m) {
    if (m == 0 || m > 8) throw UsageError("root expansion supports degrees 1 to 8");
    std::vector<unsigned> w1(m, 1);
    RationalSeries td = td_series(m + 1);
    Poly prod;
    add_term(prod, Expo(m, 0), Rat(1));
    for (unsigned i = 0; i < m; ++i) {
        Poly f;
        for (unsigned k = 0; k <= m; ++k) {
            Expo e(m, 0);
            e[i] = k;
            add_term(f, e, td.coeffs[k]);
        }
        prod = poly_mul(prod, f, w1, m);
    }
    Poly piece;
    for (const auto& [e, c] : prod)
        if (grade_of(e, w1) == m) piece.emplace(e, c);
    // elementary symmetric polynomials of the roots
    std::vector<Poly> elem(m + 1);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        Expo e(m, 0);
        for (unsigned bit = 0; bit < m; ++bit)
            if (mask & (1u << bit)) e[bit] = 1;
        elem[std::popcount(mask)].emplace(e, Rat(1));
    }
    // peel off the leading monomial with the matching elementary product
    ChernPolynomial out{m, {}};
    while (!piece.empty()) {
        auto lead = std::prev(piece.end());
        Expo lam = lead->first;
        Rat coef = lead->second;
        for (size_t i = 0; i + 1 < lam.size(); ++i)
            if (lam[i] < lam[i + 1]) throw std::logic_error("root expansion lost symmetry");
        Expo a(m, 0);
        for (unsigned k = 0; k < m; ++k) a[k] = lam[k] - (k + 1 < m ? lam[k + 1] : 0);
        out.terms.emplace(a, coef);
        Poly sub;
        add_term(sub, Expo(m, 0), Rat(1));
        for (unsigned k = 0; k < m; ++k)
            for (unsigned rep = 0; rep < a[k]; ++rep) sub = poly_mul(sub, elem[k + 1], w1, m);
        for (const auto& [e, c] : sub) add_term(piece, e, -(coef * c));
    }
    return out;
}

Rat projective_genus(unsigned m) {
    ChernPolynomial T = todd_polynomial(m, std::max(8u, m));
    std::vector<Rat> values(m);
    for (unsigned i = 1; i <= m; ++i) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), m + 1, i);
        values[i - 1] = Rat(b);
    }
    return T.evaluate(values);
}

} // namespace mfcy
