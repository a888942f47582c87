// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "linsys.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mfcy {

namespace {

std::string qvec_str(const QVec& v, char sep = ':') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += rat_str(v[i]);
    }
    return s;
}

bool proportional(const Rat& a0, const Rat& a1, const Rat& b0, const Rat& b1) {
    return a0 * b1 - a1 * b0 == 0;
}

// First standard-basis combination independent of (x0, x1), used to
// complete a projective parametrization of a line.
std::pair<Rat, Rat> complete_pair(const Rat& x0, const Rat& x1) {
    if (!proportional(x0, x1, 1, 0)) return {1, 0};
    return {0, 1};
}

} // namespace

std::string Condition::str() const {
    switch (kind) {
        case Kind::PassThrough:
            return "pass " + qvec_str(point);
        case Kind::TangentAt:
            if (line.ruling_factor < 0)
                return "tangent " + qvec_str(line.covec) + " at " + qvec_str(point);
            return std::string("tangent ") + (line.ruling_factor == 0 ? "uline " : "vline ") +
                   qvec_str(line.covec) + " at " + qvec_str(point);
        case Kind::InflectionAt:
            return "inflect " + qvec_str(line.covec) + " at " + qvec_str(point);
    }
    return "?";
}

QVec monomial_row(Ambient amb, const QVec& point) {
    if (amb == Ambient::P2) {
        QVec row(10);
        for (size_t m = 0; m < 10; ++m) {
            Rat t = 1;
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < kCubicMonomials[m][v]; ++e) t *= point[v];
            row[m] = t;
        }
        return row;
    }
    QVec row(9);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            Rat t = 1;
            for (int e = 0; e < a; ++e) t *= point[0];
            for (int e = 0; e < 2 - a; ++e) t *= point[1];
            for (int e = 0; e < b; ++e) t *= point[2];
            for (int e = 0; e < 2 - b; ++e) t *= point[3];
            row[deg22_index(a, b)] = t;
        }
    return row;
}

namespace {

// Gradient of the monomial basis at a rational point: rows[v][m] is the
// v-th partial of monomial m.
std::array<QVec, 3> cubic_gradient_rows(const QVec& P) {
    std::array<QVec, 3> g = {QVec(10, Rat(0)), QVec(10, Rat(0)), QVec(10, Rat(0))};
    for (size_t m = 0; m < 10; ++m)
        for (int v = 0; v < 3; ++v) {
            int e = kCubicMonomials[m][v];
            if (e == 0) continue;
            Rat t = e;
            for (int w = 0; w < 3; ++w) {
                int pw = kCubicMonomials[m][w] - (w == v ? 1 : 0);
                for (int i = 0; i < pw; ++i) t *= P[w];
            }
            g[v][m] = t;
        }
    return g;
}

// Rows of the restriction of the cubic coefficient space to the line
// through P and Q: rows[j][m] is the s^{3-j} t^j coefficient of
// monomial m evaluated on s P + t Q.
std::array<QVec, 4> chord_rows(const QVec& P, const QVec& Q) {
    std::array<QVec, 4> rows = {QVec(10, Rat(0)), QVec(10, Rat(0)), QVec(10, Rat(0)),
                                QVec(10, Rat(0))};
    for (size_t m = 0; m < 10; ++m) {
        std::array<Rat, 4> conv{1, 0, 0, 0};
        int deg = 0;
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < kCubicMonomials[m][v]; ++e) {
                std::array<Rat, 4> next{0, 0, 0, 0};
                for (int j = 0; j <= deg; ++j) {
                    if (conv[j] == 0) continue;
                    next[j] += conv[j] * P[v];
                    next[j + 1] += conv[j] * Q[v];
                }
                conv = next;
                ++deg;
            }
        for (int j = 0; j <= 3; ++j) rows[j][m] = conv[j];
    }
    return rows;
}

// A second rational point on the P^2 line l, independent of P.
QVec second_point_on_line(const QVec& l, const QVec& P) {
    std::array<QVec, 3> cands = {QVec{-l[1], l[0], 0}, QVec{-l[2], Rat(0), l[0]},
                                 QVec{Rat(0), -l[2], l[1]}};
    for (auto& c : cands) {
        if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
        // reject candidates proportional to P
        bool prop = true;
        for (int i = 0; i < 3 && prop; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (c[i] * P[j] - c[j] * P[i] != 0) {
                    prop = false;
                    break;
                }
        if (!prop) return c;
    }
    throw UsageError("degenerate line in condition");
}

Rat eval_line(const QVec& l, const QVec& P) { return l[0] * P[0] + l[1] * P[1] + l[2] * P[2]; }

// Restriction rows for a ruling line on P^1 x P^1 with one factor fixed:
// rows[j] is the s^{2-j} t^j coefficient functional on the 9-dimensional
// coefficient space, where (s, t) parametrizes the free factor with the
// condition point at (1 : 0).
std::array<QVec, 3> ruling_rows(int factor, const QVec& fixed, const QVec& P) {
    QVec moving = factor == 0 ? QVec{P[2], P[3]} : QVec{P[0], P[1]};
    auto [c0, c1] = complete_pair(moving[0], moving[1]);
    QVec aux = {c0, c1};
    std::array<QVec, 3> rows = {QVec(9, Rat(0)), QVec(9, Rat(0)), QVec(9, Rat(0))};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            int fixed_exp = factor == 0 ? a : b;
            int move_exp = factor == 0 ? b : a;
            Rat scal = 1;
            for (int e = 0; e < fixed_exp; ++e) scal *= fixed[0];
            for (int e = 0; e < 2 - fixed_exp; ++e) scal *= fixed[1];
            // expand (s*m0 + t*aux0)^move_exp (s*m1 + t*aux1)^{2-move_exp}
            std::array<Rat, 3> conv{scal, 0, 0};
            int deg = 0;
            auto push = [&](const Rat& first, const Rat& second, int times) {
                for (int e = 0; e < times; ++e) {
                    std::array<Rat, 3> next{0, 0, 0};
                    for (int j = 0; j <= deg; ++j) {
                        if (conv[j] == 0) continue;
                        next[j] += conv[j] * first;
                        next[j + 1] += conv[j] * second;
                    }
                    conv = next;
                    ++deg;
                }
            };
            push(moving[0], aux[0], move_exp);
            push(moving[1], aux[1], 2 - move_exp);
            for (int j = 0; j < 3; ++j) rows[j][deg22_index(a, b)] += conv[j];
        }
    return rows;
}

} // namespace

QMat condition_rows(Ambient amb, const Condition& c) {
    QMat rows;
    if (c.kind == Condition::Kind::PassThrough) {
        rows.push_back(monomial_row(amb, c.point));
        return rows;
    }
    if (amb == Ambient::P2) {
        if (c.line.ruling_factor >= 0) throw UsageError("ruling line on P^2 condition");
        if (eval_line(c.line.covec, c.point) != 0)
            throw UsageError("condition point is not on its line");
        if (c.kind == Condition::Kind::TangentAt) {
            rows.push_back(monomial_row(amb, c.point));
            auto g = cubic_gradient_rows(c.point);
            const QVec& l = c.line.covec;
            // grad F(P) parallel to l: all 2x2 minors of the pair vanish
            for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
                QVec row(10);
                for (size_t m = 0; m < 10; ++m) row[m] = l[i] * g[j][m] - l[j] * g[i][m];
                rows.push_back(std::move(row));
            }
            return rows;
        }
        // Inflectional tangency: restriction to the line vanishes to order 3
        // at the point.
        QVec Q = second_point_on_line(c.line.covec, c.point);
        auto r = chord_rows(c.point, Q);
        rows.push_back(r[0]);
        rows.push_back(r[1]);
        rows.push_back(r[2]);
        return rows;
    }
    // P^1 x P^1
    if (c.kind == Condition::Kind::InflectionAt)
        throw UsageError("inflection conditions are not defined on P^1 x P^1");
    if (c.line.ruling_factor != 0 && c.line.ruling_factor != 1)
        throw UsageError("tangency on P^1 x P^1 needs a ruling line");
    const QVec& fx = c.line.covec;
    const QVec blk = c.line.ruling_factor == 0 ? QVec{c.point[0], c.point[1]}
                                               : QVec{c.point[2], c.point[3]};
    if (!proportional(blk[0], blk[1], fx[0], fx[1]))
        throw UsageError("condition point is not on its ruling line");
    auto r = ruling_rows(c.line.ruling_factor, fx, c.point);
    rows.push_back(r[0]);
    rows.push_back(r[1]);
    return rows;
}

LinearSystem solve_conditions(Ambient amb, const std::vector<Condition>& conds) {
    size_t ncols = amb == Ambient::P2 ? 10 : 9;
    QMat rows;
    for (auto& c : conds) {
        QMat r = condition_rows(amb, c);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    QMat basis = nullspace(rows, ncols);
    if (basis.empty()) throw InconsistentConditions("conditions force the zero curve");
    return {amb, std::move(basis), conds, {}};
}

bool same_subspace(const LinearSystem& s, const QMat& vectors) {
    return spans_equal(s.basis, vectors);
}

LinearSystem slice(const LinearSystem& s, const std::vector<Condition>& extra) {
    std::vector<Condition> all = s.conditions;
    all.insert(all.end(), extra.begin(), extra.end());
    LinearSystem out = solve_conditions(s.ambient, all);
    out.bad_primes = s.bad_primes;
    return out;
}

std::vector<FpCurve> reduce_mod_p(const LinearSystem& s, uint64_t p) {
    if (s.bad_primes.count(p))
        throw BadPrime("prime " + std::to_string(p) + " is excluded for this system");
    std::vector<FpCurve> out;
    std::vector<std::vector<uint64_t>> reduced;
    for (auto& row : s.basis) {
        auto r = reduce_vec_mod_p(row, p);
        if (!r) throw BadPrime("denominator divisible by " + std::to_string(p));
        reduced.push_back(*r);
        out.push_back({s.ambient, p, *r});
    }
    // rank over F_p must match the rational dimension
    PrimeField F(p);
    auto m = reduced;
    size_t ncols = m.empty() ? 0 : m[0].size();
    size_t rk = 0;
    for (size_t col = 0; col < ncols && rk < m.size(); ++col) {
        size_t sel = rk;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rk], m[sel]);
        uint64_t inv = F.inv(m[rk][col]);
        for (auto& x : m[rk]) x = F.mul(x, inv);
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == rk || m[i][col] == 0) continue;
            uint64_t f = m[i][col];
            for (size_t j = 0; j < ncols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[rk][j]));
        }
        ++rk;
    }
    if (rk != s.basis.size())
        throw BadPrime("rank drops mod " + std::to_string(p));
    return out;
}

} // namespace mfcy
