// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "planegeom.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mfcy {

const std::array<std::array<int, 3>, 10> kCubicMonomials = {{
    {3, 0, 0},
    {2, 1, 0},
    {2, 0, 1},
    {1, 2, 0},
    {1, 1, 1},
    {1, 0, 2},
    {0, 3, 0},
    {0, 2, 1},
    {0, 1, 2},
    {0, 0, 3},
}};

std::string FpPoint::str() const {
    std::string s;
    size_t split = c.size() == 4 ? 2 : c.size();
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) s += (i == split) ? ',' : ':';
        s += std::to_string(c[i]);
    }
    return s;
}

FpPoint normalize_point(Ambient amb, std::vector<uint64_t> coords, const PrimeField& F) {
    size_t want = amb == Ambient::P2 ? 3 : 4;
    if (coords.size() != want) throw UsageError("wrong coordinate count for ambient");
    for (auto& x : coords) x %= F.p();
    size_t nblocks = amb == Ambient::P2 ? 1 : 2;
    for (size_t b = 0; b < nblocks; ++b) {
        size_t lo = b * 2, hi = amb == Ambient::P2 ? 3 : lo + 2;
        size_t lead = lo;
        while (lead < hi && coords[lead] == 0) ++lead;
        if (lead == hi) throw DegeneratePoint("zero homogeneous block");
        uint64_t inv = F.inv(coords[lead]);
        for (size_t i = lo; i < hi; ++i) coords[i] = F.mul(coords[i], inv);
    }
    return {std::move(coords)};
}

uint64_t eval_curve(const FpCurve& C, const FpPoint& P) {
    PrimeField F(C.p);
    uint64_t acc = 0;
    if (C.amb == Ambient::P2) {
        for (size_t m = 0; m < 10; ++m) {
            if (C.co[m] == 0) continue;
            uint64_t t = C.co[m];
            for (int v = 0; v < 3; ++v)
                for (int e = 0; e < kCubicMonomials[m][v]; ++e) t = F.mul(t, P.c[v]);
            acc = F.add(acc, t);
        }
        return acc;
    }
    uint64_t u = P.c[0], s = P.c[1], v = P.c[2], t = P.c[3];
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            uint64_t co = C.co[deg22_index(a, b)];
            if (co == 0) continue;
            uint64_t term = co;
            for (int e = 0; e < a; ++e) term = F.mul(term, u);
            for (int e = 0; e < 2 - a; ++e) term = F.mul(term, s);
            for (int e = 0; e < b; ++e) term = F.mul(term, v);
            for (int e = 0; e < 2 - b; ++e) term = F.mul(term, t);
            acc = F.add(acc, term);
        }
    return acc;
}

std::array<uint64_t, 3> cubic_gradient(const FpCurve& C, const FpPoint& P) {
    PrimeField F(C.p);
    std::array<uint64_t, 3> g{0, 0, 0};
    for (size_t m = 0; m < 10; ++m) {
        if (C.co[m] == 0) continue;
        for (int v = 0; v < 3; ++v) {
            int e = kCubicMonomials[m][v];
            if (e == 0) continue;
            uint64_t t = F.mul(C.co[m], static_cast<uint64_t>(e) % C.p);
            for (int w = 0; w < 3; ++w) {
                int pw = kCubicMonomials[m][w] - (w == v ? 1 : 0);
                for (int i = 0; i < pw; ++i) t = F.mul(t, P.c[w]);
            }
            g[v] = F.add(g[v], t);
        }
    }
    return g;
}

std::vector<std::vector<uint64_t>> proj_space(uint64_t p, size_t dim) {
    std::vector<std::vector<uint64_t>> pts;
    for (size_t lead = 0; lead <= dim; ++lead) {
        size_t nfree = dim - lead;
        std::vector<uint64_t> t(dim + 1, 0);
        t[lead] = 1;
        std::vector<uint64_t> free(nfree, 0);
        while (true) {
            for (size_t i = 0; i < nfree; ++i) t[lead + 1 + i] = free[i];
            pts.push_back(t);
            // odometer: last coordinate fastest
            size_t i = nfree;
            while (i > 0) {
                if (++free[i - 1] < p) break;
                free[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
    return pts;
}

size_t proj_index(const std::vector<uint64_t>& t, uint64_t p) {
    size_t dim = t.size() - 1;
    size_t lead = 0;
    while (lead <= dim && t[lead] == 0) ++lead;
    size_t offset = 0;
    size_t block = 1;
    for (size_t i = 0; i < dim; ++i) block *= p; // p^dim points with lead 0
    for (size_t j = 0; j < lead; ++j) {
        offset += block;
        block /= p;
    }
    size_t idx = 0;
    for (size_t i = lead + 1; i <= dim; ++i) idx = idx * p + t[i];
    return offset + idx;
}

std::vector<FpPoint> ambient_points(Ambient amb, uint64_t p) {
    std::vector<FpPoint> out;
    if (amb == Ambient::P2) {
        for (auto& t : proj_space(p, 2)) out.push_back({t});
        return out;
    }
    auto line = proj_space(p, 1);
    for (auto& a : line)
        for (auto& b : line) out.push_back({{a[0], a[1], b[0], b[1]}});
    return out;
}

uint64_t count_points(const FpCurve& C) {
    bool all_zero = true;
    for (uint64_t c : C.co)
        if (c % C.p) all_zero = false;
    if (all_zero) throw DegenerateError("curve is identically zero mod p");
    uint64_t n = 0;
    for (auto& P : ambient_points(C.amb, C.p))
        if (eval_curve(C, P) == 0) ++n;
    return n;
}

std::array<uint64_t, 4> form22_gradient(const FpCurve& C, const FpPoint& P) {
    PrimeField F(C.p);
    std::array<uint64_t, 4> g{0, 0, 0, 0};
    uint64_t x[4] = {P.c[0], P.c[1], P.c[2], P.c[3]};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            uint64_t co = C.co[deg22_index(a, b)];
            if (co == 0) continue;
            int e[4] = {a, 2 - a, b, 2 - b};
            for (int v = 0; v < 4; ++v) {
                if (e[v] == 0) continue;
                uint64_t t = F.mul(co, static_cast<uint64_t>(e[v]) % C.p);
                for (int w = 0; w < 4; ++w) {
                    int pw = e[w] - (w == v ? 1 : 0);
                    for (int i = 0; i < pw; ++i) t = F.mul(t, x[w]);
                }
                g[v] = F.add(g[v], t);
            }
        }
    return g;
}

bool singular_at(const FpCurve& C, const FpPoint& P) {
    if (eval_curve(C, P) != 0) return false;
    if (C.amb == Ambient::P2) {
        auto g = cubic_gradient(C, P);
        return g[0] == 0 && g[1] == 0 && g[2] == 0;
    }
    auto g = form22_gradient(C, P);
    return g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0;
}

namespace {

using QElt = QuadField::Elt;

QElt eval_cubic_q(const QuadField& K, const std::vector<uint64_t>& co,
                  const std::array<QElt, 3>& P) {
    QElt acc = K.from_base(0);
    for (size_t m = 0; m < 10; ++m) {
        if (co[m] == 0) continue;
        QElt t = K.from_base(co[m]);
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < kCubicMonomials[m][v]; ++e) t = K.mul(t, P[v]);
        acc = K.add(acc, t);
    }
    return acc;
}

std::array<QElt, 3> grad_cubic_q(const QuadField& K, const std::vector<uint64_t>& co,
                                 const std::array<QElt, 3>& P) {
    std::array<QElt, 3> g = {K.from_base(0), K.from_base(0), K.from_base(0)};
    for (size_t m = 0; m < 10; ++m) {
        if (co[m] == 0) continue;
        for (int v = 0; v < 3; ++v) {
            int e = kCubicMonomials[m][v];
            if (e == 0) continue;
            QElt t = K.from_base(K.base().mul(co[m], static_cast<uint64_t>(e) % K.p()));
            for (int w = 0; w < 3; ++w) {
                int pw = kCubicMonomials[m][w] - (w == v ? 1 : 0);
                for (int i = 0; i < pw; ++i) t = K.mul(t, P[w]);
            }
            g[v] = K.add(g[v], t);
        }
    }
    return g;
}

} // namespace

std::string Fp2Point::str(const QuadField& K) const {
    auto render = [&](const QElt& e) {
        if (e.b == 0) return std::to_string(e.a);
        return std::to_string(e.a) + "+" + std::to_string(e.b) + "w";
    };
    (void)K;
    return render(c[0]) + ":" + render(c[1]) + ":" + render(c[2]);
}

SingularLocus singular_points(const FpCurve& C, int degree_bound) {
    if (degree_bound != 1 && degree_bound != 2)
        throw UsageError("degree bound must be 1 or 2");
    SingularLocus out;
    for (auto& P : ambient_points(C.amb, C.p))
        if (singular_at(C, P)) out.rational.push_back(P);
    if (degree_bound == 1) return out;
    if (C.amb != Ambient::P2)
        throw UsageError("quadratic-extension search is for plane cubics only");

    QuadField K(C.p);
    auto elems = K.all_elements();
    auto check = [&](const std::array<QElt, 3>& P) {
        bool quadratic = P[0].b || P[1].b || P[2].b;
        if (!quadratic) return; // already in the rational list
        if (!K.is_zero(eval_cubic_q(K, C.co, P))) return;
        auto g = grad_cubic_q(K, C.co, P);
        if (K.is_zero(g[0]) && K.is_zero(g[1]) && K.is_zero(g[2]))
            out.quadratic.push_back({P});
    };
    QElt one = K.from_base(1), zero = K.from_base(0);
    for (auto& a : elems)
        for (auto& b : elems) check({one, a, b});
    for (auto& b : elems) check({zero, one, b});
    check({zero, zero, one});
    return out;
}

int64_t weierstrass_trace(uint64_t A, uint64_t B, uint64_t p) {
    PrimeField F(p);
    if (p == 2) throw BadPrime("odd prime required");
    A %= p;
    B %= p;
    uint64_t disc = F.add(F.mul(F.mul(4, A), F.mul(A, A)), F.mul(F.mul(27, B), B));
    if (disc == 0) throw BadReduction("discriminant vanishes mod " + std::to_string(p));
    int64_t s = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t rhs = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(A, x), B));
        s += F.chi(rhs);
    }
    return -s;
}

uint64_t weierstrass_affine_count(uint64_t A, uint64_t B, uint64_t p) {
    PrimeField F(p);
    uint64_t n = 0;
    for (uint64_t x = 0; x < p; ++x)
        for (uint64_t y = 0; y < p; ++y) {
            uint64_t rhs = F.add(F.mul(F.mul(x, x), x), F.add(F.mul(A % p, x), B % p));
            if (F.mul(y, y) == rhs) ++n;
        }
    return n;
}

std::array<uint64_t, 4> restrict_to_chord(const FpCurve& C, const FpPoint& P,
                                          const FpPoint& Q) {
    PrimeField F(C.p);
    std::array<uint64_t, 4> out{0, 0, 0, 0};
    // Expand each monomial's product of binomials (sP_v + tQ_v)^e by
    // convolving one variable at a time; characteristic-independent.
    for (size_t m = 0; m < 10; ++m) {
        if (C.co[m] == 0) continue;
        std::array<uint64_t, 4> conv{C.co[m], 0, 0, 0};
        int deg = 0;
        for (int v = 0; v < 3; ++v) {
            for (int e = 0; e < kCubicMonomials[m][v]; ++e) {
                std::array<uint64_t, 4> next{0, 0, 0, 0};
                for (int j = 0; j <= deg; ++j) {
                    if (conv[j] == 0) continue;
                    next[j] = F.add(next[j], F.mul(conv[j], P.c[v]));
                    next[j + 1] = F.add(next[j + 1], F.mul(conv[j], Q.c[v]));
                }
                conv = next;
                ++deg;
            }
        }
        for (int j = 0; j <= 3; ++j) out[j] = F.add(out[j], conv[j]);
    }
    return out;
}

namespace {

FpPoint combine(const PrimeField& F, uint64_t s, const FpPoint& P, uint64_t t,
                const FpPoint& Q) {
    std::vector<uint64_t> c(3);
    for (int i = 0; i < 3; ++i) c[i] = F.add(F.mul(s, P.c[i]), F.mul(t, Q.c[i]));
    return normalize_point(Ambient::P2, std::move(c), F);
}

} // namespace

FpPoint third_intersection(const FpCurve& C, const FpPoint& P, const FpPoint& Q) {
    if (C.amb != Ambient::P2) throw UsageError("chords are defined for plane cubics");
    PrimeField F(C.p);
    if (eval_curve(C, P) != 0 || eval_curve(C, Q) != 0)
        throw DegeneratePoint("chord endpoints must lie on the curve");
    if (P == Q) {
        auto g = cubic_gradient(C, P);
        if (g[0] == 0 && g[1] == 0 && g[2] == 0)
            throw DegeneratePoint("tangent undefined at a singular point");
        // A second point on the tangent line, taken from the kernel of the
        // gradient covector.
        std::array<std::vector<uint64_t>, 3> cands = {
            std::vector<uint64_t>{F.neg(g[1]), g[0], 0},
            std::vector<uint64_t>{F.neg(g[2]), 0, g[0]},
            std::vector<uint64_t>{0, F.neg(g[2]), g[1]},
        };
        for (auto& cand : cands) {
            if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
            FpPoint Q2 = normalize_point(Ambient::P2, cand, F);
            if (Q2 == P) continue;
            auto r = restrict_to_chord(C, P, Q2);
            // On the tangent the restriction is t^2 (a12 s + a03 t); the
            // residual intersection sits at (s : t) = (-a03 : a12).
            if (r[2] == 0 && r[3] == 0) throw DegenerateLine("line contained in cubic");
            return combine(F, F.neg(r[3]), P, r[2], Q2);
        }
        throw DegeneratePoint("no independent point on tangent line");
    }
    auto r = restrict_to_chord(C, P, Q);
    // Restriction is s t (a21 s + a12 t); residual root (-a12 : a21).
    if (r[1] == 0 && r[2] == 0) throw DegenerateLine("line contained in cubic");
    return combine(F, F.neg(r[2]), P, r[1], Q);
}

FpPoint cubic_add(const CubicWithOrigin& G, const FpPoint& P, const FpPoint& Q) {
    FpPoint R = third_intersection(G.curve, P, Q);
    return third_intersection(G.curve, R, G.origin);
}

FpPoint cubic_neg(const CubicWithOrigin& G, const FpPoint& P) {
    FpPoint oo = third_intersection(G.curve, G.origin, G.origin);
    return third_intersection(G.curve, P, oo);
}

std::optional<unsigned> cubic_order(const CubicWithOrigin& G, const FpPoint& P,
                                    unsigned bound) {
    FpPoint acc = P;
    for (unsigned m = 1; m <= bound; ++m) {
        if (acc == G.origin) return m;
        acc = cubic_add(G, acc, P);
    }
    return std::nullopt;
}

} // namespace mfcy
