// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "detcy.hpp"

#include "errors.hpp"
#include "fpmat.hpp"
#include "linsys.hpp"

namespace mfcy {

namespace {

QMat frame_points() {
    return {{Rat(1), Rat(0), Rat(0)},
            {Rat(0), Rat(1), Rat(0)},
            {Rat(0), Rat(0), Rat(1)},
            {Rat(1), Rat(1), Rat(1)}};
}

AnticanonicalBasis build_basis() {
    std::vector<Condition> conds;
    for (const QVec& pt : frame_points())
        conds.push_back({Condition::Kind::PassThrough, pt, {}});
    LinearSystem sys = solve_conditions(Ambient::P2, conds);
    return {frame_points(), sys.basis};
}

// Per-prime evaluation frame: reduced basis cubics and base points.
struct Frame {
    PrimeField F;
    std::vector<FpCurve> basis;
    std::vector<FpPoint> base;
};

Frame make_frame(uint64_t p) {
    Frame fr{PrimeField(p), {}, {}};
    for (const QVec& b : anticanonical_basis().basis) {
        auto co = reduce_vec_mod_p(b, p);
        if (!co) throw BadPrime("basis does not reduce mod " + std::to_string(p));
        fr.basis.push_back(FpCurve{Ambient::P2, p, *co});
    }
    for (const QVec& bp : anticanonical_basis().base_points) {
        auto c = reduce_vec_mod_p(bp, p);
        fr.base.push_back(normalize_point(Ambient::P2, *c, fr.F));
    }
    return fr;
}

FpPoint checked_point(const Frame& fr, const FpPoint& P) {
    FpPoint N = normalize_point(Ambient::P2, P.c, fr.F);
    for (const FpPoint& b : fr.base)
        if (N == b) throw DegeneratePoint("section point coincides with the base point " + b.str());
    return N;
}

// rows = basis index, cols = points
std::vector<std::vector<uint64_t>> section_rows(const Frame& fr, const std::vector<FpPoint>& pts) {
    std::vector<std::vector<uint64_t>> rows(6, std::vector<uint64_t>(pts.size()));
    for (size_t j = 0; j < pts.size(); ++j) {
        FpPoint N = checked_point(fr, pts[j]);
        for (size_t i = 0; i < 6; ++i) rows[i][j] = eval_curve(fr.basis[i], N);
    }
    return rows;
}

Rat eval_cubic_exact(const QVec& co, const QVec& pt) {
    Rat s(0);
    for (size_t k = 0; k < 10; ++k) {
        if (co[k] == 0) continue;
        Rat term = co[k];
        for (int e = 0; e < kCubicMonomials[k][0]; ++e) term *= pt[0];
        for (int e = 0; e < kCubicMonomials[k][1]; ++e) term *= pt[1];
        for (int e = 0; e < kCubicMonomials[k][2]; ++e) term *= pt[2];
        s += term;
    }
    return s;
}

QVec normalized_exact(const QVec& pt) {
    if (pt.size() != 3) throw UsageError("expected three coordinates");
    size_t lead = 0;
    while (lead < 3 && pt[lead] == 0) ++lead;
    if (lead == 3) throw UsageError("zero vector is not a projective point");
    QVec out(3);
    for (size_t i = 0; i < 3; ++i) out[i] = pt[i] / pt[lead];
    return out;
}

QVec checked_exact(const QVec& pt) {
    QVec N = normalized_exact(pt);
    for (const QVec& b : frame_points())
        if (N == b) throw DegeneratePoint("section point coincides with a base point");
    return N;
}

} // namespace

const AnticanonicalBasis& anticanonical_basis() {
    static const AnticanonicalBasis ab = build_basis();
    return ab;
}

size_t rank_profile(const std::vector<FpPoint>& pts, uint64_t p) {
    if (pts.empty() || pts.size() > 6) throw UsageError("expected between 1 and 6 points");
    Frame fr = make_frame(p);
    return fp_rank(section_rows(fr, pts), pts.size(), fr.F);
}

size_t rank_profile_exact(const QMat& pts) {
    if (pts.empty() || pts.size() > 6) throw UsageError("expected between 1 and 6 points");
    const QMat& basis = anticanonical_basis().basis;
    QMat rows(6, QVec(pts.size()));
    for (size_t j = 0; j < pts.size(); ++j) {
        QVec N = checked_exact(pts[j]);
        for (size_t i = 0; i < 6; ++i) rows[i][j] = eval_cubic_exact(basis[i], N);
    }
    return rank(rows);
}

uint64_t det6(const std::vector<FpPoint>& pts, uint64_t p) {
    if (pts.size() != 6) throw UsageError("determinant needs exactly 6 points");
    Frame fr = make_frame(p);
    return fp_det(section_rows(fr, pts), fr.F);
}

Rat det6_exact(const QMat& pts) {
    if (pts.size() != 6) throw UsageError("determinant needs exactly 6 points");
    const QMat& basis = anticanonical_basis().basis;
    QMat m(6, QVec(6));
    for (size_t j = 0; j < 6; ++j) {
        QVec N = checked_exact(pts[j]);
        for (size_t i = 0; i < 6; ++i) m[i][j] = eval_cubic_exact(basis[i], N);
    }
    Rat det(1);
    for (size_t col = 0; col < 6; ++col) {
        size_t sel = col;
        while (sel < 6 && m[sel][col] == 0) ++sel;
        if (sel == 6) return Rat(0);
        if (sel != col) {
            std::swap(m[col], m[sel]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < 6; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t j = col; j < 6; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

bool v6_member(const std::vector<FpPoint>& pts, uint64_t p) { return det6(pts, p) == 0; }

FpCurve fibre_cubic(const std::vector<FpPoint>& fixed5, uint64_t p) {
    if (fixed5.size() != 5) throw UsageError("a fibre is cut out by exactly 5 points");
    Frame fr = make_frame(p);
    auto cols = section_rows(fr, fixed5);
    // transpose: one row per point, the kernel is the cubic's coefficient
    // vector in the basis
    std::vector<std::vector<uint64_t>> rows(5, std::vector<uint64_t>(6));
    for (size_t j = 0; j < 5; ++j)
        for (size_t i = 0; i < 6; ++i) rows[j][i] = cols[i][j];
    auto ns = fp_nullspace(rows, 6, fr.F);
    if (ns.size() != 1) throw NotGeneral("the 5 points do not impose independent conditions");
    std::vector<uint64_t> co(10, 0);
    for (size_t i = 0; i < 6; ++i) {
        if (ns[0][i] == 0) continue;
        for (size_t k = 0; k < 10; ++k)
            co[k] = fr.F.add(co[k], fr.F.mul(ns[0][i], fr.basis[i].co[k]));
    }
    return FpCurve{Ambient::P2, p, co};
}

FpPoint tau_fibre(const std::vector<FpPoint>& fixed5, const FpPoint& Q, uint64_t p) {
    FpCurve C = fibre_cubic(fixed5, p);
    auto sl = singular_points(C, 2);
    if (!sl.rational.empty() || !sl.quadratic.empty())
        throw SingularFibre("fibre cubic is singular");
    PrimeField F(p);
    FpPoint Qn = normalize_point(Ambient::P2, Q.c, F);
    if (eval_curve(C, Qn) != 0) throw UsageError("query point is not on the fibre");
    FpPoint o = normalize_point(Ambient::P2, fixed5[4].c, F);
    return cubic_neg({C, o}, Qn);
}

} // namespace mfcy
