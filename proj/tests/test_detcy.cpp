// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>

#include "detcy.hpp"
#include "errors.hpp"
#include "linsys.hpp"

using namespace mfcy;

namespace {

QVec dense10(std::initializer_list<std::pair<size_t, long>> entries) {
    QVec v(10, Rat(0));
    for (const auto& [i, val] : entries) v[i] = Rat(val);
    return v;
}

std::vector<FpPoint> on_curve(const FpCurve& C) {
    std::vector<FpPoint> out;
    for (const auto& P : ambient_points(C.amb, C.p))
        if (eval_curve(C, P) == 0) out.push_back(P);
    return out;
}

const std::vector<FpPoint> kMain5 = {FpPoint{{8, 0, 1}}, FpPoint{{10, 10, 1}},
                                     FpPoint{{9, 8, 1}}, FpPoint{{8, 6, 1}},
                                     FpPoint{{7, 6, 1}}};

const std::vector<FpPoint> kBackup5 = {FpPoint{{10, 8, 1}}, FpPoint{{6, 1, 1}},
                                       FpPoint{{0, 3, 1}}, FpPoint{{9, 8, 1}},
                                       FpPoint{{5, 4, 1}}};

bool in_list(const std::vector<FpPoint>& pts, const FpPoint& P) {
    return std::find(pts.begin(), pts.end(), P) != pts.end();
}

} // namespace

TEST_CASE("basis of cubics through the standard frame") {
    const auto& ab = anticanonical_basis();
    REQUIRE(ab.basis.size() == 6);
    REQUIRE(ab.base_points.size() == 4);
    CHECK(ab.base_points[0] == QVec{1, 0, 0});
    CHECK(ab.base_points[3] == QVec{1, 1, 1});
    // echelon rows: X^2Y, X^2Z, XY^2, XYZ, XZ^2, Y^2Z, each minus YZ^2
    CHECK(ab.basis[0] == dense10({{1, 1}, {8, -1}}));
    CHECK(ab.basis[1] == dense10({{2, 1}, {8, -1}}));
    CHECK(ab.basis[2] == dense10({{3, 1}, {8, -1}}));
    CHECK(ab.basis[3] == dense10({{4, 1}, {8, -1}}));
    CHECK(ab.basis[4] == dense10({{5, 1}, {8, -1}}));
    CHECK(ab.basis[5] == dense10({{7, 1}, {8, -1}}));
    CHECK(span_contains(ab.basis, dense10({{1, 1}, {3, -1}})));
    CHECK(!span_contains(ab.basis, dense10({{0, 1}})));
    for (const QVec& b : ab.basis)
        for (const QVec& pt : ab.base_points) {
            QVec row = monomial_row(Ambient::P2, pt);
            Rat s(0);
            for (size_t k = 0; k < 10; ++k) s += row[k] * b[k];
            CHECK(s == 0);
        }
}

TEST_CASE("rank profile counts independent conditions") {
    CHECK(rank_profile({FpPoint{{8, 0, 1}}}, 11) == 1);
    CHECK(rank_profile({kMain5[0], kMain5[1]}, 11) == 2);
    CHECK(rank_profile(kMain5, 11) == 5);

    FpCurve C = fibre_cubic(kMain5, 11);
    const std::vector<FpPoint> frame = {FpPoint{{1, 0, 0}}, FpPoint{{0, 1, 0}},
                                        FpPoint{{0, 0, 1}}, FpPoint{{1, 1, 1}}};
    std::optional<FpPoint> on_pt, off_pt;
    for (const auto& P : ambient_points(Ambient::P2, 11)) {
        if (in_list(frame, P)) continue;
        uint64_t v = eval_curve(C, P);
        if (v == 0 && !in_list(kMain5, P) && !on_pt) on_pt = P;
        if (v != 0 && !off_pt) off_pt = P;
    }
    REQUIRE(on_pt.has_value());
    REQUIRE(off_pt.has_value());
    auto six_on = kMain5;
    six_on.push_back(*on_pt);
    auto six_off = kMain5;
    six_off.push_back(*off_pt);
    CHECK(rank_profile(six_on, 11) == 5);
    CHECK(rank_profile(six_off, 11) == 6);

    CHECK_THROWS_AS(rank_profile({}, 11), UsageError);
    std::vector<FpPoint> seven(7, FpPoint{{1, 2, 3}});
    CHECK_THROWS_AS(rank_profile(seven, 11), UsageError);
    CHECK_THROWS_AS(rank_profile({FpPoint{{1, 1, 1}}}, 11), DegeneratePoint);
    CHECK_THROWS_AS(rank_profile({FpPoint{{3, 3, 3}}}, 11), DegeneratePoint);
    CHECK_THROWS_AS(rank_profile({FpPoint{{0, 5, 0}}}, 11), DegeneratePoint);
}

TEST_CASE("determinant vanishing is fibre membership") {
    FpCurve C = fibre_cubic(kMain5, 11);
    size_t checked = 0;
    for (const auto& Q : ambient_points(Ambient::P2, 11)) {
        if (Q.c == std::vector<uint64_t>{1, 0, 0} || Q.c == std::vector<uint64_t>{0, 1, 0} ||
            Q.c == std::vector<uint64_t>{0, 0, 1} || Q.c == std::vector<uint64_t>{1, 1, 1})
            continue;
        auto six = kMain5;
        six.push_back(Q);
        CHECK(v6_member(six, 11) == (eval_curve(C, Q) == 0));
        ++checked;
    }
    CHECK(checked == 129);

    // swapping two points flips the sign
    auto six = kMain5;
    six.push_back(FpPoint{{1, 2, 3}});
    uint64_t d = det6(six, 11);
    std::swap(six[0], six[1]);
    CHECK(det6(six, 11) == (11 - d) % 11);

    CHECK_THROWS_AS(det6(kMain5, 11), UsageError);
}

TEST_CASE("exact determinant and rank agree with the reductions") {
    QMat pts5 = {{1, 2, 3}, {1, 4, 9}, {2, 3, 5}, {1, 5, 25}, {3, 1, 4}};
    CHECK(rank_profile_exact(pts5) == 5);
    CHECK(rank_profile_exact({{1, 2, 3}}) == 1);

    QMat pts6 = pts5;
    pts6.push_back({1, 7, 2});
    Rat d = det6_exact(pts6);
    CHECK(d == Rat(-109876550, 27));
    std::swap(pts6[2], pts6[3]);
    CHECK(det6_exact(pts6) == -d);

    // the mod 13 determinant of the reduced tuple matches the reduced value
    std::vector<FpPoint> mod13 = {FpPoint{{1, 2, 3}},  FpPoint{{1, 4, 9}}, FpPoint{{2, 3, 5}},
                                  FpPoint{{1, 5, 12}}, FpPoint{{3, 1, 4}}, FpPoint{{1, 7, 2}}};
    auto dm = reduce_vec_mod_p(QVec{d}, 13);
    REQUIRE(dm.has_value());
    CHECK(det6(mod13, 13) == (*dm)[0]);

    CHECK_THROWS_AS(det6_exact(pts5), UsageError);
    CHECK_THROWS_AS(rank_profile_exact({}), UsageError);
    CHECK_THROWS_AS(rank_profile_exact({{0, 0, 0}}), UsageError);
    CHECK_THROWS_AS(rank_profile_exact({{2, 2, 2}}), DegeneratePoint);
}

TEST_CASE("fibre cubic through five general points") {
    FpCurve C = fibre_cubic(kMain5, 11);
    CHECK(C.co == std::vector<uint64_t>{0, 9, 3, 6, 7, 9, 0, 1, 9, 0});
    CHECK(count_points(C) == 17);
    for (const auto& P : kMain5) CHECK(eval_curve(C, P) == 0);
    // base points lie on every fibre
    for (const auto& bp : {FpPoint{{1, 0, 0}}, FpPoint{{0, 1, 0}}, FpPoint{{0, 0, 1}},
                           FpPoint{{1, 1, 1}}})
        CHECK(eval_curve(C, bp) == 0);

    FpCurve B = fibre_cubic(kBackup5, 11);
    CHECK(B.co == std::vector<uint64_t>{0, 5, 2, 7, 6, 4, 0, 1, 8, 0});
    CHECK(count_points(B) == 18);

    auto degen = kMain5;
    degen[1] = degen[0];
    CHECK_THROWS_AS(fibre_cubic(degen, 11), NotGeneral);
    CHECK_THROWS_AS(fibre_cubic({kMain5[0], kMain5[1]}, 11), UsageError);
}

TEST_CASE("negation involution on a smooth fibre") {
    FpCurve C = fibre_cubic(kMain5, 11);
    auto pts = on_curve(C);
    REQUIRE(pts.size() == 17);
    size_t fixed = 0;
    for (const auto& Q : pts) {
        FpPoint R = tau_fibre(kMain5, Q, 11);
        CHECK(eval_curve(C, R) == 0);
        CHECK(tau_fibre(kMain5, R, 11) == Q);
        if (R == Q) ++fixed;
    }
    CHECK(fixed == 1);
    // the unique fixed point is the origin, the fifth of the five
    CHECK(tau_fibre(kMain5, FpPoint{{7, 6, 1}}, 11) == FpPoint{{1, 4, 8}});

    FpCurve B = fibre_cubic(kBackup5, 11);
    size_t fixed_b = 0;
    for (const auto& Q : on_curve(B))
        if (tau_fibre(kBackup5, Q, 11) == Q) ++fixed_b;
    CHECK(fixed_b == 2);

    CHECK_THROWS_AS(tau_fibre(kMain5, FpPoint{{1, 2, 3}}, 11), UsageError);
}

TEST_CASE("singular fibres are refused") {
    std::vector<FpPoint> sing5 = {FpPoint{{1, 2, 3}}, FpPoint{{2, 5, 1}}, FpPoint{{4, 1, 7}},
                                  FpPoint{{3, 8, 2}}, FpPoint{{5, 3, 9}}};
    FpCurve S = fibre_cubic(sing5, 11);
    CHECK(S.co == std::vector<uint64_t>{0, 9, 8, 7, 10, 2, 0, 1, 7, 0});
    CHECK(count_points(S) == 24); // 2p+2, a conjugate pair of components
    auto locus = singular_points(S, 2);
    CHECK(locus.rational.empty());
    CHECK(!locus.quadratic.empty());
    CHECK_THROWS_AS(tau_fibre(sing5, FpPoint{{1, 2, 3}}, 11), SingularFibre);
}
