// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "linsys.hpp"

using namespace mfcy;

namespace {

Condition pass(QVec pt) { return {Condition::Kind::PassThrough, std::move(pt), {}}; }
Condition tangent(QVec l, QVec pt) {
    return {Condition::Kind::TangentAt, std::move(pt), {-1, std::move(l)}};
}
Condition tangent_ruling(int factor, QVec fix, QVec pt) {
    return {Condition::Kind::TangentAt, std::move(pt), {factor, std::move(fix)}};
}
Condition inflect(QVec l, QVec pt) {
    return {Condition::Kind::InflectionAt, std::move(pt), {-1, std::move(l)}};
}

QVec cubic_vec(std::initializer_list<std::pair<int, int>> terms) {
    QVec v(10, Rat(0));
    for (auto [i, c] : terms) v[i] = c;
    return v;
}

// every basis vector annihilates every condition row
void check_residuals(const LinearSystem& s) {
    for (auto& c : s.conditions)
        for (auto& row : condition_rows(s.ambient, c))
            for (auto& b : s.basis) {
                Rat dot = 0;
                for (size_t i = 0; i < row.size(); ++i) dot += row[i] * b[i];
                CHECK(dot == 0);
            }
}

// monomial order: X^3 X^2Y X^2Z XY^2 XYZ XZ^2 Y^3 Y^2Z YZ^2 Z^3
// named generators used across the cubic families
const QVec kXXY_XYZ = cubic_vec({{1, 1}, {4, -1}});  // X^2 Y - XYZ
const QVec kXXZ_XYZ = cubic_vec({{2, 1}, {4, -1}});  // X^2 Z - XYZ
const QVec kYYZ_XYZ = cubic_vec({{7, 1}, {4, -1}});  // Y^2 Z - XYZ
const QVec kYZZ_XYZ = cubic_vec({{8, 1}, {4, -1}});  // Y Z^2 - XYZ
const QVec kXZZ_XYZ = cubic_vec({{5, 1}, {4, -1}});  // X Z^2 - XYZ

// three-tangency net defining the order-3 torsion family
std::vector<Condition> net_conditions() {
    return {tangent({0, 0, 1}, {0, 1, 0}), tangent({1, 0, 0}, {0, 0, 1}),
            tangent({0, 1, 0}, {1, 0, 0}), pass({1, 1, 1})};
}

// four-point web defining the order-2 torsion family
std::vector<Condition> web_conditions() {
    return {pass({0, 0, 1}), pass({0, 1, 0}), pass({1, 0, 0}), pass({1, 1, 1}),
            tangent({0, 1, 0}, {0, 0, 1}), tangent({0, 0, 1}, {0, 1, 0})};
}

// inflectional pencil defining the order-4 torsion family
std::vector<Condition> pencil4_conditions() {
    return {pass({0, 1, 0}), pass({0, 0, 1}), pass({1, 1, 1}), pass({1, 0, 1}),
            inflect({0, 0, 1}, {0, 1, 0}), tangent({1, 0, 0}, {0, 0, 1}),
            tangent({0, 1, 0}, {1, 0, 1})};
}

// pencil defining the order-5 torsion family
std::vector<Condition> pencil5_conditions() {
    return {pass({0, 1, 0}), pass({0, 1, -1}), pass({1, 0, -1}), pass({0, 0, 1}),
            inflect({0, 0, 1}, {0, 1, 0}), tangent({1, 1, 1}, {0, 1, -1}),
            tangent({0, 1, 0}, {1, 0, -1})};
}

} // namespace

TEST_CASE("monomial rows") {
    QVec r = monomial_row(Ambient::P2, {1, 2, 3});
    CHECK(r.size() == 10);
    CHECK(r[0] == 1);   // X^3
    CHECK(r[1] == 2);   // X^2 Y
    CHECK(r[4] == 6);   // XYZ
    CHECK(r[9] == 27);  // Z^3
    QVec s = monomial_row(Ambient::P1xP1, {1, 2, 3, 1});
    CHECK(s.size() == 9);
    CHECK(s[deg22_index(0, 0)] == 4);   // S^2 T^2
    CHECK(s[deg22_index(2, 2)] == 9);   // U^2 V^2
    CHECK(s[deg22_index(1, 2)] == 18);  // U S V^2
}

TEST_CASE("three-tangency net") {
    auto s = solve_conditions(Ambient::P2, net_conditions());
    CHECK(s.dim() == 3);
    CHECK(same_subspace(s, {kXXY_XYZ, kYYZ_XYZ, kXZZ_XYZ}));
    CHECK(!same_subspace(s, {cubic_vec({{0, 1}}), cubic_vec({{6, 1}}), cubic_vec({{9, 1}})}));
    CHECK(same_subspace(s, s.basis));
    check_residuals(s);
}

TEST_CASE("four-point web") {
    auto s = solve_conditions(Ambient::P2, web_conditions());
    CHECK(s.dim() == 4);
    CHECK(same_subspace(s, {kXXY_XYZ, kXXZ_XYZ, kYYZ_XYZ, kYZZ_XYZ}));
    check_residuals(s);
}

TEST_CASE("inflectional pencil has the corrected span") {
    auto s = solve_conditions(Ambient::P2, pencil4_conditions());
    CHECK(s.dim() == 2);
    // X(X-Z)^2 and YZ(X-Y)
    QVec g1 = cubic_vec({{0, 1}, {2, -2}, {5, 1}});
    QVec g2 = cubic_vec({{4, 1}, {7, -1}});
    CHECK(same_subspace(s, {g1, g2}));
    // YZ(Y-Z) does not satisfy the tangency at (0:0:1)
    QVec imposter = cubic_vec({{7, 1}, {8, -1}});
    CHECK(!span_contains(s.basis, imposter));
    check_residuals(s);
}

TEST_CASE("five-torsion pencil") {
    auto s = solve_conditions(Ambient::P2, pencil5_conditions());
    CHECK(s.dim() == 2);
    // YZ(X+Y+Z) and YZ(Y+Z) - X(X+Z)^2
    QVec g1 = cubic_vec({{4, 1}, {7, 1}, {8, 1}});
    QVec g2 = cubic_vec({{7, 1}, {8, 1}, {0, -1}, {2, -2}, {5, -1}});
    CHECK(same_subspace(s, {g1, g2}));
    check_residuals(s);
}

TEST_CASE("a tangency point off its line is rejected") {
    // swapping the two tangency points of the five-torsion pencil puts
    // (0:1:-1) on Y = 0, which is false
    CHECK_THROWS_AS(solve_conditions(
                        Ambient::P2,
                        {pass({0, 1, 0}), inflect({0, 0, 1}, {0, 1, 0}),
                         tangent({1, 1, 1}, {1, 0, -1}), tangent({0, 1, 0}, {0, 1, -1})}),
                    UsageError);
}

TEST_CASE("slicing") {
    auto web = solve_conditions(Ambient::P2, web_conditions());
    auto s1 = slice(web, {pass({1, 2, 1})});
    CHECK(s1.dim() == 3);
    auto s2 = slice(web, {pass({1, 2, 1}), pass({2, 1, 3})});
    CHECK(s2.dim() == 2);
    // redundant condition leaves the dimension unchanged
    auto s3 = slice(web, {pass({1, 1, 1})});
    CHECK(s3.dim() == 4);
    auto net = solve_conditions(Ambient::P2, net_conditions());
    CHECK(slice(net, {pass({1, 2, 4})}).dim() == 2);
    check_residuals(s2);
}

TEST_CASE("conditions with only the zero solution") {
    auto conds = pencil5_conditions();
    conds.push_back(pass({1, 1, 1}));
    conds.push_back(pass({1, 2, 3}));
    CHECK_THROWS_AS(solve_conditions(Ambient::P2, conds), InconsistentConditions);
}

TEST_CASE("reduction mod p") {
    auto s = solve_conditions(Ambient::P2, pencil5_conditions());
    auto curves = reduce_mod_p(s, 7);
    REQUIRE(curves.size() == 2);
    for (auto& C : curves) {
        CHECK(C.p == 7);
        CHECK(C.co.size() == 10);
    }
    s.bad_primes = {2, 5};
    CHECK_THROWS_AS(reduce_mod_p(s, 2), BadPrime);
    CHECK_THROWS_AS(reduce_mod_p(s, 5), BadPrime);
    CHECK_NOTHROW(reduce_mod_p(s, 101));

    // denominator hit
    LinearSystem frac{Ambient::P2, {QVec{Rat(1, 3), 1, 0, 0, 0, 0, 0, 0, 0, 0}}, {}, {}};
    CHECK_THROWS_AS(reduce_mod_p(frac, 3), BadPrime);
    CHECK_NOTHROW(reduce_mod_p(frac, 7));

    // rank drop: rows independent over Q, dependent mod 7
    QVec e0(10, Rat(0)), e1(10, Rat(0));
    e0[0] = 1;
    e1[0] = 1;
    e1[1] = 7;
    LinearSystem dep{Ambient::P2, {e0, e1}, {}, {}};
    CHECK_THROWS_AS(reduce_mod_p(dep, 7), BadPrime);
    CHECK_NOTHROW(reduce_mod_p(dep, 11));
}

TEST_CASE("dimension preserved across many primes") {
    auto net = solve_conditions(Ambient::P2, net_conditions());
    auto web = solve_conditions(Ambient::P2, web_conditions());
    auto p4 = solve_conditions(Ambient::P2, pencil4_conditions());
    auto p5 = solve_conditions(Ambient::P2, pencil5_conditions());
    for (uint64_t p : primes_below(1000)) {
        CHECK(reduce_mod_p(net, p).size() == 3);
        CHECK(reduce_mod_p(web, p).size() == 4);
        CHECK(reduce_mod_p(p4, p).size() == 2);
        CHECK(reduce_mod_p(p5, p).size() == 2);
    }
}

TEST_CASE("quadric systems: double-tangency net") {
    // tangent {0} x P^1 at (0,0); tangent P^1 x {1} at (1,1);
    // through (1,0) and (inf,inf)
    auto s = solve_conditions(
        Ambient::P1xP1,
        {tangent_ruling(0, {0, 1}, {0, 1, 0, 1}), tangent_ruling(1, {1, 1}, {1, 1, 1, 1}),
         pass({1, 1, 0, 1}), pass({1, 0, 1, 0})});
    CHECK(s.dim() == 3);
    QMat expected = {{0, 0, 1, 0, 0, -2, 0, 1, 0},
                     {0, 0, 0, 1, 0, -1, -1, 1, 0},
                     {0, 0, 0, 0, 1, -1, 0, 0, 0}};
    CHECK(s.basis == expected);
    check_residuals(s);
}

TEST_CASE("quadric systems: five-torsion alternate") {
    auto s = solve_conditions(
        Ambient::P1xP1,
        {tangent_ruling(1, {0, 1}, {1, 1, 0, 1}), tangent_ruling(0, {0, 1}, {0, 1, 1, 1}),
         pass({1, 0, 1, 1}), pass({1, 0, 1, 0}), pass({1, 1, 1, 0})});
    CHECK(s.dim() == 2);
    QMat expected = {{1, -2, 1, -2, 0, -1, 1, -1, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0}};
    CHECK(s.basis == expected);
    check_residuals(s);
}

TEST_CASE("quadric systems: partial webs behind predicates") {
    // order-4 alternate, linear part only
    auto s4 = solve_conditions(Ambient::P1xP1,
                               {tangent_ruling(0, {0, 1}, {0, 1, 0, 1}),
                                tangent_ruling(0, {1, 1}, {1, 1, 1, 1}), pass({1, 0, 1, 0})});
    CHECK(s4.dim() == 4);
    QMat expected4 = {{0, 0, 1, 0, 0, 0, 1, -2, 0},
                      {0, 0, 0, 1, 0, 0, -1, 0, 0},
                      {0, 0, 0, 0, 1, 0, 0, -1, 0},
                      {0, 0, 0, 0, 0, 1, 1, -2, 0}};
    CHECK(s4.basis == expected4);
    check_residuals(s4);

    // order-2 alternate, linear part only
    auto s2 = solve_conditions(Ambient::P1xP1,
                               {pass({0, 1, 0, 1}), pass({1, 1, 1, 1}), pass({1, 0, 1, 0}),
                                tangent_ruling(0, {0, 1}, {0, 1, 0, 1})});
    CHECK(s2.dim() == 5);
    QMat expected2 = {{0, 0, 1, 0, 0, 0, 0, -1, 0},
                      {0, 0, 0, 1, 0, 0, 0, -1, 0},
                      {0, 0, 0, 0, 1, 0, 0, -1, 0},
                      {0, 0, 0, 0, 0, 1, 0, -1, 0},
                      {0, 0, 0, 0, 0, 0, 1, -1, 0}};
    CHECK(s2.basis == expected2);
    check_residuals(s2);
}

TEST_CASE("ruling tangency points must sit on their line") {
    CHECK_THROWS_AS(
        solve_conditions(Ambient::P1xP1, {tangent_ruling(0, {0, 1}, {1, 1, 0, 1})}),
        UsageError);
    CHECK_THROWS_AS(
        solve_conditions(Ambient::P1xP1,
                         {{Condition::Kind::InflectionAt, {0, 1, 0, 1}, {0, {0, 1}}}}),
        UsageError);
}

TEST_CASE("condition rendering") {
    CHECK(pass({1, 2, 3}).str() == "pass 1:2:3");
    CHECK(tangent({0, 0, 1}, {0, 1, 0}).str() == "tangent 0:0:1 at 0:1:0");
    CHECK(inflect({0, 0, 1}, {0, 1, 0}).str() == "inflect 0:0:1 at 0:1:0");
    CHECK(tangent_ruling(0, {0, 1}, {0, 1, 0, 1}).str() == "tangent uline 0:1 at 0:1:0:1");
}
