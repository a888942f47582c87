// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratmat.hpp"

using namespace mfcy;

TEST_CASE("row reduction and rank") {
    QMat m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    QMat r = m;
    auto pivots = rref(r);
    CHECK(pivots == std::vector<size_t>{0, 1});
    CHECK(r.size() == 2);
    CHECK(r[0][0] == 1);
    CHECK(r[1][1] == 1);
    CHECK(r[0][1] == 0);
}

TEST_CASE("nullspace is canonical") {
    // x + y + z = 0
    QMat m = {{1, 1, 1}};
    auto ns = nullspace(m, 3);
    REQUIRE(ns.size() == 2);
    // echelon over the free part: leading ones in distinct columns
    CHECK(ns[0][0] == 1);
    CHECK(ns[0][1] == 0);
    CHECK(ns[0][2] == -1);
    CHECK(ns[1][0] == 0);
    CHECK(ns[1][1] == 1);
    CHECK(ns[1][2] == -1);

    // permuting the input rows leaves the answer unchanged
    QMat m2 = {{2, 2, 2}, {1, 1, 1}};
    CHECK(nullspace(m2, 3) == ns);

    QMat full = {{1, 0}, {0, 1}};
    CHECK(nullspace(full, 2).empty());

    auto everything = nullspace({}, 2);
    REQUIRE(everything.size() == 2);
    CHECK(everything[0] == QVec{1, 0});
    CHECK(everything[1] == QVec{0, 1});
}

TEST_CASE("span comparison") {
    QMat a = {{1, 0, -1}, {0, 1, -1}};
    QMat b = {{1, 1, -2}, {1, -1, 0}};
    QMat c = {{1, 0, -1}};
    CHECK(spans_equal(a, b));
    CHECK(!spans_equal(a, c));
    CHECK(span_contains(a, QVec{2, 3, -5}));
    CHECK(!span_contains(c, QVec{0, 1, -1}));
}

TEST_CASE("dense solve") {
    QMat a = {{2, 1}, {1, 3}};
    auto x = solve_linear(a, {Rat(5), Rat(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);

    QMat sing = {{1, 1}, {2, 2}};
    CHECK(!solve_linear(sing, {Rat(1), Rat(3)}).has_value());
    // underdetermined: free variables pinned at zero
    auto y = solve_linear({{1, 1}}, {Rat(4)});
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 4);
    CHECK((*y)[1] == 0);
}

TEST_CASE("reduction to a prime field") {
    QVec v = {Rat(1, 2), Rat(-1), Rat(3)};
    auto r = reduce_vec_mod_p(v, 7);
    REQUIRE(r.has_value());
    CHECK((*r)[0] == 4); // 1/2 = 4 mod 7
    CHECK((*r)[1] == 6);
    CHECK((*r)[2] == 3);
    CHECK(!reduce_vec_mod_p({Rat(1, 7)}, 7).has_value());
}
