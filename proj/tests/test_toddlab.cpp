// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "toddlab.hpp"

using namespace mfcy;

TEST_CASE("generating series expansion") {
    RationalSeries td = td_series(9);
    REQUIRE(td.prec() == 9);
    CHECK(td.coeffs[0] == 1);
    CHECK(td.coeffs[1] == Rat(1, 2));
    CHECK(td.coeffs[2] == Rat(1, 12));
    CHECK(td.coeffs[3] == 0);
    CHECK(td.coeffs[4] == Rat(-1, 720));
    CHECK(td.coeffs[5] == 0);
    CHECK(td.coeffs[6] == Rat(1, 30240));
    CHECK(td.coeffs[7] == 0);
    CHECK(td.coeffs[8] == Rat(-1, 1209600));
    CHECK(td_series(1) == RationalSeries{{Rat(1)}});
    CHECK_THROWS_AS(td_series(0), UsageError);
}

TEST_CASE("series calculus round trips") {
    RationalSeries td = td_series(12);
    CHECK(series_exp(series_log(td)) == td);

    RationalSeries a{{Rat(0), Rat(1, 2), Rat(-1, 3), Rat(1, 7), Rat(0), Rat(2, 5), Rat(-3)}};
    CHECK(series_log(series_exp(a)) == a);

    RationalSeries one{std::vector<Rat>(12, Rat(0))};
    one.coeffs[0] = 1;
    CHECK(series_mul(td, series_inv(td)) == one);

    RationalSeries two{{Rat(2), Rat(1)}};
    RationalSeries noconst{{Rat(1), Rat(1)}};
    RationalSeries zero{{Rat(0), Rat(1)}};
    CHECK_THROWS_AS(series_log(two), UsageError);
    CHECK_THROWS_AS(series_exp(noconst), UsageError);
    CHECK_THROWS_AS(series_inv(zero), UsageError);
}

TEST_CASE("log parity kills the odd coefficients") {
    RationalSeries lt = series_log(td_series(20));
    CHECK(lt.coeffs[1] == Rat(1, 2));
    CHECK(lt.coeffs[2] == Rat(-1, 24));
    CHECK(lt.coeffs[4] == Rat(1, 2880));
    CHECK(lt.coeffs[6] == Rat(-1, 181440));
    for (size_t k = 3; k <= 19; k += 2) CHECK(lt.coeffs[k] == 0);
}

TEST_CASE("power sums of the formal roots") {
    CHECK(power_sum(1) == Rat(1, 2));
    CHECK(power_sum(2) == Rat(1, 12));
    CHECK(power_sum(3) == 0);
    CHECK(power_sum(4) == Rat(-1, 720));
    CHECK(power_sum(6) == Rat(1, 30240));
    CHECK(power_sum(8) == Rat(-1, 1209600));
    CHECK(power_sum(10) == Rat(1, 47900160));
    CHECK(power_sum(12) == Rat(-691, 1307674368000));
    for (unsigned m = 3; m <= 19; m += 2) CHECK(power_sum(m) == 0);
    CHECK_THROWS_AS(power_sum(0), UsageError);
}

TEST_CASE("Todd polynomials in Chern classes") {
    ChernPolynomial t1 = todd_polynomial(1);
    CHECK(t1.terms == decltype(t1.terms){{{1}, Rat(1, 2)}});
    CHECK(t1.str() == "1/2*c1");

    ChernPolynomial t2 = todd_polynomial(2);
    CHECK(t2.terms == decltype(t2.terms){{{2, 0}, Rat(1, 12)}, {{0, 1}, Rat(1, 12)}});
    CHECK(t2.str() == "1/12*c1^2 + 1/12*c2");

    ChernPolynomial t3 = todd_polynomial(3);
    CHECK(t3.terms == decltype(t3.terms){{{1, 1, 0}, Rat(1, 24)}});
    CHECK(t3.str() == "1/24*c1*c2");
    CHECK(t3.coefficient({0, 0, 1}) == 0);

    CHECK(todd_polynomial(4).str() ==
          "-1/720*c1^4 + 1/180*c1^2*c2 + 1/720*c1*c3 + 1/240*c2^2 - 1/720*c4");

    CHECK_THROWS_AS(todd_polynomial(0), UsageError);
    CHECK_THROWS_AS(todd_polynomial(9), UsageError);
    CHECK(todd_polynomial(9, 12).coefficient({0, 0, 0, 0, 0, 0, 0, 0, 1}) == 0);
}

TEST_CASE("root expansion agrees with the Newton route") {
    for (unsigned m = 1; m <= 6; ++m) CHECK(todd_polynomial_roots(m) == todd_polynomial(m));
    CHECK_THROWS_AS(todd_polynomial_roots(0), UsageError);
    CHECK_THROWS_AS(todd_polynomial_roots(9), UsageError);
}

TEST_CASE("top Chern coefficient equals the power sum") {
    for (unsigned m = 1; m <= 12; ++m) {
        CHECK(top_chern_coefficient(m) == power_sum(m));
        std::vector<unsigned> top(m, 0);
        top[m - 1] = 1;
        CHECK(todd_polynomial(m, 12).coefficient(top) == power_sum(m));
    }
    CHECK(top_chern_coefficient(1) == Rat(1, 2));
    CHECK(top_chern_coefficient(2) == Rat(1, 12));
    for (unsigned m = 3; m <= 19; m += 2) CHECK(top_chern_coefficient(m) == 0);
}

TEST_CASE("projective space has genus one") {
    for (unsigned m = 1; m <= 8; ++m) CHECK(projective_genus(m) == 1);
}

TEST_CASE("evaluation and lookup guards") {
    ChernPolynomial t2 = todd_polynomial(2);
    CHECK(t2.evaluate({Rat(3), Rat(-2)}) == Rat(7, 12));
    CHECK_THROWS_AS(t2.evaluate({Rat(3)}), UsageError);
    CHECK_THROWS_AS(t2.coefficient({1}), UsageError);
    CHECK(ChernPolynomial{}.str() == "0");
}
