// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "fitmodels.hpp"

#include "errors.hpp"

namespace mfcy {

const std::vector<PinnedModel>& pinned_models() {
    static const std::vector<PinnedModel> models = {
        {"level1_weierstrass",
         10,
         {"ap", "p*ap", "1", "p", "p^2", "p^3", "p^4", "p^5", "p^6", "p^7"},
         {1, -1, 1, 8, 26, 40, 15, -90, -42, 42},
         {7, 11, 13, 17, 19, 23, 29, 31, 37, 41},
         97},
        {"level5_cubic",
         2,
         {"ap", "1", "p", "p^2", "chi5*p"},
         {-1, 0, -8, 6, -1},
         {7, 11, 13, 17, 19},
         199},
        {"level4_cubic",
         4,
         {"ap", "1", "p", "p^2", "p^3", "p^4"},
         {-1, -1, -17, 20, -30, 17},
         {7, 11, 13, 17, 19, 23},
         149},
        {"level3_cubic",
         3,
         {"ap", "p", "p^2", "p^3", "p^4", "chi-3*p", "chi-3*p^2"},
         {1, 12, 9, -14, -3, 4, -2},
         {7, 11, 13, 17, 19, 23, 29},
         127},
        {"level2_cubic",
         4,
         {"ap", "p", "p^2", "p^3", "p^4", "p^5", "p^6"},
         {-1, -9, -83, 137, -103, 51, 2},
         {7, 11, 13, 17, 19, 23, 29},
         89},
    };
    return models;
}

const PinnedModel& pinned_model(const std::string& family_id) {
    for (const auto& m : pinned_models())
        if (m.family_id == family_id) return m;
    throw UsageError("no pinned model for family " + family_id);
}

const std::vector<InfeasibleBasis>& infeasible_bases() {
    static const std::vector<InfeasibleBasis> bases = {
        {"level1_weierstrass",
         10,
         {"ap", "p*ap", "1", "p", "p^2", "p^3", "p^4", "p^5", "p^6"},
         {7, 11, 13, 17, 19, 23, 29, 31, 37}},
        {"level5_cubic", 2, {"ap", "1", "p", "p^2"}, {7, 11, 13, 17}},
        {"level4_cubic", 4, {"ap", "p*ap", "1", "p", "p^2", "p^3"}, {7, 11, 13, 17, 19, 23}},
        {"level3_cubic", 4, {"ap", "p*ap", "1", "p", "p^2", "p^3"}, {7, 11, 13, 17, 19, 23}},
        {"level2_cubic",
         6,
         {"ap", "p*ap", "1", "p", "p^2", "p^3", "p^4"},
         {7, 11, 13, 17, 19, 23, 29}},
    };
    return bases;
}

const InfeasibleBasis& infeasible_basis(const std::string& family_id) {
    for (const auto& b : infeasible_bases())
        if (b.family_id == family_id) return b;
    throw UsageError("no demonstration basis for family " + family_id);
}

} // namespace mfcy
