// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_FITMODELS_HPP
#define MFCY_FITMODELS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mfcy {

// Exact moment identities for the shipped families, found once by exact
// linear fitting and frozen here. The identity
//   M_r(p) = sum_i coeffs[i] * basis[i](p)
// has zero residual at every good prime up to validate_to.
struct PinnedModel {
    std::string family_id;
    unsigned r = 0;
    std::vector<std::string> basis;
    std::vector<long> coeffs;
    std::vector<uint64_t> fit_primes;
    uint64_t validate_to = 0;
};

const std::vector<PinnedModel>& pinned_models();
const PinnedModel& pinned_model(const std::string& family_id);

// Shorter bases that admit no exact identity. Solving them on exactly
// enough primes still produces coefficients; validation then exposes a
// nonzero residual. The suites keep these to demonstrate that failure.
struct InfeasibleBasis {
    std::string family_id;
    unsigned r = 0;
    std::vector<std::string> basis;
    std::vector<uint64_t> fit_primes;
};

const std::vector<InfeasibleBasis>& infeasible_bases();
const InfeasibleBasis& infeasible_basis(const std::string& family_id);

} // namespace mfcy

#endif
