// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_SUITES_HPP
#define MFCY_SUITES_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace mfcy {

// One named verification suite run to completion. The report is plain
// UTF-8 text, byte-deterministic for a fixed config and cache state, and
// ends with "result: pass" or "result: fail (<first failing identity>)".
struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string report;
    std::string first_failure; // empty when pass
};

const std::vector<std::string>& suite_names();

// Runs the named suite; throws UsageError for unknown names.
SuiteResult run_suite(const std::string& name, const Config& cfg);

} // namespace mfcy

#endif
