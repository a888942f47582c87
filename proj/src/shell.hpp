// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_SHELL_HPP
#define MFCY_SHELL_HPP

#include <string>
#include <vector>

#include "config.hpp"

namespace mfcy {

// Command exit codes, mirrored by the public C header.
enum ExitCode {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitDegenerate = 3,
    kExitInternal = 5,
};

// Parses and executes one command line (program name excluded). The
// report carries everything a caller should print; error holds a short
// diagnostic for nonzero codes. Reports are byte-deterministic for a
// fixed command, config, and cache state.
int run_command(const std::vector<std::string>& args, const Config& session_cfg,
                std::string& report, std::string& error);

} // namespace mfcy

#endif
