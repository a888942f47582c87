// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_ERRORS_HPP
#define MFCY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfcy {

// Degenerate-input family. All of these surface as exit code 3 at the
// command-line boundary.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadPrime : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct BadReduction : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct DegenerateLine : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct DegeneratePoint : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct NotGeneral : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct SingularFibre : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct InconsistentConditions : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct SingularFit : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct InconsistentFit : DegenerateError {
    using DegenerateError::DegenerateError;
};

struct CacheCorrupt : DegenerateError {
    using DegenerateError::DegenerateError;
};

// Bad command line or config. Exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mfcy

#endif
