/* Copyright (c) 2026 The mfcy authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Public C interface to the workbench. A session holds configuration and
 * the last error message; commands take argv-style string arrays and
 * return an exit code plus a heap-allocated report. All reports are
 * byte-deterministic for a fixed command, configuration, and cache.
 */

#ifndef MFCY_MFCY_H
#define MFCY_MFCY_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mfcy_session mfcy_session;

/* Exit codes. Commands report verification failures through the code,
 * not through crashes; 4 and 5 indicate misuse of this API or a bug. */
enum {
    MFCY_OK = 0,
    MFCY_VERIFY_FAILED = 1,
    MFCY_USAGE_ERROR = 2,
    MFCY_DEGENERATE_INPUT = 3,
    MFCY_INVALID_ARGUMENT = 4,
    MFCY_INTERNAL_ERROR = 5
};

/* Returns a fresh session with empty configuration, or NULL on
 * allocation failure. Free with mfcy_session_free. */
mfcy_session* mfcy_session_new(void);

void mfcy_session_free(mfcy_session* s);

/* Merges a flat key=value config file into the session. */
int mfcy_session_config_file(mfcy_session* s, const char* path);

/* Sets one config key. Unknown keys are rejected. */
int mfcy_session_set(mfcy_session* s, const char* key, const char* value);

/* Runs one command; argv excludes the program name. On return
 * *report_out (if non-NULL) holds a malloc'd NUL-terminated report the
 * caller frees with mfcy_string_free. The report may be empty but is
 * never NULL when the call reaches command execution. */
int mfcy_run(mfcy_session* s, int argc, const char* const* argv, char** report_out);

/* Message from the most recent failing call, empty after successes.
 * The pointer stays valid until the next call on the session. */
const char* mfcy_last_error(const mfcy_session* s);

void mfcy_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
