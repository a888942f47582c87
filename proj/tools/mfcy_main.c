/* Copyright (c) 2026 The mfcy authors
 * Licensed under the Apache License, Version 2.0, see LICENSE for details.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Thin command-line front end over the shared library.
 */

#include <stdio.h>

#include "mfcy/mfcy.h"

int main(int argc, char** argv) {
    mfcy_session* s = mfcy_session_new();
    if (!s) {
        fputs("mfcy: out of memory\n", stderr);
        return MFCY_INTERNAL_ERROR;
    }

    char* report = NULL;
    int code = mfcy_run(s, argc - 1, (const char* const*)(argv + 1), &report);
    if (report) {
        fputs(report, stdout);
        mfcy_string_free(report);
    }
    if (code != MFCY_OK) {
        const char* msg = mfcy_last_error(s);
        if (msg && msg[0]) fprintf(stderr, "mfcy: %s\n", msg);
    }

    mfcy_session_free(s);
    return code;
}
