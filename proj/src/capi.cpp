// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "mfcy/mfcy.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "shell.hpp"

struct mfcy_session {
    mfcy::Config cfg;
    std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

mfcy_session* mfcy_session_new(void) {
    return new (std::nothrow) mfcy_session();
}

void mfcy_session_free(mfcy_session* s) {
    delete s;
}

int mfcy_session_config_file(mfcy_session* s, const char* path) {
    if (!s) return MFCY_INVALID_ARGUMENT;
    if (!path) {
        s->last_error = "path is NULL";
        return MFCY_INVALID_ARGUMENT;
    }
    try {
        mfcy::Config file_cfg = mfcy::Config::from_file(path);
        for (const auto& [k, v] : file_cfg.entries()) s->cfg.set(k, v);
        s->last_error.clear();
        return MFCY_OK;
    } catch (const mfcy::UsageError& e) {
        s->last_error = e.what();
        return MFCY_USAGE_ERROR;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return MFCY_INTERNAL_ERROR;
    }
}

int mfcy_session_set(mfcy_session* s, const char* key, const char* value) {
    if (!s) return MFCY_INVALID_ARGUMENT;
    if (!key || !value) {
        s->last_error = "key or value is NULL";
        return MFCY_INVALID_ARGUMENT;
    }
    try {
        s->cfg.set(key, value);
        s->last_error.clear();
        return MFCY_OK;
    } catch (const mfcy::UsageError& e) {
        s->last_error = e.what();
        return MFCY_USAGE_ERROR;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return MFCY_INTERNAL_ERROR;
    }
}

int mfcy_run(mfcy_session* s, int argc, const char* const* argv, char** report_out) {
    if (report_out) *report_out = nullptr;
    if (!s) return MFCY_INVALID_ARGUMENT;
    if (argc < 0 || (argc > 0 && !argv)) {
        s->last_error = "argv is NULL";
        return MFCY_INVALID_ARGUMENT;
    }
    for (int i = 0; i < argc; ++i) {
        if (!argv[i]) {
            s->last_error = "argv entry is NULL";
            return MFCY_INVALID_ARGUMENT;
        }
    }
    try {
        std::vector<std::string> args(argv, argv + argc);
        std::string report;
        int code = mfcy::run_command(args, s->cfg, report, s->last_error);
        if (report_out) {
            *report_out = dup_string(report);
            if (!*report_out) {
                s->last_error = "out of memory";
                return MFCY_INTERNAL_ERROR;
            }
        }
        return code;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return MFCY_INTERNAL_ERROR;
    }
}

const char* mfcy_last_error(const mfcy_session* s) {
    return s ? s->last_error.c_str() : "";
}

void mfcy_string_free(char* s) {
    std::free(s);
}

} // extern "C"
