// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <initializer_list>
#include <string>
#include <vector>

#include "mfcy/mfcy.h"

namespace {

struct Session {
    mfcy_session* s;
    Session() : s(mfcy_session_new()) {}
    ~Session() { mfcy_session_free(s); }
};

std::string run(mfcy_session* s, std::initializer_list<const char*> args, int* code) {
    std::vector<const char*> argv(args);
    char* report = nullptr;
    *code = mfcy_run(s, int(argv.size()), argv.data(), &report);
    std::string out = report ? report : "";
    mfcy_string_free(report);
    return out;
}

} // namespace

TEST_CASE("session runs a command and returns the report") {
    Session t;
    REQUIRE(t.s != nullptr);
    int code = -1;
    std::string report = run(t.s, {"ap", "--level", "1", "--weight", "12", "--n", "2"}, &code);
    CHECK(code == MFCY_OK);
    CHECK(report == "-24\n");
    CHECK(std::string(mfcy_last_error(t.s)).empty());
}

TEST_CASE("exit codes map through the interface") {
    Session t;
    int code = -1;
    run(t.s, {"scan", "--family", "level5_cubic", "--prime", "5"}, &code);
    CHECK(code == MFCY_DEGENERATE_INPUT);
    CHECK(std::strlen(mfcy_last_error(t.s)) > 0);

    run(t.s, {"suite", "bogus"}, &code);
    CHECK(code == MFCY_USAGE_ERROR);

    std::string report = run(t.s, {"suite", "todd"}, &code);
    CHECK(code == MFCY_OK);
    CHECK(report.find("result: pass") != std::string::npos);
}

TEST_CASE("null arguments are rejected") {
    CHECK(mfcy_run(nullptr, 0, nullptr, nullptr) == MFCY_INVALID_ARGUMENT);
    CHECK(mfcy_session_config_file(nullptr, "x") == MFCY_INVALID_ARGUMENT);
    CHECK(mfcy_session_set(nullptr, "k", "v") == MFCY_INVALID_ARGUMENT);

    Session t;
    CHECK(mfcy_session_config_file(t.s, nullptr) == MFCY_INVALID_ARGUMENT);
    CHECK(mfcy_session_set(t.s, nullptr, "v") == MFCY_INVALID_ARGUMENT);
    const char* bad[] = {"ap", nullptr};
    CHECK(mfcy_run(t.s, 2, bad, nullptr) == MFCY_INVALID_ARGUMENT);
    CHECK(std::strlen(mfcy_last_error(t.s)) > 0);

    // a null report sink is allowed
    const char* ok[] = {"ap", "--level", "1", "--weight", "12", "--n", "1"};
    CHECK(mfcy_run(t.s, 7, ok, nullptr) == MFCY_OK);
}

TEST_CASE("session configuration feeds commands") {
    Session t;
    CHECK(mfcy_session_set(t.s, "suite.todd.max_m", "5") == MFCY_OK);
    int code = -1;
    std::string report = run(t.s, {"verify", "--suite", "todd"}, &code);
    CHECK(code == MFCY_OK);
    CHECK(report.find("m=5 top_chern=") != std::string::npos);
    CHECK(report.find("m=6 ") == std::string::npos);

    CHECK(mfcy_session_set(t.s, "mystery.key", "1") == MFCY_USAGE_ERROR);
    CHECK(std::strlen(mfcy_last_error(t.s)) > 0);
    CHECK(mfcy_session_config_file(t.s, "/nonexistent/mfcy.conf") == MFCY_USAGE_ERROR);

    mfcy_session_free(nullptr); // harmless
    mfcy_string_free(nullptr);
}
