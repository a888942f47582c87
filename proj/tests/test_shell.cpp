// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "shell.hpp"

using namespace mfcy;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

struct Run {
    int code;
    std::string report;
    std::string error;
};

Run run(const std::vector<std::string>& args, const Config& cfg = Config()) {
    Run r;
    r.code = run_command(args, cfg, r.report, r.error);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("config parses flat key=value text") {
    Config c = Config::from_string(
        "# comment\n"
        "\n"
        "cache.dir = /tmp/somewhere\n"
        "suite.hecke.max_n=50\n"
        "fit.level5_cubic.basis = ap,1,p\n");
    CHECK(c.get("cache.dir", "") == "/tmp/somewhere");
    CHECK(c.get_u64("suite.hecke.max_n", 0) == 50);
    CHECK(c.get("fit.level5_cubic.basis", "") == "ap,1,p");
    CHECK(c.get("limits.todd_polynomial", "8") == "8");
    CHECK(c.get_u64("limits.diagnostic_prime", 31) == 31);
    CHECK(c.entries().size() == 3);
}

TEST_CASE("config rejects unknown keys and malformed lines") {
    CHECK_THROWS_AS(Config::from_string("cache.dir\n"), UsageError);
    CHECK_THROWS_AS(Config::from_string("who.knows=1\n"), UsageError);
    Config c;
    CHECK_THROWS_AS(c.set("cachedir", "x"), UsageError);
    c.set("limits.diagnostic_prime", "abc");
    CHECK_THROWS_AS(c.get_u64("limits.diagnostic_prime", 0), UsageError);
    CHECK_THROWS_AS(Config::from_file("/nonexistent/mfcy.conf"), UsageError);
}

TEST_CASE("ap prints a single coefficient") {
    Run r = run({"ap", "--level", "1", "--weight", "12", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.report == "-24\n");

    Run r11 = run({"ap", "--level", "11", "--weight", "2", "--n", "7"});
    CHECK(r11.code == 0);
    CHECK(r11.report == "-2\n");

    CHECK(run({"ap", "--level", "1", "--weight", "12", "--n", "0"}).code == kExitUsage);
    CHECK(run({"ap", "--level", "9", "--weight", "9", "--n", "1"}).code == kExitUsage);
}

TEST_CASE("eta lists expansion coefficients") {
    Run r = run({"eta", "--level", "1", "--weight", "12", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "form 1.12"));
    CHECK(contains(r.report, "a_1 = 1"));
    CHECK(contains(r.report, "a_2 = -24"));
    CHECK(contains(r.report, "a_3 = 252"));
}

TEST_CASE("euler prints the local factor") {
    Run r = run({"euler", "--level", "1", "--weight", "12", "--prime", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "1 + 24*T + 2048*T^2"));

    Run r5 = run({"euler", "--level", "5", "--weight", "4", "--prime", "5"});
    CHECK(r5.code == 0);
    // bad prime: linear factor only
    CHECK(!contains(r5.report, "T^2"));
}

TEST_CASE("hecke subcommand reports identity checks") {
    Run r = run({"hecke", "--level", "11", "--weight", "2", "--n", "60"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "form 11.2: identities ok through n = 60"));
}

TEST_CASE("linsys describes a family and checks reduction") {
    Run r = run({"linsys", "--family", "level5_cubic"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "family=level5_cubic"));
    CHECK(contains(r.report, "generator 0:"));
    CHECK(contains(r.report, "torsion=5"));

    Run rp = run({"linsys", "--family", "level5_cubic", "--prime", "7"});
    CHECK(rp.code == 0);
    CHECK(contains(rp.report, "rank preserved mod 7"));

    CHECK(run({"linsys", "--family", "no_such_family"}).code == kExitUsage);
}

TEST_CASE("scan refuses a bad prime with the degenerate exit code") {
    Run r = run({"scan", "--family", "level5_cubic", "--prime", "5"});
    CHECK(r.code == kExitDegenerate);
    CHECK(!r.error.empty());
}

TEST_CASE("scan lists one record per fibre") {
    Run r = run({"scan", "--family", "level5_cubic", "--prime", "7"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "family=level5_cubic p=7 records=8"));
    CHECK(contains(r.report, "param="));
    CHECK(contains(r.report, " singular="));
}

TEST_CASE("moments prints one summary line") {
    Run r = run({"moments", "--family", "level5_cubic", "--prime", "7", "--r", "2"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "family=level5_cubic p=7 r=2"));
    CHECK(contains(r.report, "m_smooth="));
}

TEST_CASE("fit defaults to the pinned basis") {
    Run r = run({"fit", "--family", "level5_cubic"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "ap: -1"));
    CHECK(contains(r.report, "p^2: 6"));
    CHECK(contains(r.report, "fit primes: 7,11,13,17,19"));
}

TEST_CASE("validate reports residuals on further primes") {
    Run r = run({"validate", "--family", "level5_cubic", "--max-prime", "29"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "p=29 residual=0"));
    CHECK(contains(r.report, "validated "));

    // an infeasible basis surfaces as a verification failure
    Run bad = run({"validate", "--family", "level5_cubic", "--basis", "ap,1,p,p^2",
                   "--primes", "7,11,13,17", "--max-prime", "60"});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(contains(bad.error, "residual="));
}

TEST_CASE("verify and suite run the named checks") {
    Run r = run({"verify", "--suite", "todd"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "m=19 top_chern="));
    CHECK(contains(r.report, "result: pass"));

    Run s = run({"suite", "todd"});
    CHECK(s.code == 0);
    CHECK(s.report == r.report);

    CHECK(run({"suite", "bogus"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "bogus"}).code == kExitUsage);
}

TEST_CASE("kummer compares the closed form with enumeration") {
    Run r = run({"kummer", "--a", "1", "--b", "0", "--prime", "7"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "enumeration agrees: yes"));

    CHECK(run({"kummer", "--a", "0", "--b", "1", "--prime", "3"}).code == kExitDegenerate);
}

TEST_CASE("detcy reports rank, determinant, and fibres") {
    Run r6 = run({"detcy", "--prime", "11", "--points", "8:0:1;10:10:1;9:8:1;8:6:1;7:6:1;1:4:8"});
    CHECK(r6.code == 0);
    CHECK(contains(r6.report, "points=6 rank=5 corank=1"));
    CHECK(contains(r6.report, "det=0"));
    CHECK(contains(r6.report, "member: yes"));

    Run r5 = run({"detcy", "--prime", "11", "--points", "8:0:1;10:10:1;9:8:1;8:6:1;7:6:1",
                  "--query", "7:6:1"});
    CHECK(r5.code == 0);
    CHECK(contains(r5.report, "fibre=0:9:3:6:7:9:0:1:9:0"));
    CHECK(contains(r5.report, "fibre_points=17"));
    // (7:6:1) normalizes to (1:4:8) and is the group origin, so negation fixes it
    CHECK(contains(r5.report, "tau(1:4:8) = 1:4:8"));

    // base point input is degenerate
    CHECK(run({"detcy", "--prime", "11", "--points", "1:0:0"}).code == kExitDegenerate);
    CHECK(run({"detcy", "--prime", "11", "--points", "1:2"}).code == kExitUsage);
}

TEST_CASE("todd prints the polynomial and the coefficient table") {
    Run r = run({"todd", "--m", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.report,
                   "Todd_4 = -1/720*c1^4 + 1/180*c1^2*c2 + 1/720*c1*c3 + 1/240*c2^2 - 1/720*c4"));
    CHECK(contains(r.report, "dual route agrees: yes"));
    CHECK(contains(r.report, "P^4 genus = 1"));
    CHECK(contains(r.report, "m=12 top_chern=-691/1307674368000"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"ap"}).code == kExitUsage);
    CHECK(run({"ap", "--levle", "1"}).code == kExitUsage);
    CHECK(run({"no_such_command"}).code == kExitUsage);

    Run help = run({"--help"});
    CHECK(help.code == kExitOk);
    CHECK(contains(help.report, "Usage"));
}

TEST_CASE("config file options merge into a command") {
    TempDir td("mfcy_shell_cfg");
    fs::path conf = td.path / "mfcy.conf";
    {
        std::ofstream out(conf);
        out << "suite.todd.max_m=7\n";
    }
    Run r = run({"--config", conf.string(), "verify", "--suite", "todd"});
    CHECK(r.code == 0);
    CHECK(contains(r.report, "m=7 top_chern="));
    CHECK(!contains(r.report, "m=8"));

    Run missing = run({"--config", (td.path / "nope.conf").string(), "suite", "todd"});
    CHECK(missing.code == kExitUsage);
}

TEST_CASE("reports are byte-identical across reruns") {
    std::vector<std::string> cmd{"scan", "--family", "level3_cubic", "--prime", "7"};
    Run a = run(cmd);
    Run b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.report == b.report);

    Run t1 = run({"verify", "--suite", "todd"});
    Run t2 = run({"verify", "--suite", "todd"});
    CHECK(t1.report == t2.report);
}

TEST_CASE("scan trusts the cache on a hit") {
    TempDir td("mfcy_shell_cache");
    Config cfg;
    cfg.set("cache.dir", td.path.string());

    std::vector<std::string> cmd{"scan", "--family", "level5_cubic", "--prime", "7"};
    Run cold = run(cmd, cfg);
    CHECK(cold.code == 0);
    Run warm = run(cmd, cfg);
    CHECK(warm.report == cold.report);

    // tamper with one cached count; a rerun must echo the tampered value,
    // which shows the hit path never recounts curve points
    fs::path file = td.path / "level5_cubic.csv";
    REQUIRE(fs::exists(file));
    std::vector<std::string> lines;
    {
        std::ifstream in(file);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    bool tampered = false;
    for (auto& line : lines) {
        if (!tampered && line.rfind("level5_cubic,7,", 0) == 0) {
            size_t cut = line.rfind(',');
            uint64_t n = std::stoull(line.substr(cut + 1));
            line = line.substr(0, cut + 1) + std::to_string(n + 1);
            tampered = true;
        }
    }
    REQUIRE(tampered);
    {
        std::ofstream out(file, std::ios::trunc);
        for (const auto& line : lines) out << line << "\n";
    }
    Run echoed = run(cmd, cfg);
    CHECK(echoed.code == 0);
    CHECK(echoed.report != cold.report);
}
