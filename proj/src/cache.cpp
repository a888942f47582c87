// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "cache.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "errors.hpp"

namespace fs = std::filesystem;

namespace mfcy {

namespace {

constexpr const char* kHeader = "family,p,param,count";

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

CacheStore::CacheStore(std::string dir) : dir_(std::move(dir)) {}

std::string CacheStore::path_for(const std::string& family) const {
    for (char ch : family)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
            throw UsageError("bad family id for cache file: " + family);
    return (fs::path(dir_) / (family + ".csv")).string();
}

std::optional<CacheStore::Records> CacheStore::lookup(const std::string& family,
                                                      uint64_t p) const {
    std::ifstream in(path_for(family));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw CacheCorrupt("missing or malformed cache header for " + family);
    Records out;
    std::map<std::string, uint64_t> seen;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 4 || f[0] != family)
            throw CacheCorrupt(family + ".csv line " + std::to_string(lineno) +
                               ": malformed record");
        uint64_t rec_p, count;
        try {
            rec_p = std::stoull(f[1]);
            count = std::stoull(f[3]);
        } catch (const std::exception&) {
            throw CacheCorrupt(family + ".csv line " + std::to_string(lineno) +
                               ": non-numeric field");
        }
        if (rec_p != p) continue;
        auto it = seen.find(f[2]);
        if (it != seen.end()) {
            if (it->second != count)
                throw CacheCorrupt(family + ".csv: conflicting records for param " + f[2]);
            continue; // identical duplicate
        }
        seen.emplace(f[2], count);
        out.emplace_back(f[2], count);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

void CacheStore::store(const std::string& family, uint64_t p, const Records& recs) const {
    fs::create_directories(dir_);
    std::string path = path_for(family);
    bool fresh = !fs::exists(path);
    std::ostringstream block;
    if (fresh) block << kHeader << "\n";
    for (auto& [param, count] : recs)
        block << family << ',' << p << ',' << param << ',' << count << "\n";
    std::ofstream out(path, std::ios::app);
    if (!out) throw CacheCorrupt("cannot open cache file " + path);
    out << block.str();
}

} // namespace mfcy
