// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_CACHE_HPP
#define MFCY_CACHE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfcy {

// Append-only point-count store, one text file per family:
//   family,p,param,count
// with params as colon-joined normalized coordinates. Identical duplicate
// records are tolerated; conflicting ones raise CacheCorrupt.
class CacheStore {
public:
    explicit CacheStore(std::string dir);

    const std::string& dir() const { return dir_; }

    using Records = std::vector<std::pair<std::string, uint64_t>>;

    // All records for (family, p) in file order; nullopt when none exist.
    std::optional<Records> lookup(const std::string& family, uint64_t p) const;

    void store(const std::string& family, uint64_t p, const Records& recs) const;

private:
    std::string dir_;

    std::string path_for(const std::string& family) const;
};

} // namespace mfcy

#endif
