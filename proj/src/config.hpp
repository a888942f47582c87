// Copyright (c) 2026 The mfcy authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef MFCY_CONFIG_HPP
#define MFCY_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

namespace mfcy {

// Flat key=value configuration. '#' starts a comment, blank lines are
// skipped, keys are validated against the documented set:
//   cache.dir                 point-count cache directory ("" disables)
//   limits.diagnostic_prime   fibre-diagnostic prime ceiling
//   limits.todd_polynomial    degree bound for full Todd polynomials
//   suite.<name>.<option>     per-suite overrides (max_prime, max_n,
//                             trials, fibres, seed, max_m)
//   fit.<family>.basis        comma-separated default basis for `fit`
//   fit.<family>.primes       comma-separated default fit primes
class Config {
public:
    Config() = default;

    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    void set(const std::string& key, const std::string& value);

    std::string get(const std::string& key, const std::string& fallback) const;
    uint64_t get_u64(const std::string& key, uint64_t fallback) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

} // namespace mfcy

#endif
