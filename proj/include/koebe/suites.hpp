#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "koebe/json_io.hpp"

namespace koebe {

inline constexpr const char* kToolVersion = "0.1.0";

struct Assertion {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct RunManifest {
    std::string tool_version = kToolVersion;
    std::string suite;
    std::uint64_t seed = 0;
    json parameters = json::object();
    /// instance label -> FNV-1a of its graph JSON
    std::map<std::string, std::string> input_hashes;
    double wall_clock_seconds = 0.0;
    std::vector<Assertion> assertions;
    /// Named CSV tables (header row first).
    std::map<std::string, std::vector<std::vector<std::string>>> tables;

    bool passed() const;
    json to_json() const;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_ids();

/// Runs one acceptance suite. Unknown ids throw InputError.
RunManifest run_suite(const std::string& id, const SuiteOptions& opts = {});

}  // namespace koebe
