#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace gridhfk::cli {

struct RunConfig {
    int max_grid_size = 12;
    std::uint64_t memory_budget_bytes = std::uint64_t(8) << 30;
    int threads = 1;  // 0 means one per hardware thread ("auto")
    bool json = false;
    std::optional<std::string> cache_dir;
};

// Lookup used for environment overrides; returns nullopt when unset.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup process_env();

// Merges a JSON config file into cfg. Keys: max_grid_size,
// memory_budget_bytes, threads (integer or "auto"), output ("json" or
// "text"), cache_dir. Throws ParseError.
void apply_config_file(RunConfig& cfg, const std::string& path);
// GRIDHFK_MAX_N, GRIDHFK_MEMORY_BUDGET, GRIDHFK_THREADS, GRIDHFK_OUTPUT,
// GRIDHFK_CACHE. Throws ParseError.
void apply_env(RunConfig& cfg, const EnvLookup& env);
// Throws ParseError when an invariant is broken.
void validate(const RunConfig& cfg);
int parse_threads(const std::string& s);

}  // namespace gridhfk::cli
