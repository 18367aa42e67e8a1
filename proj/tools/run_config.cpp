#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gridhfk/error.hpp"

namespace gridhfk::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

long long parse_integer(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        bad(what + ": not an integer: '" + s + "'");
    }
    if (used != s.size()) bad(what + ": not an integer: '" + s + "'");
    return v;
}

bool parse_output(const std::string& s) {
    if (s == "json") return true;
    if (s == "text") return false;
    bad("output must be json or text, got '" + s + "'");
}

}  // namespace

EnvLookup process_env() {
    return [](const std::string& k) -> std::optional<std::string> {
        const char* v = std::getenv(k.c_str());
        if (!v) return std::nullopt;
        return std::string(v);
    };
}

int parse_threads(const std::string& s) {
    if (s == "auto") return 0;
    const long long v = parse_integer(s, "threads");
    if (v < 1 || v > 1024) bad("threads must be auto or in [1, 1024]");
    return static_cast<int>(v);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
    if (!j.is_object()) bad(path + ": expected a JSON object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "max_grid_size") cfg.max_grid_size = v.get<int>();
            else if (key == "memory_budget_bytes") cfg.memory_budget_bytes = v.get<std::uint64_t>();
            else if (key == "threads") cfg.threads = v.is_string() ? parse_threads(v.get<std::string>()) : parse_threads(std::to_string(v.get<long long>()));
            else if (key == "output") cfg.json = parse_output(v.get<std::string>());
            else if (key == "cache_dir") cfg.cache_dir = v.get<std::string>();
            else bad(path + ": unknown key " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        bad(path + ": " + e.what());
    }
}

void apply_env(RunConfig& cfg, const EnvLookup& env) {
    if (auto v = env("GRIDHFK_MAX_N")) cfg.max_grid_size = static_cast<int>(parse_integer(*v, "GRIDHFK_MAX_N"));
    if (auto v = env("GRIDHFK_MEMORY_BUDGET")) {
        const long long b = parse_integer(*v, "GRIDHFK_MEMORY_BUDGET");
        if (b <= 0) bad("GRIDHFK_MEMORY_BUDGET must be positive");
        cfg.memory_budget_bytes = static_cast<std::uint64_t>(b);
    }
    if (auto v = env("GRIDHFK_THREADS")) cfg.threads = parse_threads(*v);
    if (auto v = env("GRIDHFK_OUTPUT")) cfg.json = parse_output(*v);
    if (auto v = env("GRIDHFK_CACHE")) cfg.cache_dir = *v;
}

void validate(const RunConfig& cfg) {
    if (cfg.max_grid_size < 2) bad("max grid size must be at least 2");
    if (cfg.memory_budget_bytes == 0) bad("memory budget must be positive");
    if (cfg.threads < 0) bad("threads must be auto or positive");
}

}  // namespace gridhfk::cli
