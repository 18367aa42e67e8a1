#include <cstdlib>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gridhfk/error.hpp"
#include "gridhfk/io.hpp"
#include "gridhfk/oracle.hpp"
#include "gridhfk/scenario.hpp"
#include "run_config.hpp"

using namespace gridhfk;
using nlohmann::json;

namespace {

const char* kLibraryPrefix = "lib:";
const char* kBundledPrefix = "bundled:";

GridDiagram load_grid(const std::string& arg) {
    if (arg.rfind(kLibraryPrefix, 0) == 0) return builtin_library(arg.substr(4));
    return read_grid_file(arg);
}

MoveScript load_script(const std::string& arg) {
    if (arg.rfind(kBundledPrefix, 0) == 0) return bundled_script(arg.substr(8));
    return read_script_file(arg);
}

BuildOptions build_options(const cli::RunConfig& cfg) {
    BuildOptions opt;
    opt.max_n = cfg.max_grid_size;
    opt.memory_budget_bytes = cfg.memory_budget_bytes;
    opt.threads = cfg.threads;
    return opt;
}

void check_grid_size(const GridDiagram& g, const cli::RunConfig& cfg) {
    if (g.n() > cfg.max_grid_size)
        throw Error(ErrorCode::SizeBoundExceeded,
                    "grid size " + std::to_string(g.n()) + " exceeds the bound " + std::to_string(cfg.max_grid_size));
}

std::string coords_string(const std::vector<std::uint8_t>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s + "]";
}

std::string class_string(const HomologyClass& c) {
    std::ostringstream os;
    os << "(" << c.bigrading.maslov << "," << c.bigrading.alexander << ") " << coords_string(c.coords)
       << (c.is_zero() ? " zero" : " nonzero");
    return os.str();
}

std::string dims_string(const BigradedDims& d) {
    std::ostringstream os;
    for (const auto& [b, r] : d.ranks) os << "  (" << b.maslov << "," << b.alexander << "): " << r << "\n";
    return os.str();
}

json grid_json(const GridDiagram& g) {
    return {{"name", g.name()}, {"n", g.n()}, {"x_perm", g.xs()}, {"o_perm", g.os()}};
}

std::int64_t value_at_minus_one(const Laurent& p) {
    std::int64_t v = 0;
    for (const auto& [e, c] : p.terms()) v += (e % 2 == 0) ? c : -c;
    return v;
}

void emit(const cli::RunConfig& cfg, const json& j, const std::string& text) {
    if (cfg.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

int cmd_validate(const cli::RunConfig& cfg, const std::string& file) {
    const GridDiagram g = load_grid(file);
    check_grid_size(g, cfg);
    emit(cfg, {{"valid", true}, {"grid", grid_json(g)}}, "valid grid of size " + std::to_string(g.n()) + "\n");
    return 0;
}

int cmd_invariants(const cli::RunConfig& cfg, const std::string& file) {
    const GridDiagram g = load_grid(file);
    check_grid_size(g, cfg);
    const ClassicalInvariants ci = classical_invariants(g);
    const Laurent delta = grid_alexander_polynomial(g);
    const int sigma = signature(g);
    const std::int64_t det = value_at_minus_one(delta);
    const bool sign_ok = (det > 0) == ((sigma / 2) % 2 == 0);
    const bool sigma_ok = sign_ok && signature_other_colouring(g) == sigma;
    std::ostringstream os;
    os << "tb " << ci.tb << "\nrot " << ci.rot << "\nsl " << ci.sl << "\nalexander " << delta.to_string()
       << "\nsignature " << sigma << "\nsignature consistent " << (sigma_ok ? "true" : "false") << "\n";
    json j = {{"grid", grid_json(g)},
              {"tb", ci.tb},
              {"rot", ci.rot},
              {"sl", ci.sl},
              {"alexander", delta.to_string()},
              {"signature", sigma},
              {"signature_consistent", sigma_ok}};
    emit(cfg, j, os.str());
    return 0;
}

int cmd_homology(const cli::RunConfig& cfg, const std::string& file) {
    const GridDiagram g = load_grid(file);
    const BuildOptions opt = build_options(cfg);
    std::optional<std::filesystem::path> cache;
    if (cfg.cache_dir) cache = *cfg.cache_dir;
    auto complex = std::make_shared<const SlicedComplex>(build_slices_cached(g, opt, cache));
    const ReducedComplex red(complex);
    const BigradedDims hat = divide_by_tensor_factor(red.dims(), g.n());
    json j = {{"grid", grid_json(g)}, {"tilde", to_json(red.dims())}, {"hat", to_json(hat)}};
    emit(cfg, j, "tilde\n" + dims_string(red.dims()) + "hat\n" + dims_string(hat));
    return 0;
}

int cmd_theta(const cli::RunConfig& cfg, const std::string& file) {
    const GridDiagram g = load_grid(file);
    check_grid_size(g, cfg);
    const BuildOptions opt = build_options(cfg);
    const GradingReport report = check_grading_theorem(g);
    const LegendrianInvariantPair inv = legendrian_invariants(g, opt);
    json j = legendrian_report_json(g, report, !inv.class_plus.is_zero(), !inv.class_minus.is_zero());
    std::ostringstream os;
    os << "tb " << report.classical.tb << "  rot " << report.classical.rot << "  sl " << report.classical.sl << "\n"
       << "x+ " << class_string(inv.class_plus) << "\n"
       << "x- " << class_string(inv.class_minus) << "\n";
    if (g.n() <= 8) {
        const bool minus = minus_nonvanishing(g);
        j["x_plus"]["nonzero_minus_flavour"] = minus;
        os << "x+ nonzero in the minus flavour: " << (minus ? "true" : "false") << "\n";
    }
    for (const auto& id : report.identities)
        os << id.name << ": " << id.lhs << " = " << id.rhs << (id.ok ? "  ok" : "  FAILED") << "\n";
    emit(cfg, j, os.str());
    return report.ok() ? 0 : 4;
}

int cmd_transport(const cli::RunConfig& cfg, const std::string& file, const std::string& which, bool verify) {
    const MoveScript s = load_script(file);
    const BuildOptions opt = build_options(cfg);
    for (const auto& g : s.grids()) check_grid_size(g, cfg);
    Transporter tr(opt, verify);
    const GridDiagram start = s.start, end = s.end();
    const LegendrianStates a = legendrian_states(start), b = legendrian_states(end);
    const bool plus = which == "plus";
    const HomologyClass from = tr.class_of_state(start, plus ? a.x_plus : a.x_minus);
    std::vector<TransportStep> log;
    const HomologyClass moved = tr.transport(s, from, &log);
    const HomologyClass own = tr.class_of_state(end, plus ? b.x_plus : b.x_minus);
    const bool equal = moved.bigrading == own.bigrading && moved.coords == own.coords;

    json steps = json::array();
    for (const auto& st : log)
        steps.push_back({{"move", st.move.to_string()},
                         {"method", st.method},
                         {"bigrading", {st.bigrading.maslov, st.bigrading.alexander}},
                         {"zero", st.zero}});
    json j = {{"which", which},     {"start", grid_json(start)},   {"end", grid_json(end)},
              {"steps", steps},     {"transported", to_json(moved)}, {"target", to_json(own)},
              {"classes_equal", equal}, {"classes_differ", !equal}};
    std::ostringstream os;
    os << "moves " << s.moves.size() << "\n"
       << "transported x" << (plus ? "+" : "-") << " " << class_string(moved) << "\n"
       << "target x" << (plus ? "+" : "-") << " " << class_string(own) << "\n"
       << "classes equal: " << (equal ? "true" : "false") << "\n"
       << "classes differ: " << (equal ? "false" : "true") << "\n";
    if (start.same_markers(end)) {
        const bool identity = tr.transport_map(s, from.bigrading).is_identity();
        j["identity"] = identity;
        os << "identity: " << (identity ? "true" : "false") << "\n";
    }
    emit(cfg, j, os.str());
    return 0;
}

int cmd_en_scenario(const cli::RunConfig& cfg, int n) {
    const EnScenario s = run_en_scenario(n, build_options(cfg));
    std::ostringstream os;
    os << "E_" << n << " base " << s.base << "\n";
    for (const auto& g : s.grids)
        os << g.name << ": tb " << g.classical.tb << " rot " << g.classical.rot << " sl " << g.classical.sl
           << ", grading identities " << (g.gradings_ok ? "pass" : "FAIL") << ", hat table "
           << (g.hat_ok ? "matches" : "DIFFERS") << "\n";
    for (const auto& c : s.classes)
        os << "lambda(" << c.grid << ") in " << s.base << ": " << coords_string(c.cls.coords)
           << (c.route.empty() ? "" : "  via " + c.route) << "\n";
    os << "involution squares to the identity: " << (s.involution_squares_to_identity ? "true" : "false") << "\n"
       << "orbits " << s.orbits << " (expected " << s.expected_orbits << ")\n"
       << (s.ok() ? "ok" : "FAILED") << "\n";
    emit(cfg, to_json(s), os.str());
    return s.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Knot Floer homology of grid diagrams and Legendrian invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, threads_flag, cache_flag;
    int max_n_flag = 0;
    bool json_flag = false;
    app.add_option("--config", config_path, "JSON config file (also GRIDHFK_CONFIG)");
    app.add_flag("--json", json_flag, "JSON output");
    app.add_option("--threads", threads_flag, "worker threads, a number or auto");
    app.add_option("--max-n", max_n_flag, "largest grid size accepted");
    app.add_option("--cache", cache_flag, "directory for cached complexes");

    std::string file, which = "plus";
    int n = 0;
    bool verify = false;
    auto* validate = app.add_subcommand("validate", "check a grid file");
    validate->add_option("grid", file, "grid file or lib:NAME")->required();
    auto* invariants = app.add_subcommand("invariants", "tb, rot, sl, Alexander polynomial and signature");
    invariants->add_option("grid", file, "grid file or lib:NAME")->required();
    auto* homology = app.add_subcommand("homology", "tilde and hat ranks by bigrading");
    homology->add_option("grid", file, "grid file or lib:NAME")->required();
    auto* theta = app.add_subcommand("theta", "Legendrian invariants and the grading identities");
    theta->alias("report");
    theta->add_option("grid", file, "grid file or lib:NAME")->required();
    auto* transport = app.add_subcommand("transport", "carry x+ or x- along a move script");
    transport->add_option("script", file, "script file or bundled:NAME")->required();
    transport->add_option("--which", which, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    transport->add_flag("--verify", verify, "check every chain map on the slices it touches");
    auto* scenario = app.add_subcommand("en-scenario", "twist knot report for n = 3 or 5");
    scenario->add_option("n", n, "odd n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cli::RunConfig cfg;
        const auto env = cli::process_env();
        if (config_path.empty())
            if (auto v = env("GRIDHFK_CONFIG")) config_path = *v;
        if (!config_path.empty()) cli::apply_config_file(cfg, config_path);
        cli::apply_env(cfg, env);
        if (json_flag) cfg.json = true;
        if (!threads_flag.empty()) cfg.threads = cli::parse_threads(threads_flag);
        if (max_n_flag != 0) cfg.max_grid_size = max_n_flag;
        if (!cache_flag.empty()) cfg.cache_dir = cache_flag;
        cli::validate(cfg);

        if (*validate) return cmd_validate(cfg, file);
        if (*invariants) return cmd_invariants(cfg, file);
        if (*homology) return cmd_homology(cfg, file);
        if (*theta) return cmd_theta(cfg, file);
        if (*transport) return cmd_transport(cfg, file, which, verify);
        if (*scenario) return cmd_en_scenario(cfg, n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
