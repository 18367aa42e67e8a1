#include "gridhfk/scenario.hpp"

#include <map>

#include "gridhfk/error.hpp"
#include "gridhfk/io.hpp"
#include "gridhfk/oracle.hpp"

namespace gridhfk {

namespace detail {
const std::map<std::string, std::string>& bundled_scripts();
}

std::vector<std::string> bundled_script_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : detail::bundled_scripts()) out.push_back(name);
    return out;
}

const std::string& bundled_script_text(const std::string& name) {
    const auto& all = detail::bundled_scripts();
    const auto it = all.find(name);
    if (it == all.end()) throw Error(ErrorCode::UnknownName, "no bundled script " + name);
    return it->second;
}

MoveScript bundled_script(const std::string& name) {
    return parse_script(bundled_script_text(name), ".", name);
}

namespace {

struct EnLayout {
    std::string base;
    std::vector<std::pair<std::string, std::string>> routes;  // grid, script
    std::string involution;
};

EnLayout layout(int n) {
    if (n % 2 == 0) throw Error(ErrorCode::EvenN, "n must be odd, got " + std::to_string(n));
    if (n == 3) return {"E(1,3)", {{"E(1,3)", ""}, {"E(3,1)", "e31_to_e13"}}, "iota_e13"};
    if (n == 5)
        return {"E(3,3)",
                {{"E(1,5)", "e15_to_e33"}, {"E(3,3)", ""}, {"E(5,1)", "e51_to_e33"}},
                "iota_e33"};
    throw Error(ErrorCode::UnknownName, "no bundled scenario for n = " + std::to_string(n));
}

}  // namespace

bool EnScenario::ok() const {
    for (const auto& g : grids)
        if (!g.gradings_ok || !g.hat_ok || g.classical != ClassicalInvariants{1, 0, 1}) return false;
    return involution_squares_to_identity && orbits == expected_orbits;
}

EnScenario run_en_scenario(int n, const BuildOptions& opt) {
    const EnLayout lay = layout(n);
    EnScenario s;
    s.n = n;
    s.base = lay.base;
    s.expected_hat = en_tables(n).first;
    s.expected_orbits = (n + 3) / 4;

    for (const auto& [name, route] : lay.routes) {
        const GridDiagram g = builtin_library(name);
        EnGridReport r;
        r.name = name;
        r.classical = classical_invariants(g);
        r.gradings_ok = check_grading_theorem(g).ok();
        const auto h = compute_homology(g, opt);
        r.hat = divide_by_tensor_factor(h.homology->dims(), g.n());
        r.hat_ok = r.hat == s.expected_hat;
        s.grids.push_back(std::move(r));
    }

    Transporter tr(opt);
    const Bigrading top{2, 1};
    for (const auto& [name, route] : lay.routes) {
        const GridDiagram g = builtin_library(name);
        const HomologyClass own = tr.class_of_state(g, legendrian_states(g).x_plus);
        s.classes.push_back({name, route, route.empty() ? own : tr.transport(bundled_script(route), own)});
    }
    s.involution = tr.transport_map(bundled_script(lay.involution), top);
    s.involution_squares_to_identity = true;
    for (std::size_t k = 0; k < s.involution.columns.size(); ++k) {
        std::vector<std::uint8_t> e(s.involution.columns.size(), 0);
        e[k] = 1;
        if (s.involution.apply(s.involution.apply(e)) != e) s.involution_squares_to_identity = false;
    }
    std::vector<HomologyClass> classes;
    for (const auto& c : s.classes) classes.push_back(c.cls);
    for (const auto& c : classes) {
        const auto img = s.involution.apply(c.coords);
        int at = -1;
        for (std::size_t j = 0; j < classes.size() && at < 0; ++j)
            if (classes[j].coords == img) at = static_cast<int>(j);
        s.involution_image.push_back(at);
    }
    s.orbits = count_orbits(classes, s.involution);
    return s;
}

nlohmann::json to_json(const EnScenario& s) {
    nlohmann::json grids = nlohmann::json::array();
    for (const auto& g : s.grids)
        grids.push_back({{"name", g.name},
                         {"classical", to_json(g.classical)},
                         {"gradings_ok", g.gradings_ok},
                         {"hat", to_json(g.hat)},
                         {"hat_ok", g.hat_ok}});
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : s.classes)
        classes.push_back({{"grid", c.grid}, {"route", c.route}, {"class", to_json(c.cls)}});
    return {{"n", s.n},
            {"base", s.base},
            {"expected_hat", to_json(s.expected_hat)},
            {"grids", grids},
            {"classes", classes},
            {"involution", s.involution.columns},
            {"involution_squares_to_identity", s.involution_squares_to_identity},
            {"involution_image", s.involution_image},
            {"orbits", s.orbits},
            {"expected_orbits", s.expected_orbits},
            {"ok", s.ok()}};
}

}  // namespace gridhfk
