// One line per acceptance criterion; exit status 0 when every line passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"
#include "gridhfk/move_maps.hpp"
#include "gridhfk/oracle.hpp"
#include "gridhfk/scenario.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitUnknot = 1;
constexpr double kLimitTrefoil = 1;
constexpr double kLimitTable = 600;
constexpr double kLimitClassical = 60;
constexpr double kLimitGrading = 120;
constexpr double kLimitNonvanishing = 600;
constexpr double kLimitHeadline = 1800;
constexpr double kLimitProperties = 600;

constexpr int kRandomGradingGrids = 100;
constexpr int kRandomLegendrianScripts = 3;
constexpr int kRandomScriptLength = 6;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

BigradedDims hat_of(const GridDiagram& g) {
    return divide_by_tensor_factor(compute_homology(g).homology->dims(), g.n());
}

BigradedDims dims(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
    BigradedDims d;
    for (const auto& [m, a, r] : entries) d.add({m, a}, r);
    return d;
}

std::vector<GridDiagram> library() {
    std::vector<GridDiagram> out;
    for (const auto& name : library_names()) out.push_back(builtin_library(name));
    return out;
}

bool is_twist_knot(const std::string& name) { return name.rfind("E(", 0) == 0; }

Outcome unknot_baseline() {
    Outcome o;
    const GridDiagram g = builtin_library("unknot2");
    const auto h = compute_homology(g);
    o.require(h.homology->dims() == dims({{0, 0, 1}, {-1, -1, 1}}), "tilde dims");
    o.require(divide_by_tensor_factor(h.homology->dims(), 2) == dims({{0, 0, 1}}), "hat dims");
    o.require(classical_invariants(g) == ClassicalInvariants{-1, 0, -1}, "tb, rot, sl");
    const HomologyClass theta = transverse_invariant(g);
    o.require(!theta.is_zero() && theta.bigrading.alexander == 0, "theta nonzero at alexander 0");
    o.detail << "tilde {(0,0):1, (-1,-1):1}, hat {(0,0):1}, (tb,rot,sl) = (-1,0,-1)";
    return o;
}

Outcome trefoil() {
    Outcome o;
    const GridDiagram g = builtin_library("trefoil_rh");
    const BigradedDims hat = hat_of(g);
    o.require(hat == dims({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 1}}), "hat ranks");
    const Laurent chi = euler_of(hat);
    o.require(chi == Laurent({{1, 1}, {0, -1}, {-1, 1}}), "Euler characteristic");
    o.require(alternating_hfk(grid_alexander_polynomial(g), -2) == hat, "alternating formula");
    o.detail << "hat 1 at (0,1), (-1,0), (-2,-1); chi = " << chi.to_string();
    return o;
}

Outcome twist_knot_tables() {
    Outcome o;
    for (int n : {3, 5}) {
        const BigradedDims expected = en_tables(n).first;
        const int k = (n + 1) / 2;
        o.require(expected == dims({{2, 1, k}, {1, 0, n}, {0, -1, k}}), "table for n = " + std::to_string(n));
        for (const auto& name : library_names()) {
            if (!is_twist_knot(name)) continue;
            const GridDiagram g = builtin_library(name);
            const Laurent delta = grid_alexander_polynomial(g);
            if (!(delta == en_alexander(n))) continue;
            const BigradedDims hat = hat_of(g);
            o.require(hat == expected, name + " hat");
            o.detail << name << " (" << g.n() << "x" << g.n() << ") " << k << "/" << n << "/" << k << "; ";
        }
    }
    return o;
}

Outcome classical() {
    Outcome o;
    int count = 0;
    for (const auto& name : library_names()) {
        if (!is_twist_knot(name)) continue;
        const ClassicalInvariants c = classical_invariants(builtin_library(name));
        o.require(c == ClassicalInvariants{1, 0, 1}, name);
        ++count;
    }
    o.detail << count << " twist knot grids with (tb,rot,sl) = (1,0,1)";
    return o;
}

Outcome grading_theorem() {
    Outcome o;
    std::vector<GridDiagram> pool = library();
    std::mt19937 rng(2024);
    for (int t = 0; t < kRandomGradingGrids; ++t) pool.push_back(oracle::random_grid(2 + t % 6, rng));
    for (const auto& g : pool) {
        const GradingReport r = check_grading_theorem(g);
        const Bigrading p = legendrian_invariants(g).class_plus.bigrading;
        o.require(2 * p.alexander == r.classical.tb - r.classical.rot + 1, "2A(x+) on " + g.name());
        o.require(p.maslov - 2 * p.alexander == kLegendrianMaslovOffset, "M - 2A on " + g.name());
        o.require(r.ok(), "report on " + g.name());
    }
    o.detail << pool.size() << " grids, M(x+) - 2A(x+) = " << kLegendrianMaslovOffset;
    return o;
}

// Commutations, isotopy and negative stabilizations, and destabilizations that
// keep tb and rot.
MoveScript random_legendrian_script(const GridDiagram& g, int length, int max_n, std::mt19937& rng) {
    MoveScript s{g, {}};
    GridDiagram cur = g;
    for (int step = 0; step < length; ++step) {
        std::vector<GridMove> ok = {GridMove::cycle_columns(1), GridMove::cycle_rows(1)};
        const ClassicalInvariants here = classical_invariants(cur);
        for (const auto& m : legal_moves(cur)) {
            if (!is_legal(cur, m)) continue;
            switch (m.kind) {
                case GridMove::Kind::Stabilization: {
                    if (cur.n() >= max_n) break;
                    const auto cls = classify_stabilization(cur, m);
                    if (cls == StabilizationClass::LegendrianIsotopy || cls == StabilizationClass::NegativeStab)
                        ok.push_back(m);
                    break;
                }
                case GridMove::Kind::Destabilization:
                    if (cur.n() > 2 && classical_invariants(apply_move(cur, m)) == here) ok.push_back(m);
                    break;
                default:
                    ok.push_back(m);
            }
        }
        const GridMove m = ok[rng() % ok.size()];
        s.moves.push_back(m);
        cur = apply_move(cur, m);
    }
    return s;
}

Outcome nonvanishing() {
    Outcome o;
    int hat_nonzero = 0, total = 0;
    std::string hat_zero;
    for (const auto& g : library()) {
        ++total;
        const bool hat = check_nonvanishing(g);
        // The hat class is the image of the minus class, so a nonzero hat class
        // already shows the invariant is nonzero.
        const bool minus = hat || minus_nonvanishing(g);
        o.require(minus, "invariant of " + g.name());
        if (hat) ++hat_nonzero;
        else hat_zero += " " + g.name();
    }
    o.detail << "nonzero on " << total << "/" << total << " library grids (hat class nonzero on " << hat_nonzero
             << ", zero on" << hat_zero << ");";

    Transporter tr;
    std::mt19937 rng(66);
    int scripts = 0;
    for (const auto& g : library()) {
        if (g.n() > 7) continue;
        for (int t = 0; t < kRandomLegendrianScripts; ++t) {
            const MoveScript s = random_legendrian_script(g, kRandomScriptLength, g.n() + 2, rng);
            const HomologyClass moved = tr.transport(s, tr.class_of_state(g, legendrian_states(g).x_plus));
            const GridDiagram end = s.end();
            const HomologyClass own = tr.class_of_state(end, legendrian_states(end).x_plus);
            o.require(moved.bigrading == own.bigrading && moved.coords == own.coords, "transport on " + g.name());
            ++scripts;
        }
    }
    const GridDiagram e33 = builtin_library("E(3,3)");
    for (const auto& m : {GridMove::stabilize(Marker::X, 0, Corner::NE), GridMove::stabilize(Marker::O, 0, Corner::SW)}) {
        o.require(classify_stabilization(e33, m) == StabilizationClass::NegativeStab, "negative stabilization type");
        const HomologyClass moved = tr.step(e33, m, tr.class_of_state(e33, legendrian_states(e33).x_plus));
        const GridDiagram big = apply_move(e33, m);
        const HomologyClass own = tr.class_of_state(big, legendrian_states(big).x_plus);
        o.require(!moved.is_zero() && moved.coords == own.coords, "E(3,3) " + m.to_string());
        ++scripts;
    }
    o.detail << " theta carried to theta along " << scripts << " scripts";
    return o;
}

Outcome headline() {
    Outcome o;
    const EnScenario s = run_en_scenario(5);
    o.require(s.classes.size() == 3, "three classes");
    if (s.classes.size() != 3) return o;
    const auto& c15 = s.classes[0].cls;
    const auto& c33 = s.classes[1].cls;
    const auto& c51 = s.classes[2].cls;
    o.require(!c15.is_zero() && !c33.is_zero() && !c51.is_zero(), "nonzero classes");
    o.require(c15.coords != c33.coords, "lambda(E(1,5)) differs from lambda(E(3,3))");
    o.require(c51.coords != c33.coords, "lambda(E(5,1)) differs from lambda(E(3,3))");
    o.require(s.involution.apply(c15.coords) == c51.coords, "involution takes lambda(E(1,5)) to lambda(E(5,1))");
    o.require(s.involution_squares_to_identity, "involution squares to the identity");
    o.require(s.orbits == 2, "two orbits");

    Transporter tr;
    const MoveScript to51 = bundled_script("e15_to_e51");
    const GridDiagram e15 = to51.start, e51 = to51.end();
    const HomologyClass moved = tr.transport(to51, tr.class_of_state(e15, legendrian_states(e15).x_plus));
    o.require(moved.coords == tr.class_of_state(e51, legendrian_states(e51).x_plus).coords,
              "script through the involution carries lambda(E(1,5)) to lambda(E(5,1))");

    auto str = [](const HomologyClass& c) {
        std::string out;
        for (auto v : c.coords) out += std::to_string(v);
        return out;
    };
    o.detail << "in E(3,3) at (2,1): E(1,5) " << str(c15) << ", E(3,3) " << str(c33) << ", E(5,1) " << str(c51)
             << "; orbits " << s.orbits;
    return o;
}

std::vector<GridMove> moves_to_check(const GridDiagram& g) {
    std::vector<GridMove> out;
    for (const auto& m : legal_moves(g)) {
        if (!is_legal(g, m)) continue;
        // Stabilizing a 9x9 grid costs several seconds, so those grids get
        // every stabilization type at column 0 only.
        if (m.kind == GridMove::Kind::Stabilization && g.n() > 7 && m.index != 0) continue;
        out.push_back(m);
    }
    out.push_back(GridMove::cycle_columns(1));
    out.push_back(GridMove::cycle_rows(1));
    out.push_back(GridMove::rotation());
    return out;
}

Outcome properties() {
    Outcome o;
    std::mt19937 rng(88);
    std::vector<GridDiagram> small;
    for (const auto& g : library())
        if (g.n() <= 6) small.push_back(g);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 10; ++t) small.push_back(oracle::random_grid(n, rng));
    for (const auto& g : small) {
        try {
            check_d_squared(build_slices(g));
        } catch (const Error& e) {
            o.require(false, std::string("d^2 on ") + g.name() + ": " + e.what());
        }
    }
    o.detail << "d^2 = 0 on " << small.size() << " grids;";

    int symmetric = 0, euler = 0, invariant = 0, maps = 0;
    for (const auto& g : library()) {
        const BigradedDims hat = hat_of(g);
        o.require(is_symmetric(hat), "symmetry on " + g.name());
        ++symmetric;
        o.require(euler_of(hat) == grid_alexander_polynomial(g), "Euler characteristic on " + g.name());
        ++euler;
        for (const auto& m : moves_to_check(g)) {
            o.require(hat_of(apply_move(g, m)) == hat, m.to_string() + " on " + g.name());
            ++invariant;
        }
    }
    for (int t = 0; t < 20; ++t) {
        const GridDiagram g = oracle::random_grid(3 + t % 5, rng);
        o.require(euler_of(hat_of(g)) == grid_alexander_polynomial(g), "Euler characteristic on a random grid");
        ++euler;
    }
    for (const auto& g : library()) {
        if (g.n() > 6) continue;
        const auto src = std::make_shared<const SlicedComplex>(build_slices(g));
        for (const auto& m : legal_moves(g)) {
            if (!is_legal(g, m)) continue;
            try {
                InducedMap f;
                switch (m.kind) {
                    case GridMove::Kind::ColumnCommutation:
                    case GridMove::Kind::RowCommutation:
                        f = commutation_map(g, m);
                        break;
                    case GridMove::Kind::Stabilization:
                    case GridMove::Kind::Destabilization:
                        f = stabilization_map(g, m);
                        break;
                    default:
                        continue;
                }
                const SlicedComplex a = build_slices(f.source), b = build_slices(f.target);
                check_chain_map(f, a, b);
                ++maps;
            } catch (const Error& e) {
                o.require(false, m.to_string() + " on " + g.name() + ": " + e.what());
            }
        }
        for (const auto& m : {GridMove::cycle_columns(1), GridMove::cycle_rows(1), GridMove::rotation()}) {
            const ChainRule r = relabel_rule(g, m);
            const SlicedComplex b = build_slices(r.target);
            check_chain_map(assemble_map(r, *src, b), *src, b);
            ++maps;
        }
    }
    o.detail << " symmetry on " << symmetric << " knots, chi = Delta on " << euler << " grids, hat unchanged under "
             << invariant << " moves, " << maps << " chain maps checked";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "unknot baseline", kLimitUnknot, unknot_baseline},
        {2, "trefoil", kLimitTrefoil, trefoil},
        {3, "twist knot hat table", kLimitTable, twist_knot_tables},
        {4, "classical invariants", kLimitClassical, classical},
        {5, "grading theorem", kLimitGrading, grading_theorem},
        {6, "non-vanishing and stabilization", kLimitNonvanishing, nonvanishing},
        {7, "headline distinctness", kLimitHeadline, headline},
        {8, "property suite", kLimitProperties, properties},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs <= c.limit;
        const bool pass = o.pass && in_time;
        if (!pass) ++failed;
        std::printf("criterion %d %s: %s (%.2fs, limit %.0fs) %s\n", c.id, c.name, pass ? "PASS" : "FAIL", secs, c.limit,
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
