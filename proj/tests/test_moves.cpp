#include <doctest.h>

#include <memory>
#include <random>

#include "gridhfk/error.hpp"
#include "gridhfk/move_maps.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

std::vector<GridDiagram> small_population() {
    std::vector<GridDiagram> pool;
    for (const auto& name : library_names()) {
        auto g = builtin_library(name);
        if (g.n() <= 6) pool.push_back(g);
    }
    std::mt19937 rng(61);
    for (int t = 0; t < 8; ++t) pool.push_back(oracle::random_grid(4 + t % 3, rng));
    return pool;
}

bool is_commutation(const GridMove& m) {
    return m.kind == GridMove::Kind::ColumnCommutation || m.kind == GridMove::Kind::RowCommutation;
}

std::vector<std::uint8_t> unit(int d, int k) {
    std::vector<std::uint8_t> v(d, 0);
    v[k] = 1;
    return v;
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("commutation maps are chain maps and isomorphisms on homology") {
    int checked = 0;
    for (const auto& g : small_population()) {
        for (const auto& m : legal_moves(g)) {
            if (!is_commutation(m)) continue;
            CAPTURE(m.to_string());
            auto h = apply_move(g, m);
            auto src = std::make_shared<SlicedComplex>(build_slices(g));
            auto tgt = std::make_shared<SlicedComplex>(build_slices(h));
            auto f = assemble_map(commutation_rule(g, m), *src, *tgt);
            CHECK(f.shift == Bigrading{0, 0});
            CHECK_NOTHROW(check_chain_map(f, *src, *tgt));
            ReducedComplex rs(src), rt(tgt);
            CHECK(rs.dims() == rt.dims());
            auto ranks = induced_ranks(f, rs, rt);
            for (auto& [b, r] : rs.dims().ranks) CHECK(ranks[b] == static_cast<std::size_t>(r));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("commutation_map wrapper") {
    auto g = builtin_library("figure8");
    for (const auto& m : legal_moves(g)) {
        if (!is_commutation(m)) continue;
        auto f = commutation_map(g, m);
        CHECK(f.target.same_markers(apply_move(g, m)));
    }
    auto bad = new_grid(4, {0, 1, 2, 3}, {2, 3, 1, 0});
    CHECK_THROWS_AS(commutation_map(bad, GridMove::commute_columns(0)), Error);
}

TEST_CASE("relabeling maps are chain isomorphisms") {
    for (const auto& g : small_population()) {
        for (auto m : {GridMove::cycle_columns(1), GridMove::cycle_rows(1), GridMove::rotation()}) {
            auto h = apply_move(g, m);
            auto src = build_slices(g), tgt = build_slices(h);
            auto f = assemble_map(relabel_rule(g, m), src, tgt);
            CHECK_NOTHROW(check_chain_map(f, src, tgt));
            for (auto& [b, blk] : f.blocks) CHECK(rank(blk) == blk.cols());
        }
    }
}

TEST_CASE("stabilization maps have the expected rank profile") {
    std::vector<GridDiagram> pool = {builtin_library("unknot2"), builtin_library("trefoil_rh"),
                                     builtin_library("figure8")};
    for (const auto& g : pool) {
        for (const auto& m : legal_moves(g)) {
            if (m.kind != GridMove::Kind::Stabilization) continue;
            CAPTURE(m.to_string());
            auto big = apply_move(g, m);
            auto f = stabilization_map(g, m);
            auto small_c = std::make_shared<SlicedComplex>(build_slices(g));
            auto big_c = std::make_shared<SlicedComplex>(build_slices(big));
            ReducedComplex rs(small_c), rb(big_c);
            if (stabilization_has_inclusion(m)) {
                CHECK(f.source.same_markers(g));
                CHECK_NOTHROW(check_chain_map(f, *small_c, *big_c));
                auto ranks = induced_ranks(f, rs, rb);
                for (auto& [b, r] : rs.dims().ranks) CHECK(ranks[b] == static_cast<std::size_t>(r));
            } else {
                CHECK(f.source.same_markers(big));
                CHECK_NOTHROW(check_chain_map(f, *big_c, *small_c));
                auto ranks = induced_ranks(f, rb, rs);
                std::map<Bigrading, std::size_t> onto;
                for (auto& [b, r] : ranks) onto[{b.maslov + f.shift.maslov, b.alexander + f.shift.alexander}] += r;
                for (auto& [b, r] : rs.dims().ranks) CHECK(onto[b] == static_cast<std::size_t>(r));
            }
            CHECK(f.shift == Bigrading{0, 0});
        }
    }
}

TEST_CASE("unknot stabilized: the (0,0) class stays nonzero at (0,0)") {
    auto u = builtin_library("unknot2");
    Transporter tr;
    for (const auto& m : legal_moves(u)) {
        if (m.kind != GridMove::Kind::Stabilization) continue;
        auto c = tr.class_of_state(u, {0, 1});
        REQUIRE(c.bigrading == Bigrading{0, 0});
        auto d = tr.step(u, m, c);
        CHECK(d.bigrading == Bigrading{0, 0});
        CHECK_FALSE(d.is_zero());
    }
}

TEST_CASE("transport: empty script, round trips") {
    std::mt19937 rng(71);
    Transporter tr({}, true);
    for (const auto& name : {"trefoil_rh", "figure8", "E(1,1)"}) {
        auto g = builtin_library(name);
        auto theta = tr.class_of_state(g, legendrian_states(g).x_plus);
        MoveScript empty{g, {}};
        CHECK(tr.transport(empty, theta).coords == theta.coords);

        MoveScript s{g, {}};
        auto cur = g;
        for (int k = 0; k < 5; ++k) {
            std::vector<GridMove> ok;
            for (const auto& m : legal_moves(cur))
                if (m.kind != GridMove::Kind::Stabilization || cur.n() < 7) ok.push_back(m);
            auto m = ok[rng() % ok.size()];
            s.moves.push_back(m);
            cur = apply_move(cur, m);
        }
        s.moves.push_back(GridMove::rotation());
        s.moves.push_back(GridMove::cycle_columns(1));
        auto there = tr.transport(s, theta);
        auto back = tr.transport(s.reversed(), there);
        CHECK(back.coords == theta.coords);

        // the whole slice, not just theta
        auto h = tr.homology(g, theta.bigrading.alexander);
        const int d = h.homology->dim(theta.bigrading);
        for (int k = 0; k < d; ++k) {
            auto c = h.homology->make_class(theta.bigrading, unit(d, k));
            CHECK(tr.transport(s.reversed(), tr.transport(s, c)).coords == c.coords);
        }
    }
}

TEST_CASE("commutation twice is the identity on homology") {
    Transporter tr;
    for (const auto& g : small_population()) {
        for (const auto& m : legal_moves(g)) {
            if (!is_commutation(m)) continue;
            auto h = tr.homology(g, 0);
            for (auto& [b, r] : h.homology->dims().ranks) {
                for (int k = 0; k < r; ++k) {
                    auto c = h.homology->make_class(b, unit(static_cast<int>(r), k));
                    MoveScript s{g, {m, inverse_move(g, m)}};
                    CHECK(tr.transport(s, c).coords == c.coords);
                }
            }
        }
    }
}

TEST_CASE("negative stabilization carries theta to theta") {
    Transporter tr({}, true);
    for (const auto& name : {"unknot2", "trefoil_lh", "E(1,1)"}) {
        auto g = builtin_library(name);
        auto theta = tr.class_of_state(g, legendrian_states(g).x_plus);
        for (const auto& m : legal_moves(g)) {
            if (m.kind != GridMove::Kind::Stabilization) continue;
            auto cls = classify_stabilization(g, m);
            if (cls != StabilizationClass::NegativeStab && cls != StabilizationClass::LegendrianIsotopy) continue;
            CAPTURE(m.to_string());
            auto h = apply_move(g, m);
            auto moved = tr.step(g, m, theta);
            auto own = tr.class_of_state(h, legendrian_states(h).x_plus);
            CHECK(moved.bigrading == own.bigrading);
            CHECK(moved.coords == own.coords);
        }
    }
}

TEST_CASE("rotation involution") {
    for (const auto& name : {"unknot2", "trefoil_rh", "E(1,1)"}) {
        auto g = builtin_library(name);
        auto [r, f] = grid_symmetry_involution(g);
        CHECK(r.same_markers(rotate180(g)));
        auto [rr, f2] = grid_symmetry_involution(r);
        CHECK(rr.same_markers(g));
        for (auto& [b, blk] : f.blocks) {
            Bigrading tb{b.maslov + f.shift.maslov, b.alexander + f.shift.alexander};
            REQUIRE(f2.blocks.count(tb));
            CHECK(f2.blocks.at(tb) * blk == SparseBoolMatrix::identity(blk.cols()));
        }
    }
    auto u = builtin_library("unknot2");
    CHECK(grid_symmetry_involution(u).first.same_markers(u));
}

TEST_CASE("orbit counting") {
    HomologyMap id{{2, 1}, {2, 1}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    HomologyClass a{{2, 1}, {}, {1, 0, 0}}, b{{2, 1}, {}, {0, 1, 0}}, c{{2, 1}, {}, {0, 0, 1}};
    CHECK(count_orbits({a}, id) == 1);
    HomologyMap swap{{2, 1}, {2, 1}, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
    CHECK(count_orbits({a, b, c}, swap) == 2);
    CHECK(count_orbits({a, b, c}, id) == 3);
    CHECK(count_orbits({a, a}, id) == 1);
    HomologyClass wrong{{1, 0}, {}, {1, 0, 0}};
    CHECK_THROWS_AS(count_orbits({a, wrong}, id), Error);
}

}  // TEST_SUITE
