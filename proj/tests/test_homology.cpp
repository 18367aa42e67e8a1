#include <doctest.h>

#include <memory>
#include <random>

#include "gridhfk/error.hpp"
#include "gridhfk/homology.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

BigradedDims dims_of(std::initializer_list<std::tuple<int, int, int>> l) {
    BigradedDims d;
    for (auto [m, a, r] : l) d.add({m, a}, r);
    return d;
}

SparseBoolMatrix random_matrix(std::size_t rows, std::size_t cols, double density, std::mt19937& rng) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    std::bernoulli_distribution coin(density);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j)
            if (coin(rng)) e.push_back({i, j});
    return SparseBoolMatrix::from_entries(rows, cols, e);
}

std::vector<std::vector<std::uint8_t>> to_dense(const SparseBoolMatrix& m) {
    std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (auto i : m.column(j)) a[i][j] = 1;
    return a;
}

BigradedDims hat_of(const GridDiagram& g) {
    return divide_by_tensor_factor(homology_dims(build_slices(g)), g.n());
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("rank of small matrices") {
    CHECK(rank(SparseBoolMatrix(3, 3)) == 0);
    CHECK(rank(SparseBoolMatrix::identity(4)) == 4);
    // duplicates cancel
    auto m = SparseBoolMatrix::from_entries(2, 2, {{0, 0}, {0, 0}, {1, 1}});
    CHECK(m.nnz() == 1);
    CHECK(rank(m) == 1);
}

TEST_CASE("rank agrees with a naive dense eliminator") {
    std::mt19937 rng(1234);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 200, c = 1 + rng() % 200;
        double density = t % 2 ? 0.01 : 0.08;
        auto m = random_matrix(r, c, density, rng);
        auto expect = oracle::dense_rank(to_dense(m));
        CHECK(rank(m) == expect);
        CHECK(rank_dense(m) == expect);
    }
    for (std::size_t size : {200u, 500u}) {
        auto m = random_matrix(size, size, 0.01, rng);
        auto expect = oracle::dense_rank(to_dense(m));
        CHECK(rank(m) == expect);
        CHECK(rank_dense(m) == expect);
    }
    // low-rank products exercise heavy cancellation
    auto a = random_matrix(300, 20, 0.2, rng), b = random_matrix(20, 300, 0.2, rng);
    auto p = a * b;
    CHECK(rank(p) == oracle::dense_rank(to_dense(p)));
}

TEST_CASE("echelon and dense solve") {
    SparseEchelon e(6);
    CHECK(e.insert({0, 2}));
    CHECK(e.insert({2, 5}));
    CHECK_FALSE(e.insert({0, 5}));
    CHECK(e.contains({0, 5}));
    CHECK_FALSE(e.contains({1}));
    std::vector<std::vector<std::uint8_t>> cols = {{1, 0, 1}, {0, 1, 1}};
    std::vector<std::uint8_t> x;
    CHECK(solve_dense(cols, {1, 1, 0}, x));
    CHECK(x == std::vector<std::uint8_t>{1, 1});
    CHECK_FALSE(solve_dense(cols, {1, 0, 0}, x));
}

TEST_CASE("unknot homology") {
    auto c = build_slices(builtin_library("unknot2"));
    auto tilde = homology_dims(c);
    CHECK(tilde == dims_of({{0, 0, 1}, {-1, -1, 1}}));
    CHECK(homology_dims_by_rank(c) == tilde);
    CHECK(divide_by_tensor_factor(tilde, 2) == dims_of({{0, 0, 1}}));
}

TEST_CASE("hat homology of small knots matches frozen brute-force values") {
    CHECK(hat_of(builtin_library("trefoil_rh")) == dims_of({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 1}}));
    CHECK(hat_of(builtin_library("trefoil_lh")) == dims_of({{2, 1, 1}, {1, 0, 1}, {0, -1, 1}}));
    CHECK(hat_of(builtin_library("figure8")) == dims_of({{1, 1, 1}, {0, 0, 3}, {-1, -1, 1}}));
    CHECK(hat_of(builtin_library("E(1,1)")) == dims_of({{2, 1, 1}, {1, 0, 1}, {0, -1, 1}}));
    CHECK(hat_of(builtin_library("E(1,3)")) == dims_of({{2, 1, 2}, {1, 0, 3}, {0, -1, 2}}));
    CHECK(hat_of(builtin_library("E(3,1)")) == dims_of({{2, 1, 2}, {1, 0, 3}, {0, -1, 2}}));
    auto g1 = new_grid(7, {0, 6, 1, 2, 4, 3, 5}, {4, 0, 5, 6, 1, 2, 3});
    auto g2 = new_grid(7, {6, 4, 0, 3, 5, 2, 1}, {3, 0, 2, 1, 4, 6, 5});
    CHECK(hat_of(g1) == dims_of({{2, 1, 1}, {1, 0, 1}, {0, -1, 1}}));
    CHECK(hat_of(g2) == dims_of({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 1}}));
}

TEST_CASE("cancellation and rank formula agree") {
    std::mt19937 rng(77);
    for (int t = 0; t < 16; ++t) {
        auto g = oracle::random_grid(3 + t % 4, rng);
        auto c = build_slices(g);
        CHECK(homology_dims(c) == homology_dims_by_rank(c));
    }
    auto c = build_slices(builtin_library("E(1,3)"));
    CHECK(homology_dims(c) == homology_dims_by_rank(c));
}

TEST_CASE("tensor division") {
    CHECK_THROWS_AS(divide_by_tensor_factor(dims_of({{0, 0, 1}}), 2), Error);
    auto d = dims_of({{0, 0, 1}, {-1, -1, 2}, {-2, -2, 1}});
    CHECK(divide_by_tensor_factor(d, 3) == dims_of({{0, 0, 1}}));
}

TEST_CASE("symmetry and euler characteristic of hat homology") {
    for (const auto& name : library_names()) {
        auto g = builtin_library(name);
        if (g.n() > 7) continue;
        CAPTURE(name);
        auto hat = hat_of(g);
        CHECK(is_symmetric(hat));
        CHECK(euler_of(hat).normalized_alexander() == euler_characteristic(g));
    }
}

TEST_CASE("classes: matrix path and cancellation path agree") {
    std::mt19937 rng(5);
    std::vector<GridDiagram> pool = {builtin_library("trefoil_rh"), builtin_library("figure8")};
    for (int t = 0; t < 6; ++t) pool.push_back(oracle::random_grid(4 + t % 3, rng));
    for (const auto& g : pool) {
        auto c = std::make_shared<SlicedComplex>(build_slices(g));
        ReducedComplex red(c);
        for (auto& [b, s] : c->slices()) {
            const auto* up = c->slice({b.maslov + 1, b.alexander});
            SparseBoolMatrix incoming = up ? up->boundary_out : SparseBoolMatrix(s.states.size(), 0);
            // zero vector
            auto z = class_of(s, incoming, {});
            CHECK(z.is_zero());
            CHECK(red.class_of(b, {}).is_zero());
            // boundaries die in both
            for (std::size_t j = 0; j < incoming.cols() && j < 5; ++j) {
                CHECK(class_of(s, incoming, incoming.column(j)).is_zero());
                CHECK(red.class_of(b, incoming.column(j)).is_zero());
            }
            // representatives of every coordinate vector
            const int d = red.dim(b);
            CHECK(static_cast<int>(z.coords.size()) == d);
            for (int mask = 1; mask < (1 << std::min(d, 4)); ++mask) {
                std::vector<std::uint8_t> coords(d, 0);
                for (int k = 0; k < std::min(d, 4); ++k) coords[k] = (mask >> k) & 1;
                auto rep = red.representative(b, coords);
                CHECK(s.boundary_out.apply(rep).empty());
                CHECK(red.class_of(b, rep).coords == coords);
                auto m = class_of(s, incoming, rep);
                CHECK_FALSE(m.is_zero());
                // adding a boundary does not change either class
                if (incoming.cols() > 0) {
                    auto shifted = sparse_sum(rep, incoming.column(rng() % incoming.cols()));
                    CHECK(red.class_of(b, shifted).coords == coords);
                    CHECK(is_homologous(class_of(s, incoming, shifted), m));
                }
            }
        }
    }
}

TEST_CASE("non-cycles are rejected") {
    auto c = std::make_shared<SlicedComplex>(build_slices(builtin_library("trefoil_rh")));
    ReducedComplex red(c);
    for (auto& [b, s] : c->slices()) {
        for (std::uint32_t j = 0; j < s.states.size(); ++j) {
            if (s.boundary_out.column(j).empty()) continue;
            CHECK_THROWS_AS(red.class_of(b, {j}), Error);
            const auto* up = c->slice({b.maslov + 1, b.alexander});
            SparseBoolMatrix incoming = up ? up->boundary_out : SparseBoolMatrix(s.states.size(), 0);
            CHECK_THROWS_AS(class_of(s, incoming, {j}), Error);
            break;
        }
    }
}

TEST_CASE("is_homologous needs matching bigradings") {
    HomologyClass a{{0, 0}, {}, {}}, b{{1, 0}, {}, {}};
    CHECK_THROWS_AS(is_homologous(a, b), Error);
    CHECK(is_homologous(a, a));
}

}  // TEST_SUITE
