#include <benchmark/benchmark.h>

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"
#include "gridhfk/move_maps.hpp"
#include "gridhfk/scenario.hpp"

using namespace gridhfk;

namespace {

// Library grids indexed by benchmark argument: sizes 5, 6, 7, 9.
const std::vector<std::string> kGrids = {"trefoil_rh", "figure8", "E(1,3)", "E(3,3)"};

GridDiagram grid_arg(const benchmark::State& state) {
    return builtin_library(kGrids[static_cast<std::size_t>(state.range(0))]);
}

void label(benchmark::State& state, const GridDiagram& g) {
    state.SetLabel(g.name() + " n=" + std::to_string(g.n()));
}

void BM_BuildSlices(benchmark::State& state) {
    const GridDiagram g = grid_arg(state);
    for (auto _ : state) benchmark::DoNotOptimize(build_slices(g));
    label(state, g);
}
BENCHMARK(BM_BuildSlices)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Cancellation(benchmark::State& state) {
    const GridDiagram g = grid_arg(state);
    const auto c = std::make_shared<const SlicedComplex>(build_slices(g));
    for (auto _ : state) benchmark::DoNotOptimize(ReducedComplex(c).dims());
    label(state, g);
}
BENCHMARK(BM_Cancellation)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_RankPath(benchmark::State& state) {
    const GridDiagram g = grid_arg(state);
    const SlicedComplex c = build_slices(g);
    for (auto _ : state) benchmark::DoNotOptimize(homology_dims_by_rank(c));
    label(state, g);
}
BENCHMARK(BM_RankPath)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LegendrianInvariants(benchmark::State& state) {
    const GridDiagram g = grid_arg(state);
    for (auto _ : state) benchmark::DoNotOptimize(legendrian_invariants(g));
    label(state, g);
}
BENCHMARK(BM_LegendrianInvariants)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

// A fixed pseudo-random 7x7 knot grid with a legal commutation.
std::pair<GridDiagram, GridMove> commutable_grid() {
    std::mt19937 rng(7);
    std::vector<int> xs(7), os(7);
    for (;;) {
        std::iota(xs.begin(), xs.end(), 0);
        std::iota(os.begin(), os.end(), 0);
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(os.begin(), os.end(), rng);
        GridDiagram g;
        try {
            g = new_grid(7, xs, os);
        } catch (const Error&) {
            continue;
        }
        for (const auto& m : legal_moves(g))
            if (m.kind == GridMove::Kind::ColumnCommutation || m.kind == GridMove::Kind::RowCommutation) return {g, m};
    }
}

void BM_CommutationMap(benchmark::State& state) {
    const auto [g, move] = commutable_grid();
    for (auto _ : state) benchmark::DoNotOptimize(commutation_map(g, move));
    state.SetLabel(move.to_string() + " n=7");
}
BENCHMARK(BM_CommutationMap)->Unit(benchmark::kMillisecond);

void BM_TransportHeadline(benchmark::State& state) {
    const MoveScript s = bundled_script("e15_to_e33");
    for (auto _ : state) {
        Transporter tr;
        const HomologyClass c = tr.class_of_state(s.start, legendrian_states(s.start).x_plus);
        benchmark::DoNotOptimize(tr.transport(s, c));
    }
}
BENCHMARK(BM_TransportHeadline)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
