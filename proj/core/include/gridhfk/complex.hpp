#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gridhfk/grid.hpp"
#include "gridhfk/laurent.hpp"
#include "gridhfk/sparse.hpp"
#include "gridhfk/state.hpp"

namespace gridhfk {

struct BuildOptions {
    int max_n = 12;
    std::uint64_t memory_budget_bytes = std::uint64_t(8) << 30;
    // Only states in these Alexander gradings are kept; empty means all.
    std::set<int> alexander;
    // Workers for boundary assembly; 0 means one per hardware thread. Output
    // does not depend on this.
    int threads = 1;
};

// Precomputed rectangle emptiness data for one grid.
class RectangleCounter {
public:
    explicit RectangleCounter(const GridDiagram& g);
    // Calls f(i, j) for every empty rectangle from x with lower-left corner on
    // line i and upper-right corner on line j; the target swaps x[i] and x[j].
    template <class F>
    void for_each(const int* x, F&& f) const;

private:
    int n_;
    std::vector<int> xs_, os_;
};

// Targets of the tilde differential, with pairs of rectangles to the same
// target cancelled. Sorted.
std::vector<Perm> differential_tilde(const GridDiagram& g, const Perm& x);

struct ComplexSlice {
    Bigrading bigrading;
    std::vector<StateKey> states;  // increasing
    // rows index the states of (maslov - 1, alexander)
    SparseBoolMatrix boundary_out;
};

class SlicedComplex {
public:
    const GridDiagram& grid() const { return grid_; }
    const std::map<Bigrading, ComplexSlice>& slices() const { return slices_; }
    const ComplexSlice* slice(Bigrading b) const;
    const std::set<int>& alexander_filter() const { return filter_; }
    bool keeps_alexander(int a) const { return filter_.empty() || filter_.count(a) > 0; }

    std::size_t num_states() const { return total_; }
    // Position of a state inside its slice, if the state was kept.
    std::optional<std::pair<Bigrading, std::uint32_t>> locate(StateKey key) const;
    std::optional<std::pair<Bigrading, std::uint32_t>> locate(const Perm& p) const {
        return locate(perm_rank(p));
    }

    friend SlicedComplex build_slices(const GridDiagram& g, const BuildOptions& opt);
    friend SlicedComplex assemble_slices(const GridDiagram& g, std::map<Bigrading, ComplexSlice> s,
                                         std::set<int> filter);

private:
    GridDiagram grid_;
    std::map<Bigrading, ComplexSlice> slices_;
    std::set<int> filter_;
    std::size_t total_ = 0;
    std::map<StateKey, std::pair<Bigrading, std::uint32_t>> sparse_index_;
    std::vector<std::uint32_t> dense_slot_;   // key -> local index, or ~0
    std::vector<std::uint16_t> dense_slice_;  // key -> slice ordinal
    std::vector<Bigrading> slice_order_;
    void build_index();
};

// Throws SizeBoundExceeded or MemoryBudgetExceeded.
SlicedComplex build_slices(const GridDiagram& g, const BuildOptions& opt = {});
// Wraps precomputed slices (for example from a cache file).
SlicedComplex assemble_slices(const GridDiagram& g, std::map<Bigrading, ComplexSlice> s,
                              std::set<int> filter);

// Checks that every boundary_out composed with the next one vanishes and
// that the matrix shapes line up. Throws InconsistentSlices.
void check_d_squared(const SlicedComplex& c);

// Sum over states of (-1)^maslov t^alexander, with no normalization.
Laurent raw_euler_characteristic(const GridDiagram& g, int max_n = 12);
// Raw characteristic divided by (1 - t^-1)^(n-1), then normalized.
Laurent euler_characteristic(const GridDiagram& g, int max_n = 12);

// Implementation of the rectangle scan: for a fixed left column i the
// admissible heights shrink as the rectangle widens, so one sweep per column
// suffices.
template <class F>
void RectangleCounter::for_each(const int* x, F&& f) const {
    const int n = n_;
    for (int i = 0; i < n; ++i) {
        const int base = x[i];
        int point_min = n;   // lowest relative height of a state point strictly inside
        int marker_min = n;  // lowest relative row of a marker in the columns covered
        for (int w = 1; w < n; ++w) {
            const int prev = i + w - 1 >= n ? i + w - 1 - n : i + w - 1;
            int a = xs_[prev] - base;
            if (a < 0) a += n;
            int b = os_[prev] - base;
            if (b < 0) b += n;
            if (a < marker_min) marker_min = a;
            if (b < marker_min) marker_min = b;
            if (marker_min == 0) break;
            const int j = i + w >= n ? i + w - n : i + w;
            int h = x[j] - base;
            if (h < 0) h += n;
            if (h <= marker_min && h < point_min) f(i, j);
            if (h < point_min) point_min = h;
        }
    }
}

}  // namespace gridhfk
