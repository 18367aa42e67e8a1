#pragma once

#include <cstdint>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

// perm[c] is the row of the state point on vertical line c.
using Perm = std::vector<int>;

// Rank of a permutation in lexicographic order; the compact state key.
using StateKey = std::uint64_t;

StateKey perm_rank(const int* perm, int n);
inline StateKey perm_rank(const Perm& p) { return perm_rank(p.data(), static_cast<int>(p.size())); }
Perm perm_unrank(StateKey key, int n);
std::uint64_t factorial(int n);
bool is_permutation(const Perm& p);

struct Bigrading {
    int maslov = 0;
    int alexander = 0;
    auto operator<=>(const Bigrading&) const = default;
};

// Precomputed marker tables giving both gradings of a state in O(n^2).
class GradingContext {
public:
    explicit GradingContext(const GridDiagram& g);
    Bigrading operator()(const int* perm) const;
    Bigrading operator()(const Perm& p) const { return (*this)(p.data()); }
    int maslov_o(const int* perm) const;
    int maslov_x(const int* perm) const;

private:
    int n_;
    int oo_, xx_;
    // ge_after[m][i*n+r] = #{c >= i : marker_m[c] >= r}; lt_before[m][j*n+r] = #{c < j : marker_m[c] < r}
    std::vector<int> ge_after_[2], lt_before_[2];
    int mixed(const int* perm, int which) const;
};

Bigrading bigrading(const GridDiagram& g, const Perm& x);

// Calls f(perm) for all n! states in lexicographic order; the key of the k-th
// call is k.
template <class F>
void enumerate_states(int n, F&& f);

// Throws SizeBoundExceeded when n > max_n.
void check_size(const GridDiagram& g, int max_n);

}  // namespace gridhfk

#include <algorithm>
#include <numeric>

namespace gridhfk {

template <class F>
void enumerate_states(int n, F&& f) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        f(static_cast<const Perm&>(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace gridhfk
