#pragma once

#include <utility>

#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/laurent.hpp"

namespace gridhfk {

// Alexander polynomial from the winding-number matrix of the grid,
// det(t^W) / (1 - t)^(n-1), normalized. Uses no gradings or differentials.
Laurent grid_alexander_polynomial(const GridDiagram& g);

// Knot signature via the Goeritz matrix of a checkerboard colouring of the
// rectilinear projection and the Gordon-Litherland correction. The
// right-handed trefoil has signature -2.
int signature(const GridDiagram& g);
// Same computation with the colouring swapped; equals signature(g).
int signature_other_colouring(const GridDiagram& g);

// Ranks |a_A| at (A + sigma/2, A). Throws AsymmetricPolynomial.
BigradedDims alternating_hfk(const Laurent& delta, int sigma);

struct MinusTable {
    BigradedDims ranks;  // finite part plus the tail up to the requested depth
    int tail_depth = 0;
    Bigrading tail_step{-2, -1};
    Bigrading tail_from{0, 0};
};

// Tables for the mirror of the twist knot E_n, n odd. Throws EvenN.
std::pair<BigradedDims, MinusTable> en_tables(int n, int tail_depth = 2);
Laurent en_alexander(int n);

}  // namespace gridhfk
