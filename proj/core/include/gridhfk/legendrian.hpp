#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"

namespace gridhfk {

// maslov(x+) - 2 alexander(x+) for every grid under the conventions used here.
inline constexpr int kLegendrianMaslovOffset = 0;

// x+ occupies the upper-right corner of every X cell, x- the lower-left one.
struct LegendrianStates {
    Perm x_plus;
    Perm x_minus;
};

// Throws NotACycle if either state has a nonzero tilde differential.
LegendrianStates legendrian_states(const GridDiagram& g);

struct GradingIdentity {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool ok = false;
};

struct GradingReport {
    ClassicalInvariants classical;
    Bigrading plus, minus;
    std::vector<GradingIdentity> identities;
    bool ok() const;
};

GradingReport check_grading_theorem(const GridDiagram& g);
// Same report, throwing GradingMismatch when an identity fails.
GradingReport require_grading_theorem(const GridDiagram& g);

// A grid together with its (possibly Alexander-restricted) complex and
// homology.
struct GridHomology {
    std::shared_ptr<const SlicedComplex> complex;
    std::shared_ptr<const ReducedComplex> homology;

    const GridDiagram& grid() const { return complex->grid(); }
};

GridHomology compute_homology(const GridDiagram& g, const BuildOptions& opt = {});

struct LegendrianInvariantPair {
    Perm x_plus, x_minus;
    HomologyClass class_plus, class_minus;
};

// The classes are computed in a complex restricted to the Alexander gradings
// of x+ and x-, unless h already covers them.
LegendrianInvariantPair legendrian_invariants(const GridHomology& h);
LegendrianInvariantPair legendrian_invariants(const GridDiagram& g, const BuildOptions& opt = {});

// The class of x+, which is the invariant of the transverse push-off.
HomologyClass transverse_invariant(const GridDiagram& g, const BuildOptions& opt = {});
bool check_nonvanishing(const GridDiagram& g, const BuildOptions& opt = {});

// Whether x+ survives in the homology of the complex with every V set to 1,
// which detects x+ as a non-torsion class of the minus flavour. The hat class
// can vanish while this holds. Enumerates all n! states.
bool minus_nonvanishing(const GridDiagram& g, int max_n = 8);

}  // namespace gridhfk
