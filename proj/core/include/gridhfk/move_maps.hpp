#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"

namespace gridhfk {

// A chain map given state by state: images(x) lists target states, each
// occurrence counted once (pairs cancel).
struct ChainRule {
    GridDiagram source, target;
    Bigrading shift;  // grading(target image) - grading(source state)
    std::function<void(const Perm&, std::vector<Perm>&)> images;
    std::string description;
};

// Column commutations count empty pentagons; row commutations are the column
// rule conjugated by the transpose.
ChainRule commutation_rule(const GridDiagram& g, const GridMove& m);

// Relabeling isomorphisms for cyclic permutations and the rotation.
ChainRule relabel_rule(const GridDiagram& g, const GridMove& m);

// Every stabilization has one chain map with zero grading shift, sending c to
// c (x) top on homology. Write e for x -> x + block centre and p for its
// inverse on states through the centre; psi(m) counts rectangles whose only
// marker is the block marker m.
//   X:NW, X:SE   small -> big   e
//   O:NW, O:SE   small -> big   psi(O) e
//   O:NE, O:SW   big -> small   p
//   X:NE, X:SW   big -> small   p psi(X)
// The psi marker is the block marker sharing a column with the corner cell.
// True for the NW and SE corners, whose map runs small -> big.
bool stabilization_has_inclusion(const GridMove& stab);
// small -> big; stab must have stabilization_has_inclusion.
ChainRule stabilization_inclusion(const GridDiagram& small, const GridMove& stab);
// big -> small; the destabilization must not have an inclusion.
ChainRule destabilization_projection(const GridDiagram& big, const GridMove& destab);
// The stabilization of `small` undone by destabilizing `big` at the given cell.
GridMove stabilization_for(const GridDiagram& big, const GridMove& destab);

struct InducedMap {
    GridDiagram source, target;
    Bigrading shift;
    // Keyed by source bigrading; columns index the source slice, rows the
    // target slice at source + shift.
    std::map<Bigrading, SparseBoolMatrix> blocks;
};

InducedMap assemble_map(const ChainRule& rule, const SlicedComplex& src, const SlicedComplex& tgt);
// Checks d o Phi == Phi o d block by block. Throws ChainMapViolation.
void check_chain_map(const InducedMap& f, const SlicedComplex& src, const SlicedComplex& tgt);
// Images of all basis classes, per source bigrading: rank of the induced map.
std::map<Bigrading, std::size_t> induced_ranks(const InducedMap& f, const ReducedComplex& src,
                                               const ReducedComplex& tgt);

InducedMap commutation_map(const GridDiagram& g, const GridMove& m, const BuildOptions& opt = {});
// Chain map in whichever direction exists (see stabilization_has_inclusion).
InducedMap stabilization_map(const GridDiagram& g, const GridMove& m, const BuildOptions& opt = {});

// Linear map between homology groups in fixed bigradings, by columns.
struct HomologyMap {
    Bigrading source, target;
    std::vector<std::vector<std::uint8_t>> columns;
    std::vector<std::uint8_t> apply(const std::vector<std::uint8_t>& coords) const;
    bool is_identity() const;
};

struct MoveScript {
    GridDiagram start;
    std::vector<GridMove> moves;

    std::vector<GridDiagram> grids() const;  // start, after move 1, ...
    GridDiagram end() const;
    // Moves undoing this script, applied to end().
    MoveScript reversed() const;
};

struct TransportStep {
    GridMove move;
    std::string method;
    Bigrading bigrading;  // of the class after the step
    bool zero = false;
};

// Moves classes along scripts. Complexes are built only in the Alexander
// grading of the class and cached per grid.
class Transporter {
public:
    explicit Transporter(BuildOptions opt = {}, bool verify_chain_maps = false);

    const GridHomology& homology(const GridDiagram& g, int alexander);
    HomologyClass transport(const MoveScript& s, const HomologyClass& c,
                            std::vector<TransportStep>* log = nullptr);
    HomologyClass step(const GridDiagram& g, const GridMove& m, const HomologyClass& c,
                       TransportStep* log = nullptr);
    // The class of a state of g in g's own basis.
    HomologyClass class_of_state(const GridDiagram& g, const Perm& x);
    // Matrix of the transport map on the bigrading of the start classes.
    HomologyMap transport_map(const MoveScript& s, Bigrading b);

private:
    BuildOptions opt_;
    bool verify_;
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, GridHomology> cache_;
    std::vector<std::tuple<std::vector<int>, std::vector<int>, int>> lru_;

    HomologyClass push(const ChainRule& rule, const HomologyClass& c, int target_alexander);
    HomologyClass pull(const ChainRule& rule, const HomologyClass& c, int source_alexander);
    void verify(const ChainRule& rule, Bigrading b);
};

// Convenience wrapper over Transporter.
HomologyClass transport(const MoveScript& s, const HomologyClass& c, const BuildOptions& opt = {});

// 180 degree rotation and the relabeling of states that comes with it.
std::pair<GridDiagram, InducedMap> grid_symmetry_involution(const GridDiagram& g,
                                                            const BuildOptions& opt = {});

// Orbits of a set of classes under the group generated by an involution of
// their common homology group. Throws BigradingMismatch.
int count_orbits(const std::vector<HomologyClass>& classes, const HomologyMap& involution);

}  // namespace gridhfk
