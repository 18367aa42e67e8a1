#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/laurent.hpp"
#include "gridhfk/sparse.hpp"
#include "gridhfk/state.hpp"

namespace gridhfk {

struct BigradedDims {
    std::map<Bigrading, std::int64_t> ranks;  // only positive entries

    std::int64_t at(int maslov, int alexander) const;
    std::int64_t total() const;
    void add(Bigrading b, std::int64_t r);
    bool operator==(const BigradedDims&) const = default;
};

// Knot Floer symmetry: rank(M, A) == rank(M - 2A, -A).
bool is_symmetric(const BigradedDims& d);
// Sum of (-1)^M rank t^A.
Laurent euler_of(const BigradedDims& d);

// dim H(m,a) = dim ker - rank, one rank computation per slice. Throws
// InconsistentSlices when the slices do not form a complex.
BigradedDims homology_dims_by_rank(const SlicedComplex& c);

// Removes (n-1) tensor factors with generators at (0,0) and (-1,-1).
// Throws InexactFactorization.
BigradedDims divide_by_tensor_factor(const BigradedDims& tilde, int n);

struct HomologyClass {
    Bigrading bigrading;
    SparseVec cycle;                  // local state indices in the slice
    std::vector<std::uint8_t> coords;  // over the homology basis of the bigrading

    bool is_zero() const;
};

// Throws BigradingMismatch when the classes live in different bigradings.
bool is_homologous(const HomologyClass& a, const HomologyClass& b);

// Kernel of the slice boundary reduced modulo the image of the incoming
// boundary. The basis is the kernel basis in pivot order, skipping vectors
// that are dependent modulo the image. Throws NotACycle.
HomologyClass class_of(const ComplexSlice& slice, const SparseBoolMatrix& next_slice_boundary,
                       const SparseVec& cycle);

// Homology via Gaussian cancellation of the whole complex. Each cancelled
// pair (x, y) with y in dx removes x and y and adds dx - y to the boundary of
// every other z with y in dz. The surviving generators are a homology basis
// in their slice order; class coordinates come from the projection chain map
// and representatives from the inclusion chain map, both recorded during the
// cancellation.
class ReducedComplex {
public:
    explicit ReducedComplex(std::shared_ptr<const SlicedComplex> c);

    const SlicedComplex& complex() const { return *c_; }
    const BigradedDims& dims() const { return dims_; }
    int dim(Bigrading b) const;

    // Local indices of the surviving states of a slice, increasing.
    std::vector<std::uint32_t> basis(Bigrading b) const;

    // Throws NotACycle.
    HomologyClass class_of(Bigrading b, const SparseVec& cycle) const;
    HomologyClass class_of_state(const Perm& p) const;
    // A cycle representing the class with the given coordinates.
    SparseVec representative(Bigrading b, const std::vector<std::uint8_t>& coords) const;
    HomologyClass make_class(Bigrading b, const std::vector<std::uint8_t>& coords) const;
    // Boundary of a chain in slice b, as a chain in slice (b.maslov-1, b.alexander).
    SparseVec boundary(Bigrading b, const SparseVec& chain) const;

private:
    struct Record {
        std::uint32_t x, y;
        std::uint32_t a_begin, a_end;  // dx - y at cancellation time
        std::uint32_t z_begin, z_end;  // other states with y in their boundary
    };
    std::shared_ptr<const SlicedComplex> c_;
    std::vector<Bigrading> slice_of_;            // global id -> bigrading
    std::vector<std::uint32_t> local_of_;        // global id -> local index
    std::map<Bigrading, std::uint32_t> offset_;  // slice -> first global id
    std::vector<Record> records_;
    std::vector<std::uint32_t> a_pool_, z_pool_;
    std::vector<std::int32_t> cancelled_at_;     // global id -> record index, or -1
    std::map<Bigrading, std::vector<std::uint32_t>> survivors_;  // global ids
    BigradedDims dims_;

    std::uint32_t global(Bigrading b, std::uint32_t local) const { return offset_.at(b) + local; }
    std::vector<std::uint8_t> project(const std::vector<std::uint32_t>& chain_global, Bigrading b) const;
};

// Tilde homology through cancellation.
BigradedDims homology_dims(const SlicedComplex& c);

}  // namespace gridhfk
