#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gridhfk {

// Sorted list of indices of the nonzero entries of a vector over GF(2).
using SparseVec = std::vector<std::uint32_t>;

// a += b over GF(2)
void add_into(SparseVec& a, const SparseVec& b);
SparseVec sparse_sum(const SparseVec& a, const SparseVec& b);
// Sorts and cancels repeated indices in pairs.
void canonicalize(SparseVec& v);

class SparseBoolMatrix {
public:
    SparseBoolMatrix() = default;
    SparseBoolMatrix(std::size_t rows, std::size_t cols);
    // Duplicate coordinates cancel in pairs.
    static SparseBoolMatrix from_entries(std::size_t rows, std::size_t cols,
                                         std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);
    static SparseBoolMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    std::size_t nnz() const;
    bool is_zero() const { return nnz() == 0; }

    const SparseVec& column(std::size_t j) const { return cols_[j]; }
    // Replaces column j; v must be sorted with entries < rows().
    void set_column(std::size_t j, SparseVec v);
    bool get(std::size_t i, std::size_t j) const;

    SparseVec apply(const SparseVec& v) const;
    SparseBoolMatrix operator*(const SparseBoolMatrix& o) const;
    SparseBoolMatrix operator+(const SparseBoolMatrix& o) const;
    SparseBoolMatrix transposed() const;
    bool operator==(const SparseBoolMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<SparseVec> cols_;
};

// Rank over GF(2). Sparse column elimination, columns taken in order of
// increasing weight, switching to bit-packed dense rows once the active part
// fills in.
std::size_t rank(const SparseBoolMatrix& m);

// Bit-packed dense elimination.
std::size_t rank_dense(const SparseBoolMatrix& m);

// Row-reduced basis of a subspace of GF(2)^dim, keyed by pivot = lowest
// index. reduce() gives the canonical representative of v modulo the span.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t dim = 0) : pivot_of_(dim, -1) {}
    // Returns true when v was independent of the current span.
    bool insert(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    std::size_t size() const { return basis_.size(); }
    const std::vector<SparseVec>& basis() const { return basis_; }

private:
    std::vector<SparseVec> basis_;
    std::vector<int> pivot_of_;
};

// Dense solve over GF(2): finds x with A x = b, where A is given by columns.
// Returns false when b is not in the column span. When the solution is not
// unique the free coordinates are set to zero.
bool solve_dense(const std::vector<std::vector<std::uint8_t>>& columns,
                 const std::vector<std::uint8_t>& b, std::vector<std::uint8_t>& x,
                 std::size_t* kernel_dim = nullptr);

}  // namespace gridhfk
