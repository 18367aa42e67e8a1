#include "gridhfk/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace gridhfk {

void add_into(SparseVec& a, const SparseVec& b) { a = sparse_sum(a, b); }

SparseVec sparse_sum(const SparseVec& a, const SparseVec& b) {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) out.push_back(a[i++]);
        else if (b[j] < a[i]) out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

void canonicalize(SparseVec& v) {
    std::sort(v.begin(), v.end());
    SparseVec out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size();) {
        std::size_t k = i;
        while (k < v.size() && v[k] == v[i]) ++k;
        if ((k - i) % 2 == 1) out.push_back(v[i]);
        i = k;
    }
    v.swap(out);
}

SparseBoolMatrix::SparseBoolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseBoolMatrix SparseBoolMatrix::from_entries(std::size_t rows, std::size_t cols,
                                                std::vector<std::pair<std::uint32_t, std::uint32_t>> entries) {
    SparseBoolMatrix m(rows, cols);
    for (const auto& [i, j] : entries) m.cols_[j].push_back(i);
    for (auto& c : m.cols_) canonicalize(c);
    return m;
}

SparseBoolMatrix SparseBoolMatrix::identity(std::size_t n) {
    SparseBoolMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.cols_[j] = {static_cast<std::uint32_t>(j)};
    return m;
}

std::size_t SparseBoolMatrix::nnz() const {
    std::size_t s = 0;
    for (const auto& c : cols_) s += c.size();
    return s;
}

void SparseBoolMatrix::set_column(std::size_t j, SparseVec v) { cols_[j] = std::move(v); }

bool SparseBoolMatrix::get(std::size_t i, std::size_t j) const {
    const auto& c = cols_[j];
    return std::binary_search(c.begin(), c.end(), static_cast<std::uint32_t>(i));
}

SparseVec SparseBoolMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (auto j : v) out.insert(out.end(), cols_[j].begin(), cols_[j].end());
    canonicalize(out);
    return out;
}

SparseBoolMatrix SparseBoolMatrix::operator*(const SparseBoolMatrix& o) const {
    SparseBoolMatrix m(rows_, o.cols());
    for (std::size_t j = 0; j < o.cols(); ++j) m.cols_[j] = apply(o.cols_[j]);
    return m;
}

SparseBoolMatrix SparseBoolMatrix::operator+(const SparseBoolMatrix& o) const {
    SparseBoolMatrix m(rows_, cols());
    for (std::size_t j = 0; j < cols(); ++j) m.cols_[j] = sparse_sum(cols_[j], o.cols_[j]);
    return m;
}

SparseBoolMatrix SparseBoolMatrix::transposed() const {
    SparseBoolMatrix t(cols(), rows_);
    for (std::size_t j = 0; j < cols(); ++j)
        for (auto i : cols_[j]) t.cols_[i].push_back(static_cast<std::uint32_t>(j));
    return t;
}

std::size_t rank_dense(const SparseBoolMatrix& m) {
    const std::size_t words = (m.rows() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots(m.rows());
    std::vector<std::uint64_t> v(words);
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::fill(v.begin(), v.end(), 0);
        for (auto i : m.column(j)) v[i / 64] |= std::uint64_t(1) << (i % 64);
        for (std::size_t w = 0; w < words; ++w) {
            while (v[w] != 0) {
                const std::size_t bit = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
                auto& p = pivots[bit];
                if (p.empty()) {
                    p = v;
                    ++r;
                    goto next;
                }
                for (std::size_t k = w; k < words; ++k) v[k] ^= p[k];
            }
        }
    next:;
    }
    return r;
}

std::size_t rank(const SparseBoolMatrix& m) {
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.column(a).size() < m.column(b).size(); });
    const std::size_t budget = 8 * (m.nnz() + m.rows() + m.cols()) + 1024;
    std::unordered_map<std::uint32_t, SparseVec> by_low;
    std::size_t stored = 0, r = 0;
    for (auto j : order) {
        SparseVec v = m.column(j);
        while (!v.empty()) {
            const auto it = by_low.find(v.back());
            if (it == by_low.end()) break;
            v = sparse_sum(v, it->second);
        }
        if (v.empty()) continue;
        stored += v.size();
        if (stored > budget) return rank_dense(m);
        by_low.emplace(v.back(), std::move(v));
        ++r;
    }
    return r;
}

SparseVec SparseEchelon::reduce(SparseVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
        const auto idx = v[pos];
        const int b = idx < pivot_of_.size() ? pivot_of_[idx] : -1;
        if (b < 0) {
            ++pos;
            continue;
        }
        v = sparse_sum(v, basis_[static_cast<std::size_t>(b)]);
        // entries below idx are unchanged
    }
    return v;
}

bool SparseEchelon::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    const auto p = v.front();
    if (p >= pivot_of_.size()) pivot_of_.resize(p + 1, -1);
    for (auto& b : basis_)
        if (std::binary_search(b.begin(), b.end(), p)) b = sparse_sum(b, v);
    pivot_of_[p] = static_cast<int>(basis_.size());
    basis_.push_back(std::move(v));
    return true;
}

bool solve_dense(const std::vector<std::vector<std::uint8_t>>& columns, const std::vector<std::uint8_t>& b,
                 std::vector<std::uint8_t>& x, std::size_t* kernel_dim) {
    const std::size_t m = b.size(), k = columns.size();
    // rows of the augmented matrix [A | b]
    std::vector<std::vector<std::uint8_t>> a(m, std::vector<std::uint8_t>(k + 1, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < m; ++i) a[i][j] = columns[j][i] & 1;
    for (std::size_t i = 0; i < m; ++i) a[i][k] = b[i] & 1;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t j = 0; j < k && row < m; ++j) {
        std::size_t p = row;
        while (p < m && !a[p][j]) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != row && a[i][j])
                for (std::size_t t = j; t <= k; ++t) a[i][t] ^= a[row][t];
        pivot_col.push_back(j);
        ++row;
    }
    if (kernel_dim) *kernel_dim = k - pivot_col.size();
    for (std::size_t i = row; i < m; ++i)
        if (a[i][k]) return false;
    x.assign(k, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a[i][k];
    return true;
}

}  // namespace gridhfk
