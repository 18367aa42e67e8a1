#include "gridhfk/homology.hpp"

#include <algorithm>
#include <set>

#include "gridhfk/error.hpp"

namespace gridhfk {

std::int64_t BigradedDims::at(int maslov, int alexander) const {
    const auto it = ranks.find({maslov, alexander});
    return it == ranks.end() ? 0 : it->second;
}

std::int64_t BigradedDims::total() const {
    std::int64_t s = 0;
    for (const auto& [b, r] : ranks) s += r;
    return s;
}

void BigradedDims::add(Bigrading b, std::int64_t r) {
    if (r == 0) return;
    auto& v = ranks[b];
    v += r;
    if (v == 0) ranks.erase(b);
}

bool is_symmetric(const BigradedDims& d) {
    for (const auto& [b, r] : d.ranks)
        if (d.at(b.maslov - 2 * b.alexander, -b.alexander) != r) return false;
    return true;
}

Laurent euler_of(const BigradedDims& d) {
    Laurent p;
    for (const auto& [b, r] : d.ranks) p.add(b.alexander, b.maslov % 2 == 0 ? r : -r);
    return p;
}

BigradedDims homology_dims_by_rank(const SlicedComplex& c) {
    check_d_squared(c);
    BigradedDims out;
    for (const auto& [b, s] : c.slices()) {
        const std::int64_t ker = static_cast<std::int64_t>(s.states.size() - rank(s.boundary_out));
        const ComplexSlice* up = c.slice({b.maslov + 1, b.alexander});
        const std::int64_t im = up ? static_cast<std::int64_t>(rank(up->boundary_out)) : 0;
        out.add(b, ker - im);
    }
    return out;
}

BigradedDims divide_by_tensor_factor(const BigradedDims& tilde, int n) {
    BigradedDims cur = tilde;
    for (int k = 0; k + 1 < n; ++k) {
        // cur = h + h shifted by (-1, -1); peel from the top of each diagonal
        BigradedDims h;
        std::set<Bigrading, std::greater<>> todo;
        for (const auto& [b, r] : cur.ranks) todo.insert(b);
        while (!todo.empty()) {
            const Bigrading b = *todo.begin();
            todo.erase(todo.begin());
            const std::int64_t r = cur.at(b.maslov, b.alexander) - h.at(b.maslov + 1, b.alexander + 1);
            if (r < 0)
                throw Error(ErrorCode::InexactFactorization, "tilde homology is not a multiple of the tensor factor");
            if (r > 0) {
                h.add(b, r);
                todo.insert({b.maslov - 1, b.alexander - 1});
            }
        }
        cur = h;
    }
    return cur;
}

bool HomologyClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::uint8_t v) { return v == 0; });
}

bool is_homologous(const HomologyClass& a, const HomologyClass& b) {
    if (a.bigrading != b.bigrading)
        throw Error(ErrorCode::BigradingMismatch, "classes in (" + std::to_string(a.bigrading.maslov) + "," +
                                                      std::to_string(a.bigrading.alexander) + ") and (" +
                                                      std::to_string(b.bigrading.maslov) + "," +
                                                      std::to_string(b.bigrading.alexander) + ")");
    return a.coords == b.coords;
}

namespace {

// Echelon form over GF(2) where each stored vector carries a tag recording
// which original generators it was built from.
class TaggedEchelon {
public:
    // Reduces v in place, accumulating the tags of the vectors used.
    void reduce(SparseVec& v, SparseVec& tag) const {
        std::size_t pos = 0;
        while (pos < v.size()) {
            const auto it = rows_.find(v[pos]);
            if (it == rows_.end()) {
                ++pos;
                continue;
            }
            v = sparse_sum(v, it->second.first);
            tag = sparse_sum(tag, it->second.second);
        }
    }
    // Stores an already reduced nonzero vector.
    void add(SparseVec v, SparseVec tag) {
        const auto p = v.front();
        rows_.emplace(p, std::make_pair(std::move(v), std::move(tag)));
    }

private:
    std::map<std::uint32_t, std::pair<SparseVec, SparseVec>> rows_;
};

}  // namespace

HomologyClass class_of(const ComplexSlice& slice, const SparseBoolMatrix& next_slice_boundary, const SparseVec& cycle) {
    if (!slice.boundary_out.apply(cycle).empty())
        throw Error(ErrorCode::NotACycle, "chain has nonzero boundary");
    // kernel basis of the outgoing boundary
    std::vector<SparseVec> kernel;
    {
        TaggedEchelon e;
        for (std::uint32_t j = 0; j < slice.states.size(); ++j) {
            SparseVec v = slice.boundary_out.column(j), tag = {j};
            e.reduce(v, tag);
            if (v.empty()) kernel.push_back(tag);
            else e.add(std::move(v), std::move(tag));
        }
    }
    TaggedEchelon e;
    for (std::size_t j = 0; j < next_slice_boundary.cols(); ++j) {
        SparseVec v = next_slice_boundary.column(j), tag;
        e.reduce(v, tag);
        if (!v.empty()) e.add(std::move(v), {});
    }
    std::uint32_t h = 0;
    for (auto& k : kernel) {
        SparseVec v = k, tag;
        e.reduce(v, tag);
        if (v.empty()) continue;
        tag = sparse_sum(tag, {h});
        e.add(std::move(v), std::move(tag));
        ++h;
    }
    SparseVec v = cycle, tag;
    canonicalize(v);
    e.reduce(v, tag);
    HomologyClass c;
    c.bigrading = slice.bigrading;
    c.cycle = cycle;
    c.coords.assign(h, 0);
    for (auto t : tag) c.coords[t] = 1;
    return c;
}

BigradedDims homology_dims(const SlicedComplex& c) {
    std::shared_ptr<const SlicedComplex> view(&c, [](const SlicedComplex*) {});
    return ReducedComplex(view).dims();
}

}  // namespace gridhfk
