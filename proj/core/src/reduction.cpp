#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "gridhfk/error.hpp"
#include "gridhfk/homology.hpp"

namespace gridhfk {

namespace {

void toggle(SparseVec& v, std::uint32_t k) {
    const auto it = std::lower_bound(v.begin(), v.end(), k);
    if (it != v.end() && *it == k) v.erase(it);
    else v.insert(it, k);
}

void erase_one(SparseVec& v, std::uint32_t k) {
    const auto it = std::lower_bound(v.begin(), v.end(), k);
    if (it != v.end() && *it == k) v.erase(it);
}

}  // namespace

ReducedComplex::ReducedComplex(std::shared_ptr<const SlicedComplex> c) : c_(std::move(c)) {
    std::uint32_t total = 0;
    for (const auto& [b, s] : c_->slices()) {
        offset_[b] = total;
        for (std::uint32_t i = 0; i < s.states.size(); ++i) {
            slice_of_.push_back(b);
            local_of_.push_back(i);
        }
        total += static_cast<std::uint32_t>(s.states.size());
    }
    std::vector<SparseVec> out(total), in(total);
    for (const auto& [b, s] : c_->slices()) {
        if (s.boundary_out.cols() == 0) continue;
        const auto lo = offset_.find({b.maslov - 1, b.alexander});
        const std::uint32_t base = offset_.at(b);
        for (std::uint32_t j = 0; j < s.states.size(); ++j) {
            const auto& col = s.boundary_out.column(j);
            if (col.empty()) continue;
            if (lo == offset_.end()) throw Error(ErrorCode::InconsistentSlices, "boundary into a missing slice");
            auto& o = out[base + j];
            o.reserve(col.size());
            for (auto r : col) o.push_back(lo->second + r);
        }
    }
    for (std::uint32_t x = 0; x < total; ++x)
        for (auto y : out[x]) in[y].push_back(x);

    cancelled_at_.assign(total, -1);
    for (std::uint32_t x = 0; x < total; ++x) {
        if (cancelled_at_[x] >= 0 || out[x].empty()) continue;
        std::uint32_t y = out[x].front();
        for (auto cand : out[x])
            if (in[cand].size() < in[y].size()) y = cand;
        Record r;
        r.x = x;
        r.y = y;
        r.a_begin = static_cast<std::uint32_t>(a_pool_.size());
        for (auto w : out[x])
            if (w != y) a_pool_.push_back(w);
        r.a_end = static_cast<std::uint32_t>(a_pool_.size());
        r.z_begin = static_cast<std::uint32_t>(z_pool_.size());
        for (auto z : in[y])
            if (z != x) z_pool_.push_back(z);
        r.z_end = static_cast<std::uint32_t>(z_pool_.size());
        const auto idx = static_cast<std::int32_t>(records_.size());
        records_.push_back(r);
        cancelled_at_[x] = idx;
        cancelled_at_[y] = idx;

        const SparseVec dx = out[x];
        for (std::uint32_t k = r.z_begin; k < r.z_end; ++k) {
            const auto z = z_pool_[k];
            out[z] = sparse_sum(out[z], dx);
            for (auto w : dx) toggle(in[w], z);
        }
        // drop x and y from the complex
        for (auto w : dx) erase_one(in[w], x);
        for (auto u : in[x]) erase_one(out[u], x);
        for (auto w : out[y]) erase_one(in[w], y);
        for (auto u : in[y]) erase_one(out[u], y);
        SparseVec().swap(out[x]);
        SparseVec().swap(in[x]);
        SparseVec().swap(out[y]);
        SparseVec().swap(in[y]);
    }
    for (std::uint32_t x = 0; x < total; ++x) {
        if (cancelled_at_[x] >= 0) continue;
        survivors_[slice_of_[x]].push_back(x);
        dims_.add(slice_of_[x], 1);
    }
}

int ReducedComplex::dim(Bigrading b) const { return static_cast<int>(dims_.at(b.maslov, b.alexander)); }

std::vector<std::uint32_t> ReducedComplex::basis(Bigrading b) const {
    std::vector<std::uint32_t> v;
    const auto it = survivors_.find(b);
    if (it == survivors_.end()) return v;
    for (auto g : it->second) v.push_back(local_of_[g]);
    return v;
}

std::vector<std::uint8_t> ReducedComplex::project(const std::vector<std::uint32_t>& chain_global, Bigrading b) const {
    std::set<std::uint32_t> w;
    for (auto g : chain_global) {
        if (!w.insert(g).second) w.erase(g);
    }
    std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> pending;
    for (auto g : w)
        if (cancelled_at_[g] >= 0) pending.push(cancelled_at_[g]);
    std::int32_t last = -1;
    while (!pending.empty()) {
        const auto k = pending.top();
        pending.pop();
        if (k == last) continue;
        last = k;
        const Record& r = records_[static_cast<std::size_t>(k)];
        const bool has_y = w.erase(r.y) > 0;
        w.erase(r.x);
        if (!has_y) continue;
        for (std::uint32_t i = r.a_begin; i < r.a_end; ++i) {
            const auto a = a_pool_[i];
            if (!w.insert(a).second) w.erase(a);
            else if (cancelled_at_[a] >= 0) pending.push(cancelled_at_[a]);
        }
    }
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(dim(b)), 0);
    const auto it = survivors_.find(b);
    for (auto g : w) {
        if (it == survivors_.end()) break;
        const auto pos = std::lower_bound(it->second.begin(), it->second.end(), g);
        if (pos != it->second.end() && *pos == g) coords[static_cast<std::size_t>(pos - it->second.begin())] = 1;
    }
    return coords;
}

HomologyClass ReducedComplex::class_of(Bigrading b, const SparseVec& cycle) const {
    const ComplexSlice* s = c_->slice(b);
    SparseVec v = cycle;
    canonicalize(v);
    HomologyClass out;
    out.bigrading = b;
    out.cycle = v;
    if (!s) {
        if (!v.empty()) throw Error(ErrorCode::NotACycle, "chain in an empty bigrading");
        return out;
    }
    if (!s->boundary_out.apply(v).empty()) throw Error(ErrorCode::NotACycle, "chain has nonzero boundary");
    std::vector<std::uint32_t> g;
    for (auto l : v) g.push_back(global(b, l));
    out.coords = project(g, b);
    return out;
}

HomologyClass ReducedComplex::class_of_state(const Perm& p) const {
    const auto loc = c_->locate(p);
    if (!loc) throw Error(ErrorCode::NotInImage, "state is outside the computed slices");
    return class_of(loc->first, {loc->second});
}

SparseVec ReducedComplex::representative(Bigrading b, const std::vector<std::uint8_t>& coords) const {
    const auto it = survivors_.find(b);
    std::set<std::uint32_t> w;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i]) w.insert(it->second.at(i));
    if (w.empty()) return {};
    for (auto k = records_.size(); k-- > 0;) {
        const Record& r = records_[k];
        if (slice_of_[r.x] != b) continue;
        std::size_t hits = 0;
        for (std::uint32_t i = r.z_begin; i < r.z_end; ++i) hits += w.count(z_pool_[i]);
        if (hits % 2 == 1) w.insert(r.x);
    }
    SparseVec v;
    for (auto g : w) v.push_back(local_of_[g]);
    std::sort(v.begin(), v.end());
    return v;
}

HomologyClass ReducedComplex::make_class(Bigrading b, const std::vector<std::uint8_t>& coords) const {
    HomologyClass c;
    c.bigrading = b;
    c.cycle = representative(b, coords);
    c.coords = coords;
    return c;
}

SparseVec ReducedComplex::boundary(Bigrading b, const SparseVec& chain) const {
    const ComplexSlice* s = c_->slice(b);
    if (!s) return {};
    return s->boundary_out.apply(chain);
}

}  // namespace gridhfk
