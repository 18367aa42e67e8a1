#include "gridhfk/complex.hpp"

#include <algorithm>

#include "gridhfk/error.hpp"
#include "parallel.hpp"

namespace gridhfk {

namespace {

constexpr std::uint32_t kNoSlot = ~std::uint32_t(0);
constexpr std::uint16_t kNoSlice = 0xFFFF;
// Above this many states the index is a map over the kept states only.
constexpr std::uint64_t kDenseIndexLimit = 4'000'000;

// Lookup of slice ordinals by bigrading over the bounded grading range.
class GradingTable {
public:
    explicit GradingTable(int n) : off_(n * n + 2), w_(2 * off_ + 1), slot_(static_cast<std::size_t>(w_) * w_, -1) {}
    int& at(Bigrading b) { return slot_[static_cast<std::size_t>(b.maslov + off_) * w_ + (b.alexander + off_)]; }

private:
    int off_, w_;
    std::vector<int> slot_;
};

}  // namespace

RectangleCounter::RectangleCounter(const GridDiagram& g) : n_(g.n()), xs_(g.xs()), os_(g.os()) {}

std::vector<Perm> differential_tilde(const GridDiagram& g, const Perm& x) {
    RectangleCounter rc(g);
    std::vector<Perm> out;
    rc.for_each(x.data(), [&](int i, int j) {
        Perm y = x;
        std::swap(y[i], y[j]);
        out.push_back(std::move(y));
    });
    std::sort(out.begin(), out.end());
    std::vector<Perm> kept;
    for (std::size_t i = 0; i < out.size();) {
        std::size_t k = i;
        while (k < out.size() && out[k] == out[i]) ++k;
        if ((k - i) % 2 == 1) kept.push_back(out[i]);
        i = k;
    }
    return kept;
}

const ComplexSlice* SlicedComplex::slice(Bigrading b) const {
    const auto it = slices_.find(b);
    return it == slices_.end() ? nullptr : &it->second;
}

std::optional<std::pair<Bigrading, std::uint32_t>> SlicedComplex::locate(StateKey key) const {
    if (!dense_slot_.empty()) {
        if (key >= dense_slot_.size() || dense_slot_[key] == kNoSlot) return std::nullopt;
        return std::make_pair(slice_order_[dense_slice_[key]], dense_slot_[key]);
    }
    const auto it = sparse_index_.find(key);
    if (it == sparse_index_.end()) return std::nullopt;
    return it->second;
}

void SlicedComplex::build_index() {
    const int n = grid_.n();
    total_ = 0;
    slice_order_.clear();
    sparse_index_.clear();
    dense_slot_.clear();
    dense_slice_.clear();
    const std::uint64_t all = factorial(n);
    const bool dense = all <= kDenseIndexLimit;
    if (dense) {
        dense_slot_.assign(all, kNoSlot);
        dense_slice_.assign(all, kNoSlice);
    }
    for (const auto& [b, s] : slices_) {
        const auto ord = static_cast<std::uint16_t>(slice_order_.size());
        slice_order_.push_back(b);
        for (std::uint32_t i = 0; i < s.states.size(); ++i) {
            const StateKey k = s.states[i];
            if (dense) {
                dense_slot_[k] = i;
                dense_slice_[k] = ord;
            } else {
                sparse_index_.emplace(k, std::make_pair(b, i));
            }
        }
        total_ += s.states.size();
    }
}

SlicedComplex build_slices(const GridDiagram& g, const BuildOptions& opt) {
    check_size(g, opt.max_n);
    const int n = g.n();
    const std::uint64_t all = factorial(n);
    const std::uint64_t index_bytes = all <= kDenseIndexLimit ? all * 6 : 0;
    const std::uint64_t per_state = 8 + 8 + 4 * static_cast<std::uint64_t>(n);
    auto over = [&](std::uint64_t bytes) {
        if (bytes > opt.memory_budget_bytes)
            throw Error(ErrorCode::MemoryBudgetExceeded, "estimated " + std::to_string(bytes) + " bytes exceeds the budget of " +
                                                             std::to_string(opt.memory_budget_bytes));
    };
    if (opt.alexander.empty()) over(index_bytes + all * per_state);
    else over(index_bytes);

    SlicedComplex c;
    c.grid_ = g;
    c.filter_ = opt.alexander;
    GradingContext ctx(g);
    GradingTable table(n);
    std::vector<ComplexSlice*> by_ord;
    std::uint64_t key = 0, kept = 0;
    enumerate_states(n, [&](const Perm& p) {
        const Bigrading b = ctx(p.data());
        if (c.keeps_alexander(b.alexander)) {
            int& ord = table.at(b);
            if (ord < 0) {
                ord = static_cast<int>(by_ord.size());
                auto& s = c.slices_[b];
                s.bigrading = b;
                by_ord.push_back(&s);
            }
            by_ord[static_cast<std::size_t>(ord)]->states.push_back(key);
            if ((++kept & 0xFFFF) == 0) over(index_bytes + kept * per_state);
        }
        ++key;
    });
    over(index_bytes + kept * per_state);
    c.build_index();

    RectangleCounter rc(g);
    for (auto& [b, s] : c.slices_) {
        const ComplexSlice* lower = c.slice({b.maslov - 1, b.alexander});
        const std::size_t rows = lower ? lower->states.size() : 0;
        SparseBoolMatrix d(rows, s.states.size());
        const Bigrading target{b.maslov - 1, b.alexander};
        detail::parallel_for(s.states.size(), opt.threads, [&](std::size_t j) {
            Perm x = perm_unrank(s.states[j], n);
            SparseVec col;
            rc.for_each(x.data(), [&](int i1, int i2) {
                std::swap(x[i1], x[i2]);
                const auto loc = c.locate(perm_rank(x));
                std::swap(x[i1], x[i2]);
                if (!loc || loc->first != target)
                    throw Error(ErrorCode::InconsistentSlices, "rectangle leaves its grading");
                col.push_back(loc->second);
            });
            canonicalize(col);
            d.set_column(j, std::move(col));
        });
        s.boundary_out = std::move(d);
    }
    return c;
}

SlicedComplex assemble_slices(const GridDiagram& g, std::map<Bigrading, ComplexSlice> s, std::set<int> filter) {
    SlicedComplex c;
    c.grid_ = g;
    c.slices_ = std::move(s);
    c.filter_ = std::move(filter);
    c.build_index();
    return c;
}

void check_d_squared(const SlicedComplex& c) {
    for (const auto& [b, s] : c.slices()) {
        const ComplexSlice* lower = c.slice({b.maslov - 1, b.alexander});
        const std::size_t rows = lower ? lower->states.size() : 0;
        if (s.boundary_out.rows() != rows || s.boundary_out.cols() != s.states.size())
            throw Error(ErrorCode::InconsistentSlices, "boundary shape mismatch");
        if (lower && lower->boundary_out.cols() > 0 && !(lower->boundary_out * s.boundary_out).is_zero())
            throw Error(ErrorCode::InconsistentSlices, "d^2 does not vanish");
    }
}

Laurent raw_euler_characteristic(const GridDiagram& g, int max_n) {
    check_size(g, max_n);
    GradingContext ctx(g);
    std::map<int, std::int64_t> acc;
    enumerate_states(g.n(), [&](const Perm& p) {
        const Bigrading b = ctx(p.data());
        acc[b.alexander] += (b.maslov % 2 == 0) ? 1 : -1;
    });
    return Laurent(acc);
}

Laurent euler_characteristic(const GridDiagram& g, int max_n) {
    Laurent chi = raw_euler_characteristic(g, max_n);
    const Laurent factor = Laurent({{0, 1}, {-1, -1}});
    for (int i = 0; i + 1 < g.n(); ++i) chi = chi.divide_exact(factor);
    return chi.normalized_alexander();
}

}  // namespace gridhfk
