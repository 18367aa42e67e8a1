#include <algorithm>

#include "gridhfk/error.hpp"
#include "gridhfk/move_maps.hpp"

namespace gridhfk {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Empty pentagons for the commutation of columns c and c+1. The curve gamma
// replacing line c+1 bulges right across the arc of rows [lo, hi] holding the
// markers of column c+1 (the arc free of column c markers) and left
// elsewhere. It crosses line c+1 just above height lo, which is the fifth
// corner of every pentagon counted here. With this choice x+ maps to x+.
class ColumnPentagons {
public:
    ColumnPentagons(const GridDiagram& g, int c) : n_(g.n()), c_(c), d_((c + 1) % g.n()), xs_(g.xs()), os_(g.os()) {
        const int a = xs_[d_], b = os_[d_];
        bool free = true;
        for (int r : {xs_[c_], os_[c_]})
            if (mod(r - a, n_) <= mod(b - a, n_)) free = false;
        lo_ = free ? a : b;
        hi_ = free ? b : a;
    }

    template <class F>
    void for_each(const int* x, F&& f) const {
        const int n = n_, d = d_;
        const int rd = x[d];
        // east: bottom corner x[d] on line c+1, top corner x[j] on gamma
        {
            auto off = [&](int z) { return mod(z - rd, n); };
            int marker_min = n, point_min = n;
            for (int k = 1; k < n; ++k) {
                const int j = (d + k) % n;
                if (k >= 2) {
                    const int col = mod(j - 1, n);
                    marker_min = std::min({marker_min, off(xs_[col]), off(os_[col])});
                    if (marker_min == 0) break;
                    point_min = std::min(point_min, off(x[col]));
                }
                const int h = off(x[j]);
                if (h > marker_min || h > point_min) continue;
                if (corner_clear(off, h) && !c_marker_between(off, off(hi_), h)) f(j);
            }
        }
        // west: bottom corner x[j] on line j, top corner x[d] on line c+1;
        // columns j..c-1 and lines j+1..c lie inside, measured down from x[d]
        {
            auto down = [&](int z) { return mod(rd - z, n); };
            int marker_min = n, point_min = n;
            for (int k = 1; k < n; ++k) {
                const int j = mod(d - k, n);
                if (k >= 2) {
                    for (int z : {xs_[j], os_[j]}) marker_min = std::min(marker_min, down(z) == 0 ? n : down(z));
                    point_min = std::min(point_min, down(x[(j + 1) % n]));
                }
                const int h = down(x[j]);
                if (h >= marker_min || h > point_min) continue;
                auto off = [&](int z) { return mod(z - x[j], n); };
                if (corner_clear(off, h) && !c_marker_between(off, off(lo_), h)) f(j);
            }
        }
    }

    int beta() const { return d_; }

private:
    // the crossing just above lo lies inside, and the arc [lo, hi] does not
    // start below the bottom corner
    template <class Off>
    bool corner_clear(Off off, int h) const {
        return off(lo_) < h && off(hi_) > off(lo_);
    }
    template <class Off>
    bool c_marker_between(Off off, int from, int h) const {
        for (int p : {xs_[c_], os_[c_]})
            if (off(p) > from && off(p) < h) return true;
        return false;
    }

    int n_, c_, d_;
    std::vector<int> xs_, os_;
    int lo_ = 0, hi_ = 0;
};

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return q;
}

}  // namespace

ChainRule commutation_rule(const GridDiagram& g, const GridMove& m) {
    if ((m.kind != GridMove::Kind::ColumnCommutation && m.kind != GridMove::Kind::RowCommutation) || !is_legal(g, m))
        throw Error(ErrorCode::IllegalMove, m.to_string() + " is not a legal commutation");
    ChainRule rule;
    rule.source = g;
    rule.target = apply_move(g, m);
    rule.shift = {0, 0};
    rule.description = "pentagons for " + m.to_string();
    if (m.kind == GridMove::Kind::ColumnCommutation) {
        auto pent = std::make_shared<ColumnPentagons>(g, m.index);
        rule.images = [pent](const Perm& x, std::vector<Perm>& out) {
            const int b = pent->beta();
            pent->for_each(x.data(), [&](int v) {
                Perm y = x;
                std::swap(y[b], y[v]);
                out.push_back(std::move(y));
            });
        };
    } else {
        // conjugate by the transpose, which inverts states
        auto pent = std::make_shared<ColumnPentagons>(transpose(g), m.index);
        rule.images = [pent](const Perm& x, std::vector<Perm>& out) {
            const Perm xt = inverse(x);
            const int b = pent->beta();
            pent->for_each(xt.data(), [&](int v) {
                Perm y = xt;
                std::swap(y[b], y[v]);
                out.push_back(inverse(y));
            });
        };
    }
    return rule;
}

}  // namespace gridhfk
