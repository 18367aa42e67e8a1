#include "gridhfk/legendrian.hpp"

#include "gridhfk/error.hpp"
#include "gridhfk/sparse.hpp"

namespace gridhfk {

LegendrianStates legendrian_states(const GridDiagram& g) {
    const int n = g.n();
    LegendrianStates s{Perm(n), Perm(n)};
    for (int c = 0; c < n; ++c) {
        s.x_plus[(c + 1) % n] = (g.xs()[c] + 1) % n;
        s.x_minus[c] = g.xs()[c];
    }
    if (!differential_tilde(g, s.x_plus).empty() || !differential_tilde(g, s.x_minus).empty())
        throw Error(ErrorCode::NotACycle, "a Legendrian state has a nonzero differential");
    return s;
}

bool GradingReport::ok() const {
    for (const auto& i : identities)
        if (!i.ok) return false;
    return true;
}

GradingReport check_grading_theorem(const GridDiagram& g) {
    GradingReport r;
    r.classical = classical_invariants(g);
    const auto s = legendrian_states(g);
    GradingContext ctx(g);
    r.plus = ctx(s.x_plus);
    r.minus = ctx(s.x_minus);
    auto add = [&](std::string name, long lhs, long rhs) { r.identities.push_back({std::move(name), lhs, rhs, lhs == rhs}); };
    const auto& c = r.classical;
    add("2A(x+) = tb - rot + 1", 2L * r.plus.alexander, c.tb - c.rot + 1);
    add("2A(x-) = tb + rot + 1", 2L * r.minus.alexander, c.tb + c.rot + 1);
    add("M(x+) - 2A(x+) = offset", r.plus.maslov - 2L * r.plus.alexander, kLegendrianMaslovOffset);
    add("M(x-) - 2A(x-) = offset", r.minus.maslov - 2L * r.minus.alexander, kLegendrianMaslovOffset);
    return r;
}

GradingReport require_grading_theorem(const GridDiagram& g) {
    auto r = check_grading_theorem(g);
    for (const auto& i : r.identities)
        if (!i.ok)
            throw Error(ErrorCode::GradingMismatch,
                        i.name + ": " + std::to_string(i.lhs) + " != " + std::to_string(i.rhs));
    return r;
}

GridHomology compute_homology(const GridDiagram& g, const BuildOptions& opt) {
    GridHomology h;
    h.complex = std::make_shared<const SlicedComplex>(build_slices(g, opt));
    h.homology = std::make_shared<const ReducedComplex>(h.complex);
    return h;
}

LegendrianInvariantPair legendrian_invariants(const GridHomology& h) {
    const auto& g = h.grid();
    const auto s = legendrian_states(g);
    GradingContext ctx(g);
    const Bigrading bp = ctx(s.x_plus), bm = ctx(s.x_minus);
    const GridHomology* use = &h;
    GridHomology local;
    if (!h.complex->keeps_alexander(bp.alexander) || !h.complex->keeps_alexander(bm.alexander)) {
        BuildOptions opt;
        opt.max_n = g.n();
        opt.alexander = {bp.alexander, bm.alexander};
        local = compute_homology(g, opt);
        use = &local;
    }
    return {s.x_plus, s.x_minus, use->homology->class_of_state(s.x_plus), use->homology->class_of_state(s.x_minus)};
}

LegendrianInvariantPair legendrian_invariants(const GridDiagram& g, const BuildOptions& opt) {
    const auto s = legendrian_states(g);
    GradingContext ctx(g);
    BuildOptions o = opt;
    o.alexander = {ctx(s.x_plus).alexander, ctx(s.x_minus).alexander};
    return legendrian_invariants(compute_homology(g, o));
}

HomologyClass transverse_invariant(const GridDiagram& g, const BuildOptions& opt) {
    const auto s = legendrian_states(g);
    BuildOptions o = opt;
    o.alexander = {GradingContext(g)(s.x_plus).alexander};
    return compute_homology(g, o).homology->class_of_state(s.x_plus);
}

bool check_nonvanishing(const GridDiagram& g, const BuildOptions& opt) {
    return !transverse_invariant(g, opt).is_zero();
}

namespace {

// Boundary in the complex where rectangles may cover O markers (all V set to
// 1): corners (i, x[i]) and (j, x[j]), interior free of X markers and of
// state points.
SparseVec boundary_v1(const GridDiagram& g, Perm& x) {
    const int n = g.n();
    auto in_arc = [n](int from, int len, int v) { return ((v - from) % n + n) % n < len; };
    SparseVec out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int w = ((j - i) % n + n) % n;
            const int h = ((x[j] - x[i]) % n + n) % n;
            bool empty = true;
            for (int t = 0; t < w && empty; ++t) {
                const int c = (i + t) % n;
                if (in_arc(x[i], h, g.xs()[c])) empty = false;
                if (t > 0 && in_arc(x[i], h, x[c])) empty = false;
            }
            if (!empty) continue;
            std::swap(x[i], x[j]);
            out.push_back(static_cast<std::uint32_t>(perm_rank(x)));
            std::swap(x[i], x[j]);
        }
    }
    canonicalize(out);
    return out;
}

}  // namespace

bool minus_nonvanishing(const GridDiagram& g, int max_n) {
    check_size(g, max_n);
    const int n = g.n();
    const auto s = legendrian_states(g);
    GradingContext ctx(g);
    const int parity = (ctx(s.x_plus).maslov + 1) & 1;
    Perm xp = s.x_plus;
    if (!boundary_v1(g, xp).empty())
        throw Error(ErrorCode::NotACycle, "x+ is not a cycle with V = 1");
    const auto total = factorial(n);
    SparseEchelon image(total);
    for (std::uint64_t k = 0; k < total; ++k) {
        Perm y = perm_unrank(k, n);
        if ((ctx(y).maslov & 1) != parity) continue;
        image.insert(boundary_v1(g, y));
    }
    return !image.contains({static_cast<std::uint32_t>(perm_rank(s.x_plus))});
}

}  // namespace gridhfk
