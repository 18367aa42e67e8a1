#include "gridhfk/move_maps.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

Bigrading diff(Bigrading a, Bigrading b) { return {a.maslov - b.maslov, a.alexander - b.alexander}; }
Bigrading plus(Bigrading a, Bigrading b) { return {a.maslov + b.maslov, a.alexander + b.alexander}; }

// Grading shift of a rule, read off from the first state with an image.
Bigrading measure_shift(const ChainRule& r) {
    GradingContext src(r.source), tgt(r.target);
    std::vector<Perm> out;
    bool found = false;
    Bigrading shift;
    enumerate_states(r.source.n(), [&](const Perm& p) {
        if (found) return;
        out.clear();
        r.images(p, out);
        if (out.empty()) return;
        shift = diff(tgt(out.front()), src(p));
        found = true;
    });
    return shift;
}

// Block position of a stabilization inside the big grid.
struct Block {
    int c, r;  // left column and bottom row of the 2x2 block in the big grid
};

Block block_of(const GridDiagram& small, const GridMove& stab) {
    const auto& same = stab.marker == Marker::X ? small.xs() : small.os();
    return {stab.index, same[stab.index]};
}

// The block marker of the stabilizing type that shares a column with the
// corner cell.
std::pair<int, int> psi_marker(const Block& b, Corner k) {
    const bool east = k == Corner::NE || k == Corner::SE;
    const bool north = k == Corner::NE || k == Corner::NW;
    return {b.c + (east ? 1 : 0), b.r + (north ? 0 : 1)};
}

// Rectangles from y whose only marker is the one in cell (mc, mr).
void single_marker_rectangles(const GridDiagram& g, int mc, int mr, const Perm& y, std::vector<Perm>& out) {
    const int n = g.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const int w = mod(j - i, n), h = mod(y[j] - y[i], n);
            if (mod(mc - i, n) >= w || mod(mr - y[i], n) >= h) continue;
            bool ok = true;
            for (int t = 0; t < w && ok; ++t) {
                const int c = (i + t) % n;
                for (int row : {g.xs()[c], g.os()[c]})
                    if (mod(row - y[i], n) < h && !(c == mc && row == mr)) ok = false;
                if (t > 0 && mod(y[c] - y[i], n) < h) ok = false;
            }
            if (!ok) continue;
            Perm z = y;
            std::swap(z[i], z[j]);
            out.push_back(std::move(z));
        }
    }
}

Perm insert_centre(const Perm& x, const Block& b) {
    const int n = static_cast<int>(x.size());
    Perm y(n + 1);
    for (int l = 0; l < n; ++l) y[l <= b.c ? l : l + 1] = x[l] <= b.r ? x[l] : x[l] + 1;
    y[b.c + 1] = b.r + 1;
    return y;
}

// Empty unless x passes through the block centre.
std::optional<Perm> remove_centre(const Perm& x, const Block& b) {
    if (x[b.c + 1] != b.r + 1) return std::nullopt;
    const int n = static_cast<int>(x.size()) - 1;
    Perm y(n);
    for (int l = 0; l <= n; ++l) {
        if (l == b.c + 1) continue;
        y[l <= b.c ? l : l - 1] = x[l] <= b.r ? x[l] : x[l] - 1;
    }
    return y;
}

}  // namespace

ChainRule relabel_rule(const GridDiagram& g, const GridMove& m) {
    const int n = g.n();
    ChainRule rule;
    rule.source = g;
    rule.target = apply_move(g, m);
    rule.description = "relabel for " + m.to_string();
    switch (m.kind) {
        case GridMove::Kind::ColumnCycle: {
            const int k = m.index;
            rule.images = [n, k](const Perm& x, std::vector<Perm>& out) {
                Perm y(n);
                for (int l = 0; l < n; ++l) y[l] = x[(l + k) % n];
                out.push_back(std::move(y));
            };
            break;
        }
        case GridMove::Kind::RowCycle: {
            const int k = m.index;
            rule.images = [n, k](const Perm& x, std::vector<Perm>& out) {
                Perm y(n);
                for (int l = 0; l < n; ++l) y[l] = mod(x[l] - k, n);
                out.push_back(std::move(y));
            };
            break;
        }
        case GridMove::Kind::Rotation:
            rule.images = [n](const Perm& x, std::vector<Perm>& out) {
                Perm y(n);
                for (int l = 0; l < n; ++l) y[(n - l) % n] = (n - x[l]) % n;
                out.push_back(std::move(y));
            };
            break;
        default:
            throw Error(ErrorCode::IllegalMove, m.to_string() + " is not a relabeling");
    }
    rule.shift = measure_shift(rule);
    return rule;
}

bool stabilization_has_inclusion(const GridMove& stab) {
    return stab.corner == Corner::NW || stab.corner == Corner::SE;
}

ChainRule stabilization_inclusion(const GridDiagram& small, const GridMove& stab) {
    if (stab.kind != GridMove::Kind::Stabilization || !stabilization_has_inclusion(stab) || !is_legal(small, stab))
        throw Error(ErrorCode::IllegalMove, stab.to_string() + " has no inclusion map");
    const Block b = block_of(small, stab);
    ChainRule rule;
    rule.source = small;
    rule.target = apply_move(small, stab);
    if (stab.marker == Marker::X) {
        rule.description = "inclusion through the block centre for " + stab.to_string();
        rule.images = [b](const Perm& x, std::vector<Perm>& out) { out.push_back(insert_centre(x, b)); };
    } else {
        rule.description = "inclusion through the block centre followed by O rectangles for " + stab.to_string();
        const auto [mc, mr] = psi_marker(b, stab.corner);
        rule.images = [b, mc, mr, big = rule.target](const Perm& x, std::vector<Perm>& out) {
            single_marker_rectangles(big, mc, mr, insert_centre(x, b), out);
        };
    }
    rule.shift = measure_shift(rule);
    return rule;
}

GridMove stabilization_for(const GridDiagram& big, const GridMove& destab) {
    if (destab.kind != GridMove::Kind::Destabilization || !is_legal(big, destab))
        throw Error(ErrorCode::IllegalMove, destab.to_string() + " is not a legal destabilization");
    return inverse_move(big, destab);
}

ChainRule destabilization_projection(const GridDiagram& big, const GridMove& destab) {
    const GridMove stab = stabilization_for(big, destab);
    if (stabilization_has_inclusion(stab))
        throw Error(ErrorCode::IllegalMove, destab.to_string() + " has no projection map");
    const GridDiagram small = apply_move(big, destab);
    const Block b = block_of(small, stab);
    ChainRule rule;
    rule.source = big;
    rule.target = small;
    if (stab.marker == Marker::O) {
        rule.description = "projection onto states through the block centre for " + destab.to_string();
        rule.images = [b](const Perm& x, std::vector<Perm>& out) {
            if (auto y = remove_centre(x, b)) out.push_back(std::move(*y));
        };
    } else {
        rule.description = "X rectangles followed by projection through the block centre for " + destab.to_string();
        const auto [mc, mr] = psi_marker(b, stab.corner);
        rule.images = [b, mc, mr, big](const Perm& x, std::vector<Perm>& out) {
            std::vector<Perm> mid;
            single_marker_rectangles(big, mc, mr, x, mid);
            for (const auto& z : mid)
                if (auto y = remove_centre(z, b)) out.push_back(std::move(*y));
        };
    }
    rule.shift = measure_shift(rule);
    return rule;
}

InducedMap assemble_map(const ChainRule& rule, const SlicedComplex& src, const SlicedComplex& tgt) {
    InducedMap f;
    f.source = rule.source;
    f.target = rule.target;
    f.shift = rule.shift;
    const int n = rule.source.n();
    std::vector<Perm> out;
    for (const auto& [b, s] : src.slices()) {
        const Bigrading tb = plus(b, rule.shift);
        if (!tgt.keeps_alexander(tb.alexander)) continue;
        const ComplexSlice* ts = tgt.slice(tb);
        SparseBoolMatrix blk(ts ? ts->states.size() : 0, s.states.size());
        for (std::uint32_t j = 0; j < s.states.size(); ++j) {
            out.clear();
            rule.images(perm_unrank(s.states[j], n), out);
            SparseVec col;
            for (const auto& y : out) {
                const auto loc = tgt.locate(y);
                if (!loc || loc->first != tb)
                    throw Error(ErrorCode::GradingMismatch, rule.description + ": an image leaves the expected bigrading");
                col.push_back(loc->second);
            }
            canonicalize(col);
            blk.set_column(j, std::move(col));
        }
        f.blocks.emplace(b, std::move(blk));
    }
    return f;
}

void check_chain_map(const InducedMap& f, const SlicedComplex& src, const SlicedComplex& tgt) {
    for (const auto& [b, blk] : f.blocks) {
        const Bigrading lower{b.maslov - 1, b.alexander};
        const Bigrading tb = plus(b, f.shift), tlower = plus(lower, f.shift);
        const ComplexSlice* s = src.slice(b);
        const ComplexSlice* ts = tgt.slice(tb);
        const ComplexSlice* tl = tgt.slice(tlower);
        // d_tgt o F on the slice b
        SparseBoolMatrix lhs(tl ? tl->states.size() : 0, blk.cols());
        if (ts && tl) lhs = ts->boundary_out * blk;
        // F o d_src
        SparseBoolMatrix rhs(lhs.rows(), blk.cols());
        const auto it = f.blocks.find(lower);
        if (s && it != f.blocks.end() && s->boundary_out.rows() > 0) rhs = it->second * s->boundary_out;
        if (lhs.rows() != rhs.rows() || !(lhs == rhs))
            throw Error(ErrorCode::ChainMapViolation, "d F != F d in bigrading (" + std::to_string(b.maslov) + "," +
                                                          std::to_string(b.alexander) + ")");
    }
}

std::map<Bigrading, std::size_t> induced_ranks(const InducedMap& f, const ReducedComplex& src,
                                               const ReducedComplex& tgt) {
    std::map<Bigrading, std::size_t> out;
    for (const auto& [b, r] : src.dims().ranks) {
        const auto it = f.blocks.find(b);
        if (it == f.blocks.end()) continue;
        const Bigrading tb = plus(b, f.shift);
        std::vector<SparseVec> cols;
        for (std::int64_t k = 0; k < r; ++k) {
            std::vector<std::uint8_t> unit(static_cast<std::size_t>(r), 0);
            unit[static_cast<std::size_t>(k)] = 1;
            const auto chain = it->second.apply(src.representative(b, unit));
            const auto cls = tgt.class_of(tb, chain);
            SparseVec v;
            for (std::uint32_t i = 0; i < cls.coords.size(); ++i)
                if (cls.coords[i]) v.push_back(i);
            cols.push_back(v);
        }
        SparseBoolMatrix m(static_cast<std::size_t>(std::max(tgt.dim(tb), 0)), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        out[b] = rank(m);
    }
    return out;
}

InducedMap commutation_map(const GridDiagram& g, const GridMove& m, const BuildOptions& opt) {
    const ChainRule rule = commutation_rule(g, m);
    const auto src = build_slices(g, opt), tgt = build_slices(rule.target, opt);
    return assemble_map(rule, src, tgt);
}

InducedMap stabilization_map(const GridDiagram& g, const GridMove& m, const BuildOptions& opt) {
    if (m.kind == GridMove::Kind::Stabilization) {
        if (!is_legal(g, m)) throw Error(ErrorCode::IllegalMove, m.to_string());
        if (stabilization_has_inclusion(m)) {
            const ChainRule rule = stabilization_inclusion(g, m);
            return assemble_map(rule, build_slices(g, opt), build_slices(rule.target, opt));
        }
        const GridDiagram big = apply_move(g, m);
        const ChainRule rule = destabilization_projection(big, inverse_move(g, m));
        return assemble_map(rule, build_slices(big, opt), build_slices(g, opt));
    }
    if (m.kind == GridMove::Kind::Destabilization) {
        const GridMove stab = stabilization_for(g, m);
        const GridDiagram small = apply_move(g, m);
        if (stabilization_has_inclusion(stab)) {
            const ChainRule rule = stabilization_inclusion(small, stab);
            return assemble_map(rule, build_slices(small, opt), build_slices(g, opt));
        }
        const ChainRule rule = destabilization_projection(g, m);
        return assemble_map(rule, build_slices(g, opt), build_slices(small, opt));
    }
    throw Error(ErrorCode::IllegalMove, m.to_string() + " is not a stabilization");
}

std::vector<std::uint8_t> HomologyMap::apply(const std::vector<std::uint8_t>& coords) const {
    std::vector<std::uint8_t> out(columns.empty() ? 0 : columns.front().size(), 0);
    for (std::size_t k = 0; k < coords.size() && k < columns.size(); ++k)
        if (coords[k])
            for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= columns[k][i];
    return out;
}

bool HomologyMap::is_identity() const {
    if (source != target) return false;
    for (std::size_t k = 0; k < columns.size(); ++k) {
        if (columns[k].size() != columns.size()) return false;
        for (std::size_t i = 0; i < columns[k].size(); ++i)
            if (columns[k][i] != (i == k ? 1 : 0)) return false;
    }
    return true;
}

std::vector<GridDiagram> MoveScript::grids() const {
    std::vector<GridDiagram> out{start};
    for (const auto& m : moves) out.push_back(apply_move(out.back(), m));
    return out;
}

GridDiagram MoveScript::end() const { return grids().back(); }

MoveScript MoveScript::reversed() const {
    const auto gs = grids();
    MoveScript r{gs.back(), {}};
    for (std::size_t i = moves.size(); i-- > 0;) r.moves.push_back(inverse_move(gs[i], moves[i]));
    return r;
}

std::pair<GridDiagram, InducedMap> grid_symmetry_involution(const GridDiagram& g, const BuildOptions& opt) {
    const ChainRule rule = relabel_rule(g, GridMove::rotation());
    auto f = assemble_map(rule, build_slices(g, opt), build_slices(rule.target, opt));
    return {rule.target, std::move(f)};
}

int count_orbits(const std::vector<HomologyClass>& classes, const HomologyMap& involution) {
    if (classes.empty()) return 0;
    for (const auto& c : classes)
        if (c.bigrading != classes.front().bigrading || c.bigrading != involution.source)
            throw Error(ErrorCode::BigradingMismatch, "orbit counting needs classes in one bigrading");
    std::vector<std::vector<std::uint8_t>> distinct;
    for (const auto& c : classes)
        if (std::find(distinct.begin(), distinct.end(), c.coords) == distinct.end()) distinct.push_back(c.coords);
    // union-find over the distinct classes
    std::vector<std::size_t> parent(distinct.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        const auto img = involution.apply(distinct[i]);
        const auto it = std::find(distinct.begin(), distinct.end(), img);
        if (it != distinct.end()) parent[find(i)] = find(static_cast<std::size_t>(it - distinct.begin()));
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < distinct.size(); ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

}  // namespace gridhfk
