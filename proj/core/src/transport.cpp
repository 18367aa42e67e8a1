#include <algorithm>

#include "gridhfk/error.hpp"
#include "gridhfk/move_maps.hpp"

namespace gridhfk {

namespace {

constexpr std::size_t kCacheEntries = 6;

std::vector<std::uint8_t> unit(std::size_t d, std::size_t k) {
    std::vector<std::uint8_t> v(d, 0);
    v[k] = 1;
    return v;
}

bool is_relabel(const GridMove& m) {
    return m.kind == GridMove::Kind::ColumnCycle || m.kind == GridMove::Kind::RowCycle ||
           m.kind == GridMove::Kind::Rotation;
}

}  // namespace

Transporter::Transporter(BuildOptions opt, bool verify_chain_maps) : opt_(std::move(opt)), verify_(verify_chain_maps) {}

const GridHomology& Transporter::homology(const GridDiagram& g, int alexander) {
    auto key = std::make_tuple(g.xs(), g.os(), alexander);
    const auto pos = std::find(lru_.begin(), lru_.end(), key);
    if (pos != lru_.end()) {
        lru_.erase(pos);
        lru_.push_back(key);
        return cache_.at(key);
    }
    BuildOptions o = opt_;
    o.alexander = {alexander};
    GridHomology h = compute_homology(g, o);
    if (lru_.size() >= kCacheEntries) {
        cache_.erase(lru_.front());
        lru_.erase(lru_.begin());
    }
    lru_.push_back(key);
    return cache_.emplace(key, std::move(h)).first->second;
}

HomologyClass Transporter::class_of_state(const GridDiagram& g, const Perm& x) {
    const Bigrading b = bigrading(g, x);
    return homology(g, b.alexander).homology->class_of_state(x);
}

void Transporter::verify(const ChainRule& rule, Bigrading b) {
    const Bigrading tb{b.maslov + rule.shift.maslov, b.alexander + rule.shift.alexander};
    // copies keep the complexes alive if the cache evicts them
    const auto src = homology(rule.source, b.alexander).complex;
    const auto tgt = homology(rule.target, tb.alexander).complex;
    check_chain_map(assemble_map(rule, *src, *tgt), *src, *tgt);
}

HomologyClass Transporter::push(const ChainRule& rule, const HomologyClass& c, int target_alexander) {
    if (verify_) verify(rule, c.bigrading);
    const Bigrading tb{c.bigrading.maslov + rule.shift.maslov, c.bigrading.alexander + rule.shift.alexander};
    if (tb.alexander != target_alexander) throw Error(ErrorCode::GradingMismatch, rule.description);
    const auto src = homology(rule.source, c.bigrading.alexander);
    const auto tgt = homology(rule.target, tb.alexander);
    const SparseVec rep = src.homology->representative(c.bigrading, c.coords);
    const ComplexSlice* s = src.complex->slice(c.bigrading);
    std::vector<Perm> images;
    for (auto l : rep) rule.images(perm_unrank(s->states[l], rule.source.n()), images);
    SparseVec chain;
    for (const auto& y : images) {
        const auto loc = tgt.complex->locate(y);
        if (!loc || loc->first != tb) throw Error(ErrorCode::GradingMismatch, rule.description);
        chain.push_back(loc->second);
    }
    canonicalize(chain);
    return tgt.homology->class_of(tb, chain);
}

HomologyClass Transporter::pull(const ChainRule& rule, const HomologyClass& c, int source_alexander) {
    const Bigrading sb{c.bigrading.maslov - rule.shift.maslov, c.bigrading.alexander - rule.shift.alexander};
    if (sb.alexander != source_alexander) throw Error(ErrorCode::GradingMismatch, rule.description);
    const auto src = homology(rule.source, sb.alexander);
    const std::size_t d = static_cast<std::size_t>(src.homology->dim(sb));
    std::vector<std::vector<std::uint8_t>> cols;
    for (std::size_t k = 0; k < d; ++k) {
        HomologyClass e = src.homology->make_class(sb, unit(d, k));
        cols.push_back(push(rule, e, c.bigrading.alexander).coords);
    }
    std::vector<std::uint8_t> x;
    if (!solve_dense(cols, c.coords, x))
        throw Error(ErrorCode::NotInImage, "class is not in the image of " + rule.description);
    return src.homology->make_class(sb, x);
}

HomologyClass Transporter::step(const GridDiagram& g, const GridMove& m, const HomologyClass& c, TransportStep* log) {
    HomologyClass out;
    std::string method;
    if (m.kind == GridMove::Kind::ColumnCommutation || m.kind == GridMove::Kind::RowCommutation) {
        const ChainRule rule = commutation_rule(g, m);
        out = push(rule, c, c.bigrading.alexander + rule.shift.alexander);
        method = "pentagon map";
    } else if (is_relabel(m)) {
        const ChainRule rule = relabel_rule(g, m);
        out = push(rule, c, c.bigrading.alexander + rule.shift.alexander);
        method = "relabeling";
    } else if (m.kind == GridMove::Kind::Stabilization) {
        if (!is_legal(g, m)) throw Error(ErrorCode::IllegalMove, m.to_string());
        if (stabilization_has_inclusion(m)) {
            const ChainRule rule = stabilization_inclusion(g, m);
            out = push(rule, c, c.bigrading.alexander + rule.shift.alexander);
            method = "inclusion";
        } else {
            const GridDiagram big = apply_move(g, m);
            const ChainRule rule = destabilization_projection(big, inverse_move(g, m));
            if (verify_) verify(rule, {c.bigrading.maslov - rule.shift.maslov, c.bigrading.alexander - rule.shift.alexander});
            out = pull(rule, c, c.bigrading.alexander - rule.shift.alexander);
            method = "inverse of projection";
        }
    } else {
        const GridMove stab = stabilization_for(g, m);
        if (stabilization_has_inclusion(stab)) {
            const ChainRule rule = stabilization_inclusion(apply_move(g, m), stab);
            if (verify_) verify(rule, {c.bigrading.maslov - rule.shift.maslov, c.bigrading.alexander - rule.shift.alexander});
            out = pull(rule, c, c.bigrading.alexander - rule.shift.alexander);
            method = "inverse of inclusion";
        } else {
            const ChainRule rule = destabilization_projection(g, m);
            out = push(rule, c, c.bigrading.alexander + rule.shift.alexander);
            method = "projection";
        }
    }
    if (log) *log = {m, method, out.bigrading, out.is_zero()};
    return out;
}

HomologyClass Transporter::transport(const MoveScript& s, const HomologyClass& c, std::vector<TransportStep>* log) {
    HomologyClass cur = c;
    GridDiagram g = s.start;
    for (const auto& m : s.moves) {
        TransportStep st;
        cur = step(g, m, cur, &st);
        if (log) log->push_back(st);
        g = apply_move(g, m);
    }
    return cur;
}

HomologyMap Transporter::transport_map(const MoveScript& s, Bigrading b) {
    const auto h = homology(s.start, b.alexander);
    const std::size_t d = static_cast<std::size_t>(h.homology->dim(b));
    HomologyMap out{b, b, {}};
    for (std::size_t k = 0; k < d; ++k) {
        const auto img = transport(s, h.homology->make_class(b, unit(d, k)));
        out.target = img.bigrading;
        out.columns.push_back(img.coords);
    }
    return out;
}

HomologyClass transport(const MoveScript& s, const HomologyClass& c, const BuildOptions& opt) {
    Transporter t(opt);
    return t.transport(s, c);
}

}  // namespace gridhfk
