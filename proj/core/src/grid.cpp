#include "gridhfk/grid.hpp"

#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

bool perm_ok(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int r : v) {
        if (r < 0 || r >= n || seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

// Marker intervals of adjacent lines that are disjoint or strictly nested.
// A shared endpoint is excluded: no curve separates the two markers of that
// row, so there is no pentagon map for it.
bool commutable(int a0, int a1, int b0, int b1) {
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
    return !((a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1));
}

const std::vector<int>& same_of(const GridDiagram& g, Marker t) { return t == Marker::X ? g.xs() : g.os(); }
const std::vector<int>& other_of(const GridDiagram& g, Marker t) { return t == Marker::X ? g.os() : g.xs(); }

GridDiagram from_same_other(int n, std::vector<int> same, std::vector<int> other, Marker t) {
    if (t == Marker::X) return new_grid(n, std::move(same), std::move(other));
    return new_grid(n, std::move(other), std::move(same));
}

bool is_east(Corner k) { return k == Corner::NE || k == Corner::SE; }
bool is_north(Corner k) { return k == Corner::NE || k == Corner::NW; }
Corner corner_of(bool east, bool north) {
    return north ? (east ? Corner::NE : Corner::NW) : (east ? Corner::SE : Corner::SW);
}

struct DestabBlock {
    Marker lone;       // type of the marker at (kc, kr)
    int kc, kr;        // lone marker cell
    int ocol, orow;    // the other column and row of the block
};

// The block around a lone marker at (kc, kr), if it is a planar
// destabilization block.
bool find_block(const GridDiagram& g, int kc, int kr, DestabBlock& out) {
    const int n = g.n();
    if (n < 3 || kc < 0 || kc >= n || kr < 0 || kr >= n) return false;
    Marker lone;
    if (g.xs()[kc] == kr) lone = Marker::X;
    else if (g.os()[kc] == kr) lone = Marker::O;
    else return false;
    const Marker t = lone == Marker::X ? Marker::O : Marker::X;
    // partner of type t in the same column, one row away
    const int prow = same_of(g, t)[kc];
    if (prow != kr + 1 && prow != kr - 1) return false;
    // partner of type t in the same row, one column away
    const int pcol = t == Marker::X ? g.x_column_of_row(kr) : g.o_column_of_row(kr);
    if (pcol != kc + 1 && pcol != kc - 1) return false;
    // the opposite cell must be empty
    if (g.xs()[pcol] == prow || g.os()[pcol] == prow) return false;
    out = {lone, kc, kr, pcol, prow};
    return true;
}

GridDiagram do_stabilize(const GridDiagram& g, Marker t, int c, Corner k) {
    const int n = g.n();
    const auto& same = same_of(g, t);
    const auto& other = other_of(g, t);
    const int r = same[c];
    const int kc = c + (is_east(k) ? 1 : 0), kr = r + (is_north(k) ? 1 : 0);
    const int oc = c + (is_east(k) ? 0 : 1), orr = r + (is_north(k) ? 0 : 1);
    auto mapr = [&](int rr) { return rr < r ? rr : rr + 1; };
    auto mapc = [&](int cc) { return cc < c ? cc : cc + 1; };
    std::vector<int> s(n + 1, -1), o(n + 1, -1);
    for (int cc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        s[mapc(cc)] = mapr(same[cc]);
        o[mapc(cc)] = mapr(other[cc]);
    }
    o[kc] = kr;
    s[kc] = orr;
    s[oc] = kr;
    o[oc] = mapr(other[c]);
    for (int cc = 0; cc < n; ++cc)
        if (cc != c && other[cc] == r) o[mapc(cc)] = orr;
    return from_same_other(n + 1, std::move(s), std::move(o), t);
}

GridDiagram do_destabilize(const GridDiagram& g, const DestabBlock& b) {
    const int n = g.n();
    const Marker t = b.lone == Marker::X ? Marker::O : Marker::X;
    std::vector<int> same = same_of(g, t), other = other_of(g, t);
    same[b.ocol] = b.orow;
    std::vector<int> s, o;
    for (int c = 0; c < n; ++c) {
        if (c == b.kc) continue;
        s.push_back(same[c] > b.kr ? same[c] - 1 : same[c]);
        o.push_back(other[c] > b.kr ? other[c] - 1 : other[c]);
    }
    return from_same_other(n - 1, std::move(s), std::move(o), t);
}

}  // namespace

GridDiagram new_grid(int n, std::vector<int> xs, std::vector<int> os, std::string name) {
    if (n < 2) throw Error(ErrorCode::NotAPermutation, "grid size must be at least 2");
    if (!perm_ok(xs, n)) throw Error(ErrorCode::NotAPermutation, "x_perm is not a permutation of 0.." + std::to_string(n - 1));
    if (!perm_ok(os, n)) throw Error(ErrorCode::NotAPermutation, "o_perm is not a permutation of 0.." + std::to_string(n - 1));
    for (int c = 0; c < n; ++c)
        if (xs[c] == os[c])
            throw Error(ErrorCode::SharedCell, "column " + std::to_string(c) + " has X and O in row " + std::to_string(xs[c]));
    GridDiagram g;
    g.x_col_.assign(n, 0);
    g.o_col_.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        g.x_col_[xs[c]] = c;
        g.o_col_[os[c]] = c;
    }
    int c = 0, len = 0;
    do {
        c = g.o_col_[xs[c]];
        ++len;
    } while (c != 0);
    if (len != n)
        throw Error(ErrorCode::MultiComponentLink, "the component through column 0 has " + std::to_string(len) +
                                                       " of " + std::to_string(n) + " columns");
    g.xs_ = std::move(xs);
    g.os_ = std::move(os);
    g.name_ = std::move(name);
    return g;
}

const char* marker_name(Marker m) { return m == Marker::X ? "X" : "O"; }

const char* corner_name(Corner c) {
    switch (c) {
        case Corner::NW: return "NW";
        case Corner::NE: return "NE";
        case Corner::SW: return "SW";
        case Corner::SE: return "SE";
    }
    return "?";
}

Corner parse_corner(const std::string& s) {
    if (s == "NW") return Corner::NW;
    if (s == "NE") return Corner::NE;
    if (s == "SW") return Corner::SW;
    if (s == "SE") return Corner::SE;
    throw Error(ErrorCode::ParseError, "unknown corner '" + s + "'");
}

std::string GridMove::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::ColumnCommutation: os << "C col " << index; break;
        case Kind::RowCommutation: os << "C row " << index; break;
        case Kind::Stabilization: os << "S " << marker_name(marker) << ' ' << index << ' ' << corner_name(corner); break;
        case Kind::Destabilization: os << "D " << index << ' ' << row; break;
        case Kind::ColumnCycle: os << "T col " << index; break;
        case Kind::RowCycle: os << "T row " << index; break;
        case Kind::Rotation: os << "R"; break;
    }
    return os.str();
}

GridMove GridMove::parse(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    auto bad = [&](const std::string& why) { return Error(ErrorCode::ParseError, "move '" + line + "': " + why); };
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (...) {
            throw bad("expected an integer, got '" + s + "'");
        }
        if (used != s.size()) throw bad("expected an integer, got '" + s + "'");
        return v;
    };
    if (tok.empty()) throw bad("empty");
    const std::string& k = tok[0];
    if (k == "R" && tok.size() == 1) return rotation();
    if ((k == "C" || k == "T") && tok.size() == 3) {
        const int i = num(tok[2]);
        if (tok[1] == "col") return k == "C" ? commute_columns(i) : cycle_columns(i);
        if (tok[1] == "row") return k == "C" ? commute_rows(i) : cycle_rows(i);
        throw bad("expected 'col' or 'row'");
    }
    if (k == "S" && tok.size() == 4) {
        Marker m;
        if (tok[1] == "X") m = Marker::X;
        else if (tok[1] == "O") m = Marker::O;
        else throw bad("expected X or O");
        const int c = num(tok[2]);
        Corner corner;
        try {
            corner = parse_corner(tok[3]);
        } catch (const Error&) {
            throw bad("expected a corner NW, NE, SW or SE");
        }
        return stabilize(m, c, corner);
    }
    if (k == "D" && tok.size() == 3) return destabilize(num(tok[1]), num(tok[2]));
    throw bad("unrecognised move");
}

bool is_legal(const GridDiagram& g, const GridMove& m) {
    const int n = g.n();
    switch (m.kind) {
        case GridMove::Kind::ColumnCommutation: {
            if (m.index < 0 || m.index >= n || n < 3) return false;
            const int d = (m.index + 1) % n;
            return commutable(g.xs()[m.index], g.os()[m.index], g.xs()[d], g.os()[d]);
        }
        case GridMove::Kind::RowCommutation: {
            if (m.index < 0 || m.index >= n || n < 3) return false;
            const int s = (m.index + 1) % n;
            return commutable(g.x_column_of_row(m.index), g.o_column_of_row(m.index), g.x_column_of_row(s),
                                g.o_column_of_row(s));
        }
        case GridMove::Kind::Stabilization:
            return m.index >= 0 && m.index < n;
        case GridMove::Kind::Destabilization: {
            DestabBlock b;
            return find_block(g, m.index, m.row, b);
        }
        case GridMove::Kind::ColumnCycle:
        case GridMove::Kind::RowCycle:
            return m.index >= 0 && m.index < n;
        case GridMove::Kind::Rotation:
            return true;
    }
    return false;
}

std::vector<GridMove> legal_moves(const GridDiagram& g) {
    const int n = g.n();
    std::vector<GridMove> out;
    const int last = n >= 3 ? n : 0;
    for (int c = 0; c < last; ++c)
        if (is_legal(g, GridMove::commute_columns(c))) out.push_back(GridMove::commute_columns(c));
    for (int r = 0; r < last; ++r)
        if (is_legal(g, GridMove::commute_rows(r))) out.push_back(GridMove::commute_rows(r));
    for (Marker t : {Marker::X, Marker::O})
        for (int c = 0; c < n; ++c)
            for (Corner k : {Corner::NW, Corner::NE, Corner::SW, Corner::SE})
                out.push_back(GridMove::stabilize(t, c, k));
    for (int c = 0; c < n; ++c)
        for (Marker t : {Marker::X, Marker::O}) {
            const int r = same_of(g, t)[c];
            if (is_legal(g, GridMove::destabilize(c, r))) out.push_back(GridMove::destabilize(c, r));
        }
    return out;
}

GridDiagram apply_move(const GridDiagram& g, const GridMove& m) {
    if (!is_legal(g, m)) throw Error(ErrorCode::IllegalMove, m.to_string() + " on a grid of size " + std::to_string(g.n()));
    const int n = g.n();
    std::vector<int> xs = g.xs(), os = g.os();
    switch (m.kind) {
        case GridMove::Kind::ColumnCommutation: {
            const int d = (m.index + 1) % n;
            std::swap(xs[m.index], xs[d]);
            std::swap(os[m.index], os[d]);
            return new_grid(n, xs, os);
        }
        case GridMove::Kind::RowCommutation: {
            const int r = m.index, s = (m.index + 1) % n;
            auto sw = [&](int v) { return v == r ? s : (v == s ? r : v); };
            for (int c = 0; c < n; ++c) {
                xs[c] = sw(xs[c]);
                os[c] = sw(os[c]);
            }
            return new_grid(n, xs, os);
        }
        case GridMove::Kind::Stabilization:
            return do_stabilize(g, m.marker, m.index, m.corner);
        case GridMove::Kind::Destabilization: {
            DestabBlock b;
            find_block(g, m.index, m.row, b);
            return do_destabilize(g, b);
        }
        case GridMove::Kind::ColumnCycle:
            for (int c = 0; c < n; ++c) {
                xs[c] = g.xs()[(c + m.index) % n];
                os[c] = g.os()[(c + m.index) % n];
            }
            return new_grid(n, xs, os);
        case GridMove::Kind::RowCycle:
            for (int c = 0; c < n; ++c) {
                xs[c] = mod(g.xs()[c] - m.index, n);
                os[c] = mod(g.os()[c] - m.index, n);
            }
            return new_grid(n, xs, os);
        case GridMove::Kind::Rotation:
            return rotate180(g);
    }
    throw Error(ErrorCode::IllegalMove, "unknown move kind");
}

GridMove inverse_move(const GridDiagram& g, const GridMove& m) {
    const int n = g.n();
    switch (m.kind) {
        case GridMove::Kind::ColumnCommutation:
        case GridMove::Kind::RowCommutation:
        case GridMove::Kind::Rotation:
            return m;
        case GridMove::Kind::ColumnCycle:
            return GridMove::cycle_columns(mod(-m.index, n));
        case GridMove::Kind::RowCycle:
            return GridMove::cycle_rows(mod(-m.index, n));
        case GridMove::Kind::Stabilization: {
            const int r = same_of(g, m.marker)[m.index];
            return GridMove::destabilize(m.index + (is_east(m.corner) ? 1 : 0), r + (is_north(m.corner) ? 1 : 0));
        }
        case GridMove::Kind::Destabilization: {
            DestabBlock b;
            if (!find_block(g, m.index, m.row, b)) throw Error(ErrorCode::IllegalMove, m.to_string());
            const int c0 = std::min(b.kc, b.ocol), r0 = std::min(b.kr, b.orow);
            const Marker t = b.lone == Marker::X ? Marker::O : Marker::X;
            return GridMove::stabilize(t, c0, corner_of(b.kc > c0, b.kr > r0));
        }
    }
    throw Error(ErrorCode::IllegalMove, "unknown move kind");
}

int grid_writhe(const GridDiagram& g) {
    const int n = g.n();
    int w = 0;
    for (int c = 0; c < n; ++c) {
        const int lo = std::min(g.xs()[c], g.os()[c]), hi = std::max(g.xs()[c], g.os()[c]);
        const int oy = g.xs()[c] > g.os()[c] ? 1 : -1;  // the column runs from O to X
        for (int r = lo + 1; r < hi; ++r) {
            const int a = g.x_column_of_row(r), b = g.o_column_of_row(r);
            if (std::min(a, b) < c && c < std::max(a, b)) {
                const int ux = b > a ? 1 : -1;  // the row runs from X to O
                w += -oy * ux > 0 ? 1 : -1;
            }
        }
    }
    return w;
}

ClassicalInvariants classical_invariants(const GridDiagram& g) {
    const int n = g.n();
    int cusps = 0, down = 0, up = 0;
    auto visit = [&](bool north, bool west, int in_x, int in_y) {
        // NE and SW corners become cusps of the front
        if (!((north && !west) || (!north && west))) return;
        ++cusps;
        if (in_y - in_x < 0) ++down;
        else ++up;
    };
    for (int c = 0; c < n; ++c) {
        {
            const int r = g.xs()[c], co = g.o_column_of_row(r);
            const int dv = g.os()[c] > r ? 1 : -1;  // from X toward the O of its column
            const int dh = co > c ? 1 : -1;          // from X toward the O of its row
            visit(dv < 0, dh > 0, 0, -dv);
        }
        {
            const int r = g.os()[c], cx = g.x_column_of_row(r);
            const int dv = g.xs()[c] > r ? 1 : -1;
            const int dh = cx > c ? 1 : -1;
            visit(dv < 0, dh > 0, -dh, 0);
        }
    }
    ClassicalInvariants ci;
    ci.tb = -grid_writhe(g) - cusps / 2;
    ci.rot = -(down - up) / 2;
    ci.sl = ci.tb - ci.rot;
    return ci;
}

const char* stabilization_class_name(StabilizationClass c) {
    switch (c) {
        case StabilizationClass::LegendrianIsotopy: return "LegendrianIsotopy";
        case StabilizationClass::PositiveStab: return "PositiveStab";
        case StabilizationClass::NegativeStab: return "NegativeStab";
        case StabilizationClass::TransverseNontrivial: return "TransverseNontrivial";
    }
    return "?";
}

StabilizationClass classify_stabilization(const GridDiagram& g, const GridMove& m) {
    if (m.kind != GridMove::Kind::Stabilization || !is_legal(g, m))
        throw Error(ErrorCode::IllegalMove, m.to_string() + " is not a legal stabilization");
    const auto a = classical_invariants(g), b = classical_invariants(apply_move(g, m));
    const int dtb = b.tb - a.tb, drot = b.rot - a.rot;
    if (dtb == 0 && drot == 0) return StabilizationClass::LegendrianIsotopy;
    if (dtb == -1 && drot == 1) return StabilizationClass::PositiveStab;
    if (dtb == -1 && drot == -1) return StabilizationClass::NegativeStab;
    return StabilizationClass::TransverseNontrivial;
}

GridDiagram mirror(const GridDiagram& g) {
    const int n = g.n();
    std::vector<int> xs(n), os(n);
    for (int c = 0; c < n; ++c) {
        xs[c] = g.xs()[n - 1 - c];
        os[c] = g.os()[n - 1 - c];
    }
    return new_grid(n, xs, os, g.name().empty() ? "" : "mirror " + g.name());
}

GridDiagram transpose(const GridDiagram& g) {
    const int n = g.n();
    std::vector<int> xs(n), os(n);
    for (int r = 0; r < n; ++r) {
        xs[r] = g.x_column_of_row(r);
        os[r] = g.o_column_of_row(r);
    }
    return new_grid(n, xs, os);
}

GridDiagram rotate180(const GridDiagram& g) {
    const int n = g.n();
    std::vector<int> xs(n), os(n);
    for (int c = 0; c < n; ++c) {
        xs[c] = n - 1 - g.xs()[n - 1 - c];
        os[c] = n - 1 - g.os()[n - 1 - c];
    }
    return new_grid(n, xs, os);
}

std::vector<std::pair<int, int>> knot_path(const GridDiagram& g) {
    std::vector<std::pair<int, int>> pts;
    int c = 0;
    do {
        pts.push_back({c, g.os()[c]});
        pts.push_back({c, g.xs()[c]});
        c = g.o_column_of_row(g.xs()[c]);
    } while (c != 0);
    return pts;
}

}  // namespace gridhfk
