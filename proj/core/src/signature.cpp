#include <cstdlib>
#include <numeric>
#include <queue>

#include "gridhfk/error.hpp"
#include "gridhfk/oracle.hpp"

namespace gridhfk {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct Q {
    i128 num = 0, den = 1;
    Q() = default;
    Q(i128 n, i128 d = 1) : num(n), den(d) { norm(); }
    void norm() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Q operator-(const Q& o) const { return Q(num * o.den - o.num * den, den * o.den); }
    Q operator+(const Q& o) const { return Q(num * o.den + o.num * den, den * o.den); }
    Q operator*(const Q& o) const { return Q(num * o.num, den * o.den); }
    Q operator/(const Q& o) const { return Q(num * o.den, den * o.num); }
    bool zero() const { return num == 0; }
};

// Signature of a symmetric integer matrix by congruence diagonalization.
int symmetric_signature(std::vector<std::vector<long>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(m[i][j]);
    int sig = 0;
    std::vector<char> done(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && !a[i][i].zero()) p = i;
        if (p == n) {
            // all remaining diagonal entries vanish: add a row with an
            // off-diagonal entry to create a nonzero pivot
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && !a[i][j].zero()) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;  // the rest is zero
            for (std::size_t k = 0; k < n; ++k) a[pi][k] = a[pi][k] + a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] = a[k][pi] + a[k][pj];
            p = pi;
        }
        done[p] = 1;
        const Q piv = a[p][p];
        sig += piv.num > 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p].zero()) continue;
            const Q f = a[i][p] / piv;
            for (std::size_t j = 0; j < n; ++j)
                if (!done[j] || j == p) a[i][j] = a[i][j] - f * a[p][j];
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) a[p][i] = a[i][p] = Q(0);
    }
    return sig;
}

int goeritz_signature(const GridDiagram& g, bool swap_colours) {
    const int n = g.n();
    // unit squares centred on lattice points (i, j), -1 <= i, j <= n; the knot
    // runs along the half-integer lines between them
    const int w = n + 2;
    auto id = [&](int i, int j) { return (i + 1) * w + (j + 1); };
    auto vblock = [&](int i, int j) {  // wall between (i, j) and (i+1, j)
        if (i < 0 || i >= n) return false;
        const int lo = std::min(g.xs()[i], g.os()[i]), hi = std::max(g.xs()[i], g.os()[i]);
        return lo + 1 <= j && j <= hi;
    };
    auto hblock = [&](int i, int j) {  // wall between (i, j) and (i, j+1)
        if (j < 0 || j >= n) return false;
        const int a = g.x_column_of_row(j), b = g.o_column_of_row(j);
        return std::min(a, b) + 1 <= i && i <= std::max(a, b);
    };
    std::vector<int> region(static_cast<std::size_t>(w * w), -1), colour;
    int regions = 0;
    for (int si = -1; si <= n; ++si)
        for (int sj = -1; sj <= n; ++sj) {
            if (region[id(si, sj)] >= 0) continue;
            const int r = regions++;
            std::queue<std::pair<int, int>> q;
            q.push({si, sj});
            region[id(si, sj)] = r;
            while (!q.empty()) {
                auto [i, j] = q.front();
                q.pop();
                auto go = [&](int a, int b, bool blocked) {
                    if (blocked || a < -1 || a > n || b < -1 || b > n || region[id(a, b)] >= 0) return;
                    region[id(a, b)] = r;
                    q.push({a, b});
                };
                go(i + 1, j, vblock(i, j));
                go(i - 1, j, vblock(i - 1, j));
                go(i, j + 1, hblock(i, j));
                go(i, j - 1, hblock(i, j - 1));
            }
        }
    // two-colour the regions: crossing a wall flips the colour
    colour.assign(regions, -1);
    colour[0] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = -1; i <= n; ++i)
            for (int j = -1; j <= n; ++j) {
                const int r = region[id(i, j)];
                if (colour[r] < 0) continue;
                auto link = [&](int a, int b, bool blocked) {
                    if (a > n || b > n) return;
                    const int s = region[id(a, b)];
                    const int want = blocked ? 1 - colour[r] : colour[r];
                    if (colour[s] < 0) {
                        colour[s] = want;
                        changed = true;
                    } else if (colour[s] != want) {
                        throw Error(ErrorCode::InconsistentSlices, "projection is not two-colourable");
                    }
                };
                link(i + 1, j, vblock(i, j));
                link(i, j + 1, hblock(i, j));
            }
    }
    const int shaded = swap_colours ? 0 : 1;
    std::vector<int> index(regions, -1);
    int m = 0;
    for (int r = 0; r < regions; ++r)
        if (colour[r] == shaded) index[r] = m++;
    std::vector<std::vector<long>> gm(m, std::vector<long>(m, 0));
    long mu = 0;
    for (int c = 0; c < n; ++c) {
        const int lo = std::min(g.xs()[c], g.os()[c]), hi = std::max(g.xs()[c], g.os()[c]);
        const int vy = g.xs()[c] > g.os()[c] ? 1 : -1;  // O to X
        for (int r = lo + 1; r < hi; ++r) {
            const int a = g.x_column_of_row(r), b = g.o_column_of_row(r);
            if (!(std::min(a, b) < c && c < std::max(a, b))) continue;
            const int ux = b > a ? 1 : -1;  // X to O
            // quadrants around the crossing at (c + 1/2, r + 1/2)
            const int ne = region[id(c + 1, r + 1)], sw = region[id(c, r)];
            const int nw = region[id(c, r + 1)], se = region[id(c + 1, r)];
            const bool diag_ne = colour[ne] == shaded;  // NE and SW shaded
            // the vertical strand is over; eta records which diagonal pair is
            // shaded, with the sign fixed by the right-handed trefoil
            const int eta = diag_ne ? 1 : -1;
            int r1 = diag_ne ? ne : nw, r2 = diag_ne ? sw : se;
            if (r1 != r2) {
                const int i1 = index[r1], i2 = index[r2];
                gm[i1][i2] -= eta;
                gm[i2][i1] -= eta;
                gm[i1][i1] += eta;
                gm[i2][i2] += eta;
            }
            // the matrix lives on the shaded regions and describes the surface
            // made of the unshaded ones; a crossing is of type II for that
            // surface when a shaded quadrant lies on the same side of both
            // oriented strands
            const int sx = diag_ne ? 1 : -1, sy = 1;
            const bool left_v = sx == -vy, left_h = sy == ux;
            if (left_v == left_h) mu += eta;
        }
    }
    if (m == 0) return static_cast<int>(-mu);
    std::vector<std::vector<long>> reduced(m - 1, std::vector<long>(m - 1));
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) reduced[i - 1][j - 1] = gm[i][j];
    return symmetric_signature(reduced) - static_cast<int>(mu);
}

}  // namespace

int signature(const GridDiagram& g) { return goeritz_signature(g, false); }
int signature_other_colouring(const GridDiagram& g) { return goeritz_signature(g, true); }

}  // namespace gridhfk
