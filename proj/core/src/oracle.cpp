#include "gridhfk/oracle.hpp"

#include <algorithm>
#include <climits>

#include "gridhfk/error.hpp"

namespace gridhfk {

Laurent grid_alexander_polynomial(const GridDiagram& g) {
    const int n = g.n();
    // winding number of the knot around lattice point (i, j)
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int c = i; c < n; ++c) {
                const int lo = std::min(g.xs()[c], g.os()[c]), hi = std::max(g.xs()[c], g.os()[c]);
                if (lo < j && j <= hi) w[i][j] += g.xs()[c] > g.os()[c] ? 1 : -1;
            }
    int lo = INT_MAX;
    for (const auto& row : w)
        for (int v : row) lo = std::min(lo, v);
    std::vector<std::vector<Laurent>> a(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Laurent::monomial(1, w[i][j] - lo);
    // fraction-free elimination over Z[t]
    Laurent prev = Laurent::monomial(1, 0);
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        int p = k;
        while (p < n && a[p][k].is_zero()) ++p;
        if (p == n) return Laurent();
        if (p != k) {
            std::swap(a[p], a[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = Laurent();
        }
        prev = a[k][k];
    }
    Laurent det = a[n - 1][n - 1];
    if (negate) det = Laurent() - det;
    const Laurent one_minus_t({{0, 1}, {1, -1}});
    for (int i = 0; i + 1 < n; ++i) det = det.divide_exact(one_minus_t);
    return det.normalized_alexander();
}

BigradedDims alternating_hfk(const Laurent& delta, int sigma) {
    if (!delta.is_symmetric())
        throw Error(ErrorCode::AsymmetricPolynomial, delta.to_string() + " is not symmetric under t -> 1/t");
    BigradedDims d;
    for (const auto& [a, c] : delta.terms()) d.add({a + sigma / 2, a}, c < 0 ? -c : c);
    return d;
}

Laurent en_alexander(int n) {
    if (n < 1 || n % 2 == 0) throw Error(ErrorCode::EvenN, "twist knot index must be odd and positive, got " + std::to_string(n));
    const int k = (n + 1) / 2;
    return Laurent({{1, k}, {0, -n}, {-1, k}});
}

std::pair<BigradedDims, MinusTable> en_tables(int n, int tail_depth) {
    if (n < 1 || n % 2 == 0) throw Error(ErrorCode::EvenN, "twist knot index must be odd and positive, got " + std::to_string(n));
    const int k = (n + 1) / 2;
    BigradedDims hat;
    hat.add({2, 1}, k);
    hat.add({1, 0}, n);
    hat.add({0, -1}, k);
    MinusTable minus;
    minus.ranks.add({2, 1}, k);
    minus.ranks.add({1, 0}, k);
    for (int i = 0; i <= tail_depth; ++i) minus.ranks.add({-2 * i, -i}, 1);
    minus.tail_depth = tail_depth;
    return {hat, minus};
}

}  // namespace gridhfk
