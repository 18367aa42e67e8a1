#include "gridhfk/state.hpp"

#include "gridhfk/error.hpp"

namespace gridhfk {

StateKey perm_rank(const int* perm, int n) {
    StateKey key = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        key = key * static_cast<StateKey>(n - i) + static_cast<StateKey>(smaller);
    }
    return key;
}

Perm perm_unrank(StateKey key, int n) {
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<StateKey>(n - i);
        digits[i] = static_cast<int>(key % base);
        key /= base;
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Perm p(n);
    for (int i = 0; i < n; ++i) {
        p[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return p;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

bool is_permutation(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

GradingContext::GradingContext(const GridDiagram& g) : n_(g.n()) {
    const int n = n_;
    const std::vector<int>* m[2] = {&g.os(), &g.xs()};
    int self[2];
    for (int k = 0; k < 2; ++k) {
        const auto& mk = *m[k];
        ge_after_[k].assign(static_cast<std::size_t>(n + 1) * n, 0);
        lt_before_[k].assign(static_cast<std::size_t>(n + 1) * n, 0);
        for (int i = n - 1; i >= 0; --i)
            for (int r = 0; r < n; ++r)
                ge_after_[k][i * n + r] = ge_after_[k][(i + 1) * n + r] + (mk[i] >= r ? 1 : 0);
        for (int j = 1; j <= n; ++j)
            for (int r = 0; r < n; ++r)
                lt_before_[k][j * n + r] = lt_before_[k][(j - 1) * n + r] + (mk[j - 1] < r ? 1 : 0);
        int s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (mk[i] < mk[j]) ++s;
        self[k] = s;
    }
    oo_ = self[0];
    xx_ = self[1];
}

int GradingContext::mixed(const int* perm, int which) const {
    int s = 0;
    for (int i = 0; i < n_; ++i)
        s += ge_after_[which][i * n_ + perm[i]] + lt_before_[which][i * n_ + perm[i]];
    return s;
}

namespace {

int self_pairs(const int* perm, int n) {
    int s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] < perm[j]) ++s;
    return s;
}

}  // namespace

int GradingContext::maslov_o(const int* perm) const { return self_pairs(perm, n_) - mixed(perm, 0) + oo_ + 1; }
int GradingContext::maslov_x(const int* perm) const { return self_pairs(perm, n_) - mixed(perm, 1) + xx_ + 1; }

Bigrading GradingContext::operator()(const int* perm) const {
    const int xx = self_pairs(perm, n_);
    const int mo = xx - mixed(perm, 0) + oo_ + 1;
    const int mx = xx - mixed(perm, 1) + xx_ + 1;
    return {mo, (mo - mx - (n_ - 1)) / 2};
}

Bigrading bigrading(const GridDiagram& g, const Perm& x) { return GradingContext(g)(x); }

void check_size(const GridDiagram& g, int max_n) {
    if (g.n() > max_n)
        throw Error(ErrorCode::SizeBoundExceeded,
                    "grid size " + std::to_string(g.n()) + " exceeds the bound " + std::to_string(max_n));
}

}  // namespace gridhfk
