#ifndef MDIM_TEST_ORACLES_HPP
#define MDIM_TEST_ORACLES_HPP

// Independent brute-force reference implementations used only by the test
// suite. They deliberately share no code path with the library: distances by
// Floyd-Warshall instead of BFS, subset searches over bitmasks instead of
// lexicographic combinations, characteristic polynomials by permutation
// expansion instead of the trace recurrence, automorphism counting by a
// full permutation sweep.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mdim/graph.hpp"

namespace oracle {

inline constexpr int kUnreached = 1 << 20;

inline std::vector<std::vector<int>> distances_floyd(const mdim::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kUnreached));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) d[u][v] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline std::vector<int> mask_to_set(std::uint32_t mask, int n) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
    return s;
}

inline bool resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& set) {
    const int n = static_cast<int>(d.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool split = false;
            for (int r : set)
                if (d[u][r] != d[v][r]) split = true;
            if (!split) return false;
        }
    return true;
}

inline bool doubly_resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& set) {
    if (set.size() < 2) return false;
    const int n = static_cast<int>(d.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool split = false;
            for (std::size_t i = 0; i < set.size() && !split; ++i)
                for (std::size_t j = i + 1; j < set.size() && !split; ++j)
                    if (d[u][set[i]] - d[u][set[j]] != d[v][set[i]] - d[v][set[j]]) split = true;
            if (!split) return false;
        }
    return true;
}

inline bool strong_resolving(const std::vector<std::vector<int>>& d, const std::vector<int>& set) {
    const int n = static_cast<int>(d.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool split = false;
            for (int w : set)
                if (d[w][u] == d[w][v] + d[v][u] || d[w][v] == d[w][u] + d[u][v]) split = true;
            if (!split) return false;
        }
    return true;
}

// Smallest set size passing `check`, by sweeping all 2^n vertex subsets.
template <typename Check>
int min_passing_size(const mdim::Graph& g, Check&& check) {
    const auto d = distances_floyd(g);
    const int n = g.order();
    int best = n + 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        if (check(d, mask_to_set(mask, n))) best = size;
    }
    return best;
}

inline int min_resolving_size(const mdim::Graph& g) {
    return min_passing_size(g, [](const auto& d, const auto& s) { return resolving(d, s); });
}

inline int min_doubly_size(const mdim::Graph& g) {
    return min_passing_size(g, [](const auto& d, const auto& s) { return doubly_resolving(d, s); });
}

inline int min_strong_size(const mdim::Graph& g) {
    return min_passing_size(g, [](const auto& d, const auto& s) { return strong_resolving(d, s); });
}

inline int min_vertex_cover_size(const mdim::Graph& g) {
    const int n = g.order();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (int u = 0; u < n && covers; ++u)
            for (int v = u + 1; v < n && covers; ++v)
                if (g.adjacent(u, v) && !(mask >> u & 1) && !(mask >> v & 1)) covers = false;
        if (covers) best = size;
    }
    return best;
}

inline int clique_number(const mdim::Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = __builtin_popcount(mask);
        if (size <= best) continue;
        const auto set = mask_to_set(mask, n);
        bool clique = true;
        for (std::size_t i = 0; i < set.size() && clique; ++i)
            for (std::size_t j = i + 1; j < set.size() && clique; ++j)
                if (!g.adjacent(set[i], set[j])) clique = false;
        if (clique) best = size;
    }
    return best;
}

// Full n! sweep; feasible for order <= 8.
inline long long automorphism_count(const mdim::Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// det(xI - A) by the Leibniz permutation expansion: a permutation with f
// fixed points contributes sign * x^f * product of -A[i][perm[i]] over moved
// points. Coefficients fit in long long for order <= 8.
inline std::vector<long long> charpoly_leibniz(const mdim::Graph& g) {
    const int n = g.order();
    std::vector<long long> coeff(n + 1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int fixed = 0;
        long long product = 1;
        bool zero = false;
        std::vector<bool> seen(n, false);
        int transpositions = 0;
        for (int i = 0; i < n && !zero; ++i) {
            if (perm[i] == i) {
                ++fixed;
                continue;
            }
            if (!g.adjacent(i, perm[i]))
                zero = true;  // off-diagonal entry of xI - A is -A[i][j]
            else
                product = -product;
        }
        if (zero) continue;
        // parity via cycle decomposition
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int j = i, len = 0;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            transpositions += len - 1;
        }
        const long long sign = (transpositions % 2 == 0) ? 1 : -1;
        coeff[fixed] += sign * product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return coeff;
}

}  // namespace oracle

#endif
