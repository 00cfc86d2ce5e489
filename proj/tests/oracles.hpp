#pragma once

// Counting formulas computed independently of the library, used as test
// oracles.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::vector<std::vector<std::uint64_t>> pascal(static_cast<std::size_t>(n + 1));
    for (int r = 0; r <= n; ++r) {
        pascal[r].assign(static_cast<std::size_t>(r + 1), 1);
        for (int c = 1; c < r; ++c)
            pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
    }
    return pascal[n][k];
}

// Segner's recurrence.
inline std::uint64_t catalan(int m) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m + 1), 0);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int i = 0; i < k; ++i)
            c[k] += c[i] * c[k - 1 - i];
    return c[m];
}

inline std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

// |X^G_n| = sum over subgraphs H of n^|V(H)|; a vertex set U carries
// 2^{edges inside U} subgraphs.
inline std::uint64_t graph_level_size(int vertex_count, const std::vector<std::pair<int, int>>& edges, int n) {
    std::uint64_t total = 0;
    for (unsigned u = 0; u < (1u << vertex_count); ++u) {
        int inside = 0;
        for (auto [a, b] : edges)
            inside += ((u >> a) & 1u) && ((u >> b) & 1u);
        total += power(2, inside) * power(static_cast<std::uint64_t>(n), __builtin_popcount(u));
    }
    return total;
}

// |X^T_n| by brute force: every vertex set of the form L \ L' for
// parent-closed L' within L, with every block labelling that does not
// decrease from a parent inside the set to its child.
inline std::uint64_t tree_level_size(const std::vector<int>& parent, int n) {
    const int v = static_cast<int>(parent.size());
    auto closed = [&](unsigned s) {
        for (int x = 0; x < v; ++x)
            if (((s >> x) & 1u) && parent[x] >= 0 && !((s >> parent[x]) & 1u))
                return false;
        return true;
    };
    std::vector<bool> admissible(1u << v, false);
    for (unsigned l = 0; l < (1u << v); ++l)
        for (unsigned lp = 0; lp < (1u << v); ++lp)
            if ((lp & ~l) == 0 && closed(l) && closed(lp))
                admissible[l & ~lp] = true;
    std::uint64_t total = 0;
    for (unsigned s = 0; s < (1u << v); ++s) {
        if (!admissible[s])
            continue;
        std::vector<int> members;
        for (int x = 0; x < v; ++x)
            if ((s >> x) & 1u)
                members.push_back(x);
        std::vector<int> block(static_cast<std::size_t>(v), 0);
        std::function<void(std::size_t)> walk = [&](std::size_t k) {
            if (k == members.size()) {
                for (int x : members)
                    if (parent[x] >= 0 && ((s >> parent[x]) & 1u) && block[parent[x]] > block[x])
                        return;
                ++total;
                return;
            }
            for (int b = 1; b <= n; ++b) {
                block[members[k]] = b;
                walk(k + 1);
            }
        };
        if (members.empty())
            ++total;
        else if (n >= 1)
            walk(0);
    }
    return total;
}

}  // namespace oracle
