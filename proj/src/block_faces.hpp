#pragma once

// Face and degeneracy maps on ordered vertex partitions (S_1, ..., S_n),
// shared by the graph and tree constructions. A partition is stored as the
// 1-based block of each vertex.

#include <functional>
#include <vector>

namespace segal::detail {

struct BlockFace {
    std::vector<bool> kept;   // per vertex
    std::vector<int> blocks;  // blocks of the kept vertices, in order
};

/// d_0 drops S_1, d_n drops S_n, inner d_i merges S_i and S_{i+1}.
inline BlockFace block_face(int n, int i, const std::vector<int>& blocks) {
    BlockFace out;
    out.kept.reserve(blocks.size());
    for (int b : blocks) {
        const bool drop = (i == 0 && b == 1) || (i == n && b == n);
        out.kept.push_back(!drop);
        if (drop)
            continue;
        out.blocks.push_back(i == n ? b : (b > i ? b - 1 : b));
    }
    return out;
}

/// s_i inserts an empty block right after S_i (s_0 in front).
inline std::vector<int> block_degeneracy(int i, std::vector<int> blocks) {
    for (int& b : blocks)
        if (b > i)
            ++b;
    return blocks;
}

/// Every assignment of `count` vertices to blocks 1..n accepted by `admit`.
inline void for_each_assignment(std::size_t count, int n, const std::function<bool(const std::vector<int>&)>& admit,
                                const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> blocks(count, 1);
    if (count > 0 && n < 1)
        return;
    while (true) {
        if (admit(blocks))
            visit(blocks);
        std::size_t p = count;
        while (p > 0) {
            --p;
            if (++blocks[p] <= n)
                break;
            blocks[p] = 1;
            if (p == 0)
                return;
        }
        if (count == 0)
            return;
    }
}

}  // namespace segal::detail
