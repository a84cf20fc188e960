#pragma once

// Brute-force reference implementations for the tests. They use adjacency matrices, the
// two-clause definition of a double dominating set, and plain enumeration with no pruning,
// so they share nothing with the bitmask solvers except Graph::edges().

#include <dcoal/graph.hpp>

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

struct Matrix {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit Matrix(const dcoal::Graph & g) : n(g.order()), adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)))
    {
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = true;
    }

    auto neighbours_in(int v, const std::vector<bool> & members) const -> int
    {
        int count = 0;
        for (int u = 0; u < n; ++u)
            if (adj[v][u] && members[u])
                ++count;
        return count;
    }
};

/// Members need a neighbour inside, non-members need two.
inline auto is_dds(const Matrix & m, const std::vector<bool> & members) -> bool
{
    for (int v = 0; v < m.n; ++v) {
        int need = members[v] ? 1 : 2;
        if (m.neighbours_in(v, members) < need)
            return false;
    }
    return true;
}

inline auto is_dds(const Matrix & m, const std::vector<int> & vertices) -> bool
{
    std::vector<bool> members(static_cast<std::size_t>(m.n));
    for (auto v : vertices)
        members[v] = true;
    return is_dds(m, members);
}

/// Smallest DDS size by enumerating all 2^n subsets, or -1 if none exists.
inline auto gamma_x2(const dcoal::Graph & g) -> int
{
    Matrix m{g};
    int best = -1;
    for (unsigned long mask = 0; mask < (1UL << m.n); ++mask) {
        std::vector<bool> members(static_cast<std::size_t>(m.n));
        int size = 0;
        for (int v = 0; v < m.n; ++v)
            if ((mask >> v) & 1UL) {
                members[v] = true;
                ++size;
            }
        if (is_dds(m, members) && (best < 0 || size < best))
            best = size;
    }
    return best;
}

using Blocks = std::vector<std::vector<int>>;

/// Calls `visit` once per set partition of {0..n-1}, built by placing each vertex into an
/// existing block or a new one.
inline auto for_each_set_partition(int n, const std::function<void(const Blocks &)> & visit) -> void
{
    Blocks blocks;
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            visit(blocks);
            return;
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(v);
            place(v + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({v});
        place(v + 1);
        blocks.pop_back();
    };
    place(0);
}

/// Largest partition into DDSs, or 0 if V itself is not a DDS.
inline auto d_x2(const dcoal::Graph & g) -> int
{
    Matrix m{g};
    int best = 0;
    for_each_set_partition(m.n, [&](const Blocks & blocks) {
        if (std::ranges::all_of(blocks, [&](const auto & b) { return is_dds(m, b); }))
            best = std::max(best, static_cast<int>(blocks.size()));
    });
    return best;
}

inline auto union_of(const std::vector<int> & a, const std::vector<int> & b) -> std::vector<int>
{
    auto u = a;
    u.insert(u.end(), b.begin(), b.end());
    return u;
}

/// Straight from the definition: no block is a DDS and each block has a partner block whose
/// union with it is a DDS.
inline auto is_dc_partition(const Matrix & m, const Blocks & blocks) -> bool
{
    for (auto & b : blocks)
        if (is_dds(m, b))
            return false;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool partnered = false;
        for (std::size_t j = 0; j < blocks.size() && ! partnered; ++j)
            partnered = i != j && is_dds(m, union_of(blocks[i], blocks[j]));
        if (! partnered)
            return false;
    }
    return true;
}

/// Largest dc-partition over all set partitions, or 0 if there is none.
inline auto dc(const dcoal::Graph & g) -> int
{
    Matrix m{g};
    int best = 0;
    for_each_set_partition(m.n, [&](const Blocks & blocks) {
        if (static_cast<int>(blocks.size()) > best && is_dc_partition(m, blocks))
            best = static_cast<int>(blocks.size());
    });
    return best;
}

inline auto has_isolated_vertex(const dcoal::Graph & g) -> bool
{
    Matrix m{g};
    for (int v = 0; v < m.n; ++v)
        if (std::ranges::none_of(m.adj[v], [](bool b) { return b; }))
            return true;
    return false;
}

} // namespace oracle
