#pragma once

#include <dcoal/graph.hpp>
#include <dcoal/partition.hpp>

#include <cstdint>

namespace dcoal {

struct DomaticResult {
    int value = 0;
    Partition witness; ///< parts sorted by smallest vertex
    std::uint64_t nodes_explored = 0;
};

/// True iff every part of `p` is a double dominating set. Throws InputError when `p` is not a
/// partition of V(g).
auto is_domatic_partition_x2(const Graph & g, const Partition & p) -> bool;

/// Floor((δ + 1) / 2): every vertex has δ + 1 or more closed-neighbourhood slots and each
/// DDS part needs two of them.
auto domatic_x2_upper_bound(const Graph & g) -> int;

/// Exact double domatic number d×2(G). Tries part counts from the upper bound downwards and
/// returns the first feasible one. Throws NoDdsError on graphs with an isolated vertex.
auto d_x2(const Graph & g) -> DomaticResult;

} // namespace dcoal
