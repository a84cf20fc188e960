#pragma once

#include <dcoal/graph.hpp>

#include <cstdint>

namespace dcoal {

/// |N[v] ∩ s|.
inline auto closed_coverage(const Graph & g, VertexSet s, Vertex v) -> int
{
    return (g.closed_neighbours(v) & s).size();
}

/// True iff every vertex v has |N[v] ∩ s| >= k. Throws InputError for k < 1.
auto is_k_tuple_dominating(const Graph & g, VertexSet s, int k) -> bool;

/// The k = 2 case, evaluated with a two-bit saturating counter per vertex.
auto is_double_dominating(const Graph & g, VertexSet s) -> bool;

/// A DDS from which no single vertex can be deleted. Since supersets of a DDS are DDSs,
/// this is equivalent to no proper subset being a DDS.
auto is_minimal_dds(const Graph & g, VertexSet s) -> bool;

/// Deletes the lowest-indexed deletable vertex until none remains. Throws ContractError if s
/// is not a DDS.
auto shrink_to_minimal(const Graph & g, VertexSet s) -> VertexSet;

struct GammaResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact γ×2(G) by branch and bound. Throws NoDdsError if g has an isolated vertex (including
/// K_1 and the null graph).
auto gamma_x2(const Graph & g) -> GammaResult;

} // namespace dcoal
