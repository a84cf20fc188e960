#pragma once

#include <dcoal/vertex_set.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcoal {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 with bitmask adjacency.
class Graph {
  public:
    /// The null graph K_0.
    Graph() = default;

    /// Throws InputError on an out-of-range endpoint, a self loop, or n outside [0, max_order].
    /// Duplicate edges (in either orientation) are collapsed.
    Graph(int n, std::span<const Edge> edges);

    auto order() const -> int { return _n; }
    auto edge_count() const -> int { return _edge_count; }

    auto vertices() const -> VertexSet { return VertexSet::first_n(_n); }
    auto neighbours(Vertex v) const -> VertexSet { return _adj[v]; }
    auto closed_neighbours(Vertex v) const -> VertexSet { return _adj[v].with(v); }
    auto degree(Vertex v) const -> int { return _adj[v].size(); }
    auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].contains(v); }

    /// Edges (u, v) with u < v, ordered by v then u (graph6 bit order).
    auto edges() const -> std::vector<Edge>;

    auto operator==(const Graph &) const -> bool = default;

  private:
    int _n = 0;
    int _edge_count = 0;
    std::vector<VertexSet> _adj;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    bool isolated_present = false;
};

/// Throws InputError for the null graph.
auto degree_stats(const Graph & g) -> DegreeStats;

auto from_edge_list(int n, std::span<const Edge> edges) -> Graph;

/// Accepts one record, optionally prefixed with the ">>graph6<<" header; trailing
/// whitespace is ignored. Throws ParseError with the byte offset of the defect.
auto parse_graph6(std::string_view line) -> Graph;
auto to_graph6(const Graph & g) -> std::string;

/// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
auto read_edge_list(std::istream & in) -> Graph;
auto write_edge_list(std::ostream & out, const Graph & g) -> void;

enum class Family { path, cycle, complete, complete_bipartite, star };

auto family_name(Family f) -> std::string_view;
auto parse_family(std::string_view name) -> std::optional<Family>;

/// Textbook labelled constructions. `a` is n (or r for complete_bipartite), `b` is s.
/// Paths run 0-1-...-(n-1); cycles close (n-1)-0; K_{r,s} has parts {0..r-1}, {r..r+s-1};
/// star(n) is K_{1,n-1} centred on vertex 0.
auto make_family(Family f, int a, int b = 0) -> Graph;

auto make_path(int n) -> Graph;
auto make_cycle(int n) -> Graph;
auto make_complete(int n) -> Graph;
auto make_complete_bipartite(int r, int s) -> Graph;
auto make_star(int n) -> Graph;

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the standard xor-shift-multiply finaliser.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : _state(seed) {}
    auto next() -> std::uint64_t;

  private:
    std::uint64_t _state;
};

/// G(n, p). Pairs are visited in graph6 order ((0,1), (0,2), (1,2), (0,3), ...); each pair draws
/// one SplitMix64 word x and is an edge iff (x >> 11) * 2^-53 < p. Both the arithmetic and the
/// comparison are exact in IEEE double, so the result is platform independent.
auto gen_random(int n, double p, std::uint64_t seed) -> Graph;

/// Every labelled simple graph on n <= 6 vertices, in increasing edge-mask order, where bit i
/// of the mask is the i-th pair in graph6 order.
class LabeledGraphEnumerator {
  public:
    static constexpr int max_n = 6;

    /// Throws ResourceLimitError for n > max_n.
    explicit LabeledGraphEnumerator(int n);

    auto next() -> std::optional<Graph>;
    auto total() const -> std::uint64_t { return std::uint64_t{1} << _pairs.size(); }

  private:
    int _n;
    std::vector<Edge> _pairs;
    std::uint64_t _mask = 0;
};

/// Convenience wrapper for tests and small sweeps.
auto enumerate_labeled_graphs(int n) -> std::vector<Graph>;

} // namespace dcoal
