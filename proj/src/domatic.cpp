#include <dcoal/ddset.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>

#include <algorithm>

namespace dcoal {

auto is_domatic_partition_x2(const Graph & g, const Partition & p) -> bool
{
    if (auto defect = structural_defect(p, g.order()))
        throw InputError("not a partition: " + *defect);
    return std::ranges::all_of(p.parts, [&](VertexSet part) { return is_double_dominating(g, part); });
}

auto domatic_x2_upper_bound(const Graph & g) -> int
{
    return (degree_stats(g).min_degree + 1) / 2;
}

namespace {
    // Decides whether V splits into exactly `parts` double dominating sets. Vertices are
    // assigned in index order; vertex v may open part j only when parts 0..j-1 are open.
    class DomaticSearch {
      public:
        DomaticSearch(const Graph & g, int parts, std::uint64_t & nodes) :
            _g(g), _n(g.order()), _k(parts), _nodes(nodes), _labels(static_cast<std::size_t>(_n), -1),
            _parts(static_cast<std::size_t>(parts))
        {
        }

        auto solve() -> std::optional<Partition>
        {
            if (assign(0, 0))
                return partition_from_labels(_labels);
            return std::nullopt;
        }

      private:
        const Graph & _g;
        int _n, _k;
        std::uint64_t & _nodes;
        std::vector<int> _labels;
        std::vector<VertexSet> _parts;

        // Every vertex w needs two members of N[w] in each part; the shortfall must be
        // coverable by the still-unassigned vertices of N[w].
        auto feasible(Vertex next) const -> bool
        {
            auto unassigned = _g.vertices() - VertexSet::first_n(next);
            for (Vertex w = 0; w < _n; ++w) {
                auto closed = _g.closed_neighbours(w);
                int shortfall = 0;
                for (auto part : _parts)
                    shortfall += std::max(0, 2 - (closed & part).size());
                if (shortfall > (closed & unassigned).size())
                    return false;
            }
            return true;
        }

        auto assign(Vertex v, int open) -> bool
        {
            ++_nodes;
            if (! feasible(v))
                return false;
            if (v == _n)
                return true;
            // Cannot open the remaining parts with the vertices left.
            if (_k - open > _n - v)
                return false;

            int limit = std::min(open + 1, _k);
            for (int j = 0; j < limit; ++j) {
                _parts[static_cast<std::size_t>(j)].insert(v);
                _labels[static_cast<std::size_t>(v)] = j;
                if (assign(v + 1, std::max(open, j + 1)))
                    return true;
                _parts[static_cast<std::size_t>(j)].erase(v);
            }
            _labels[static_cast<std::size_t>(v)] = -1;
            return false;
        }
    };
}

auto d_x2(const Graph & g) -> DomaticResult
{
    if (degree_stats(g).isolated_present)
        throw NoDdsError("graph has an isolated vertex, so it has no double dominating set");

    DomaticResult result;
    for (int k = domatic_x2_upper_bound(g); k >= 2; --k) {
        if (auto p = DomaticSearch{g, k, result.nodes_explored}.solve()) {
            result.value = k;
            result.witness = sorted_by_min(std::move(*p));
            return result;
        }
    }
    result.value = 1;
    result.witness = Partition{{g.vertices()}};
    return result;
}

} // namespace dcoal
