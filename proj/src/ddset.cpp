#include <dcoal/ddset.hpp>
#include <dcoal/errors.hpp>

#include <algorithm>
#include <array>

namespace dcoal {

auto is_k_tuple_dominating(const Graph & g, VertexSet s, int k) -> bool
{
    if (k < 1)
        throw InputError("k-tuple domination needs k >= 1");
    if (k == 2)
        return is_double_dominating(g, s);
    for (Vertex v = 0; v < g.order(); ++v)
        if (closed_coverage(g, s, v) < k)
            return false;
    return true;
}

auto is_double_dominating(const Graph & g, VertexSet s) -> bool
{
    VertexSet once, twice;
    for (auto u : s) {
        auto nu = g.closed_neighbours(u);
        twice |= once & nu;
        once |= nu;
    }
    return twice == g.vertices();
}

auto is_minimal_dds(const Graph & g, VertexSet s) -> bool
{
    if (! is_double_dominating(g, s))
        return false;
    for (auto v : s)
        if (is_double_dominating(g, s.without(v)))
            return false;
    return true;
}

auto shrink_to_minimal(const Graph & g, VertexSet s) -> VertexSet
{
    if (! is_double_dominating(g, s))
        throw ContractError("shrink_to_minimal: input is not a double dominating set");

    // One ascending pass suffices: a vertex kept at step v stays undeletable once later
    // vertices are removed, by superset monotonicity.
    for (auto v : s)
        if (is_double_dominating(g, s.without(v)))
            s.erase(v);
    return s;
}

namespace {
    class GammaSearch {
      public:
        explicit GammaSearch(const Graph & g) : _g(g), _n(g.order())
        {
            for (Vertex v = 0; v < _n; ++v)
                _max_gain = std::max(_max_gain, g.degree(v) + 1);
        }

        auto run(VertexSet forced, VertexSet incumbent) -> GammaResult
        {
            _best = incumbent;
            search(forced, VertexSet{});
            return GammaResult{_best.size(), _best, _nodes};
        }

      private:
        const Graph & _g;
        int _n;
        int _max_gain = 1;
        VertexSet _best;
        std::uint64_t _nodes = 0;

        auto search(VertexSet chosen, VertexSet excluded) -> void
        {
            ++_nodes;
            auto available = _g.vertices() - chosen - excluded;

            int deficit = 0;
            Vertex branch_on = -1;
            int fewest_options = _n + 1;
            for (Vertex v = 0; v < _n; ++v) {
                auto closed = _g.closed_neighbours(v);
                int need = 2 - (closed & chosen).size();
                if (need <= 0)
                    continue;
                int options = (closed & available).size();
                if (options < need)
                    return;
                deficit += need;
                if (options < fewest_options) {
                    fewest_options = options;
                    branch_on = v;
                }
            }

            if (branch_on < 0) {
                if (chosen.size() < _best.size())
                    _best = chosen;
                return;
            }

            // Each added vertex u lowers the total deficit by at most |N[u]|.
            int lower = chosen.size() + (deficit + _max_gain - 1) / _max_gain;
            if (lower >= _best.size())
                return;

            auto candidate = (_g.closed_neighbours(branch_on) & available).lowest();
            search(chosen.with(candidate), excluded);
            search(chosen, excluded.with(candidate));
        }
    };
}

auto gamma_x2(const Graph & g) -> GammaResult
{
    if (degree_stats(g).isolated_present)
        throw NoDdsError("graph has an isolated vertex, so it has no double dominating set");

    // A degree-one vertex has |N[leaf]| = 2, so it and its support lie in every DDS.
    VertexSet forced;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            forced |= g.closed_neighbours(v);

    return GammaSearch{g}.run(forced, g.vertices());
}

} // namespace dcoal
