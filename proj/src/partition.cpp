#include <dcoal/partition.hpp>

#include <algorithm>

namespace dcoal {

auto structural_defect(const Partition & p, int n) -> std::optional<std::string>
{
    auto universe = VertexSet::first_n(n);
    VertexSet seen;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        auto part = p.parts[i];
        if (part.empty())
            return "part " + std::to_string(i) + " is empty";
        if (! part.subset_of(universe))
            return "part " + std::to_string(i) + " contains a vertex outside 0.." + std::to_string(n - 1);
        if (part.intersects(seen))
            return "part " + std::to_string(i) + " overlaps an earlier part at vertex " +
                std::to_string((part & seen).lowest());
        seen |= part;
    }
    if (seen != universe)
        return "vertex " + std::to_string((universe - seen).lowest()) + " is not covered";
    return std::nullopt;
}

auto sorted_by_min(Partition p) -> Partition
{
    std::ranges::sort(p.parts, {}, [](VertexSet s) { return s.empty() ? max_order : s.lowest(); });
    return p;
}

auto partition_from_labels(const std::vector<int> & labels) -> Partition
{
    Partition p;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        auto label = static_cast<std::size_t>(labels[v]);
        if (label >= p.parts.size())
            p.parts.resize(label + 1);
        p.parts[label].insert(static_cast<Vertex>(v));
    }
    return p;
}

} // namespace dcoal
