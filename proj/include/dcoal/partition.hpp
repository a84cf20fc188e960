#pragma once

#include <dcoal/vertex_set.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dcoal {

/// Ordered list of vertex sets. Whether it really partitions V(G) is checked by
/// structural_defect(), not enforced on construction, so that validators can report
/// overlapping or non-covering inputs.
struct Partition {
    std::vector<VertexSet> parts;

    auto size() const -> std::size_t { return parts.size(); }
    auto operator==(const Partition &) const -> bool = default;
};

/// Describes the first structural problem (empty part, overlap, vertex outside 0..n-1,
/// uncovered vertex), or nullopt if `p` partitions {0, ..., n-1}.
auto structural_defect(const Partition & p, int n) -> std::optional<std::string>;

/// Copy with the parts ordered by their smallest vertex.
auto sorted_by_min(Partition p) -> Partition;

/// Partition from a restricted growth string: vertex v goes to part labels[v].
auto partition_from_labels(const std::vector<int> & labels) -> Partition;

} // namespace dcoal
