#pragma once

#include <dcoal/graph.hpp>
#include <dcoal/partition.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcoal {

/// Neither a nor b is a DDS but a ∪ b is. Throws InputError if a or b is empty or they overlap.
auto forms_double_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool;

enum class DcReason { none, part_is_dds, part_has_no_partner, structural };

auto reason_name(DcReason r) -> std::string_view;

struct DcValidation {
    bool valid = false;
    std::optional<std::size_t> offending_part;
    DcReason reason = DcReason::none;
    /// partner_map[i] lists, in increasing order, every j that forms a double coalition with part i.
    std::vector<std::vector<std::size_t>> partner_map;
    /// Human-readable explanation for structural defects.
    std::string detail;
};

/// Tests every pair of parts. A structural defect yields reason = structural with an empty
/// partner map.
auto validate_dc_partition(const Graph & g, const Partition & p) -> DcValidation;

struct SearchLimits {
    static constexpr int default_max_order = 13;

    int max_order = default_max_order;
    /// Search nodes allowed before giving up; 0 means unlimited.
    std::uint64_t node_budget = 0;
    /// Stop as soon as DC reaches Δ + 1 on graphs with δ = 1. Off by default, since scans use
    /// the solver to test that very bound.
    bool use_degree_bound = false;
};

struct DcResult {
    int value = 0;
    std::optional<Partition> witness;
    std::uint64_t nodes_explored = 0;
};

/// Exact DC(G) by restricted-growth enumeration of set partitions with pruning. Returns 0
/// without a witness when g has an isolated vertex. Throws ResourceLimitError when the order
/// exceeds limits.max_order or the node budget runs out; InputError on the null graph.
auto dc_number(const Graph & g, const SearchLimits & limits = {}) -> DcResult;

enum class ConstructBranch {
    last_part_minimal, ///< D_k was already minimal and was split
    remainder_added,   ///< D_k \ D'_k partnered an existing part and became its own part
    remainder_merged,  ///< D_k \ D'_k was merged into the second half of D'_k
};

auto branch_name(ConstructBranch b) -> std::string_view;

struct ConstructResult {
    Partition partition;
    int domatic_number = 0;
    ConstructBranch branch = ConstructBranch::last_part_minimal;
};

/// Builds a dc-partition from a maximum double domatic partition D_1..D_k:
///  1. each D_i (i < k) is shrunk to a minimal DDS; the removed vertices join D_k;
///  2. each minimal D_i is split as {lowest vertex}, rest;
///  3. D_k is split the same way if minimal, otherwise its minimal core D'_k is split and the
///     remainder D''_k either joins the partition as its own part (if it partners any part
///     already present) or is merged into the second half of D'_k.
/// The result has 2k or 2k + 1 parts and is re-validated before being returned; a failed
/// validation or a merged part that is a DDS raises ContractError. Throws NoDdsError on graphs
/// with an isolated vertex.
auto construct_dc_partition_traced(const Graph & g) -> ConstructResult;

inline auto construct_dc_partition(const Graph & g) -> Partition
{
    return construct_dc_partition_traced(g).partition;
}

/// Largest number of dc-partners of any single part. Throws InputError unless p is a valid
/// dc-partition of g.
auto max_coalitions_per_part(const Graph & g, const Partition & p) -> int;

} // namespace dcoal
