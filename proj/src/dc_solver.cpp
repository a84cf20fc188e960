#include <dcoal/dc_solver.hpp>
#include <dcoal/ddset.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>

#include <algorithm>

namespace dcoal {

auto forms_double_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool
{
    if (a.empty() || b.empty())
        throw InputError("double coalition members must be nonempty");
    if (a.intersects(b))
        throw InputError("double coalition members must be disjoint");
    return ! is_double_dominating(g, a) && ! is_double_dominating(g, b) && is_double_dominating(g, a | b);
}

auto reason_name(DcReason r) -> std::string_view
{
    switch (r) {
    case DcReason::none: return "none";
    case DcReason::part_is_dds: return "part_is_dds";
    case DcReason::part_has_no_partner: return "part_has_no_partner";
    case DcReason::structural: return "structural";
    }
    return "unknown";
}

auto validate_dc_partition(const Graph & g, const Partition & p) -> DcValidation
{
    DcValidation result;
    if (auto defect = structural_defect(p, g.order())) {
        result.reason = DcReason::structural;
        result.detail = *defect;
        return result;
    }

    auto k = p.parts.size();
    std::vector<bool> is_dds(k);
    for (std::size_t i = 0; i < k; ++i)
        is_dds[i] = is_double_dominating(g, p.parts[i]);

    result.partner_map.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (! is_dds[i] && ! is_dds[j] && is_double_dominating(g, p.parts[i] | p.parts[j])) {
                result.partner_map[i].push_back(j);
                result.partner_map[j].push_back(i);
            }
    for (auto & partners : result.partner_map)
        std::ranges::sort(partners);

    for (std::size_t i = 0; i < k; ++i)
        if (is_dds[i]) {
            result.offending_part = i;
            result.reason = DcReason::part_is_dds;
            return result;
        }
    for (std::size_t i = 0; i < k; ++i)
        if (result.partner_map[i].empty()) {
            result.offending_part = i;
            result.reason = DcReason::part_has_no_partner;
            return result;
        }

    result.valid = true;
    return result;
}

namespace {
    class DcSearch {
      public:
        DcSearch(const Graph & g, const SearchLimits & limits, int stop_at) :
            _g(g), _n(g.order()), _all(g.vertices()), _budget(limits.node_budget), _stop_at(stop_at),
            _labels(static_cast<std::size_t>(_n), -1)
        {
            _parts.reserve(static_cast<std::size_t>(_n));
        }

        auto run() -> DcResult
        {
            assign(0);
            DcResult result;
            result.value = _best_value;
            if (_best_value > 0)
                result.witness = partition_from_labels(_best_labels);
            result.nodes_explored = _nodes;
            return result;
        }

      private:
        const Graph & _g;
        int _n;
        VertexSet _all;
        std::uint64_t _budget;
        int _stop_at;

        std::vector<int> _labels;
        std::vector<VertexSet> _parts;
        std::uint64_t _nodes = 0;
        int _best_value = 0;
        std::vector<int> _best_labels;

        auto done() const -> bool { return _best_value >= _stop_at; }

        // Every part must still be able to find a partner: the final union of the part with
        // its partner lies inside part ∪ other ∪ unassigned, or part ∪ unassigned when the
        // partner is a part not yet opened.
        auto partners_possible(VertexSet unassigned) const -> bool
        {
            auto open = _parts.size();
            for (std::size_t j = 0; j < open; ++j) {
                auto reach = _parts[j] | unassigned;
                bool found = ! unassigned.empty() && is_double_dominating(_g, reach);
                for (std::size_t i = 0; i < open && ! found; ++i)
                    found = i != j && is_double_dominating(_g, reach | _parts[i]);
                if (! found)
                    return false;
            }
            return true;
        }

        auto leaf_valid() const -> bool
        {
            auto k = _parts.size();
            for (std::size_t j = 0; j < k; ++j) {
                bool found = false;
                for (std::size_t i = 0; i < k && ! found; ++i)
                    found = i != j && is_double_dominating(_g, _parts[i] | _parts[j]);
                if (! found)
                    return false;
            }
            return true;
        }

        auto assign(Vertex v) -> void
        {
            if (_budget != 0 && _nodes >= _budget)
                throw ResourceLimitError("double coalition search exhausted its node budget of " +
                    std::to_string(_budget));
            ++_nodes;

            auto open = static_cast<int>(_parts.size());
            if (open + (_n - v) <= _best_value)
                return;
            if (! partners_possible(_all - VertexSet::first_n(v)))
                return;

            if (v == _n) {
                // Parts are never DDSs here: that is pruned as soon as a part grows into one.
                if (open >= 2 && leaf_valid()) {
                    _best_value = open;
                    _best_labels = _labels;
                }
                return;
            }

            for (int j = 0; j <= open && ! done(); ++j) {
                if (j == open)
                    _parts.emplace_back();
                auto & part = _parts[static_cast<std::size_t>(j)];
                part.insert(v);
                _labels[static_cast<std::size_t>(v)] = j;
                // A part that is already a DDS stays one as it grows.
                if (! is_double_dominating(_g, part))
                    assign(v + 1);
                _parts[static_cast<std::size_t>(j)].erase(v);
                if (j == open)
                    _parts.pop_back();
            }
            _labels[static_cast<std::size_t>(v)] = -1;
        }
    };
}

auto dc_number(const Graph & g, const SearchLimits & limits) -> DcResult
{
    auto stats = degree_stats(g);
    if (stats.isolated_present)
        return DcResult{};
    if (g.order() > limits.max_order)
        throw ResourceLimitError("double coalition solver is limited to n <= " + std::to_string(limits.max_order) +
            ", got n = " + std::to_string(g.order()));

    int stop_at = g.order();
    if (limits.use_degree_bound && stats.min_degree == 1)
        stop_at = std::min(stop_at, stats.max_degree + 1);
    return DcSearch{g, limits, stop_at}.run();
}

auto branch_name(ConstructBranch b) -> std::string_view
{
    switch (b) {
    case ConstructBranch::last_part_minimal: return "last_part_minimal";
    case ConstructBranch::remainder_added: return "remainder_added";
    case ConstructBranch::remainder_merged: return "remainder_merged";
    }
    return "unknown";
}

auto construct_dc_partition_traced(const Graph & g) -> ConstructResult
{
    auto domatic = d_x2(g);
    auto parts = domatic.witness.parts;
    auto k = parts.size();

    ConstructResult result;
    result.domatic_number = static_cast<int>(k);
    auto & out = result.partition.parts;

    auto split = [&](VertexSet minimal) {
        auto head = VertexSet::singleton(minimal.lowest());
        out.push_back(head);
        out.push_back(minimal - head);
    };

    for (std::size_t i = 0; i + 1 < k; ++i) {
        auto minimal = shrink_to_minimal(g, parts[i]);
        parts[k - 1] |= parts[i] - minimal;
        split(minimal);
    }

    auto last = parts[k - 1];
    auto core = shrink_to_minimal(g, last);
    split(core);
    if (core == last)
        result.branch = ConstructBranch::last_part_minimal;
    else {
        auto remainder = last - core;
        bool partnered = std::ranges::any_of(
            out, [&](VertexSet member) { return forms_double_coalition(g, remainder, member); });
        if (partnered) {
            out.push_back(remainder);
            result.branch = ConstructBranch::remainder_added;
        }
        else {
            auto merged = out.back() | remainder;
            if (is_double_dominating(g, merged))
                throw ContractError("construct_dc_partition: merged remainder is a double dominating set");
            out.back() = merged;
            result.branch = ConstructBranch::remainder_merged;
        }
    }

    if (! validate_dc_partition(g, result.partition).valid)
        throw ContractError("construct_dc_partition: constructed partition failed validation");
    return result;
}

auto max_coalitions_per_part(const Graph & g, const Partition & p) -> int
{
    auto validation = validate_dc_partition(g, p);
    if (! validation.valid)
        throw InputError("max_coalitions_per_part needs a valid dc-partition");
    std::size_t most = 0;
    for (auto & partners : validation.partner_map)
        most = std::max(most, partners.size());
    return static_cast<int>(most);
}

} // namespace dcoal
