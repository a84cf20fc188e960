#include <dcoal/closed_forms.hpp>
#include <dcoal/dc_solver.hpp>
#include <dcoal/errors.hpp>

#include <algorithm>
#include <utility>

namespace dcoal {

namespace {
    [[noreturn]] auto not_applicable(std::string_view what, Family f, int a, int b) -> void
    {
        throw NotApplicableError(std::string{what} + " has no closed form for " + std::string{family_name(f)} + "(" +
            std::to_string(a) + (f == Family::complete_bipartite ? ", " + std::to_string(b) : std::string{}) + ")");
    }
}

auto gamma_x2_closed(Family family, int a, int b) -> int
{
    switch (family) {
    case Family::cycle:
        if (a >= 3)
            return (2 * a + 2) / 3;
        break;
    case Family::complete_bipartite:
        if (a >= 3 && b >= 3)
            return 4;
        break;
    default: break;
    }
    not_applicable("gamma_x2", family, a, b);
}

auto dc_closed(Family family, int a, int b) -> int
{
    switch (family) {
    case Family::path:
        if (a >= 2)
            return a <= 5 ? 2 : 3;
        break;
    case Family::cycle:
        if (a >= 3)
            return 3;
        break;
    case Family::complete_bipartite:
        if (a >= 3 && b >= 3)
            return a + b - 2;
        break;
    case Family::complete:
        if (a >= 2)
            return a;
        break;
    case Family::star: break;
    }
    not_applicable("DC", family, a, b);
}

auto dc_closed_source(Family family) -> std::string_view
{
    return family == Family::complete ? "remark" : "theorem";
}

auto is_connected(const Graph & g) -> bool
{
    if (g.order() == 0)
        return true;
    auto reached = VertexSet::singleton(0);
    auto frontier = reached;
    while (! frontier.empty()) {
        VertexSet next;
        for (auto v : frontier)
            next |= g.neighbours(v);
        frontier = next - reached;
        reached |= next;
    }
    return reached == g.vertices();
}

namespace {
    // Two-colouring of a connected graph, or nullopt if it has an odd cycle.
    auto bipartition(const Graph & g) -> std::optional<std::pair<VertexSet, VertexSet>>
    {
        VertexSet side[2];
        side[0].insert(0);
        auto frontier = side[0];
        int colour = 0;
        while (! frontier.empty()) {
            VertexSet next;
            for (auto v : frontier)
                next |= g.neighbours(v);
            if (next.intersects(side[colour]))
                return std::nullopt;
            colour ^= 1;
            frontier = next - side[colour];
            side[colour] |= next;
        }
        return std::pair{side[0], side[1]};
    }
}

auto recognise_families(const Graph & g) -> std::vector<FamilyMatch>
{
    std::vector<FamilyMatch> matches;
    int n = g.order();
    if (n < 2 || ! is_connected(g))
        return matches;

    auto stats = degree_stats(g);
    int m = g.edge_count();

    if (m == n - 1 && stats.max_degree <= 2)
        matches.push_back({Family::path, n, 0});
    if (n >= 3 && stats.min_degree == 2 && stats.max_degree == 2)
        matches.push_back({Family::cycle, n, 0});
    if (m == n * (n - 1) / 2)
        matches.push_back({Family::complete, n, 0});
    if (auto parts = bipartition(g)) {
        int r = parts->first.size(), s = parts->second.size();
        if (m == r * s)
            matches.push_back({Family::complete_bipartite, std::max(r, s), std::min(r, s)});
    }
    return matches;
}

auto bound_name(BoundId id) -> std::string_view
{
    switch (id) {
    case BoundId::dc_range: return "dc_range";
    case BoundId::dc_ge_2domatic: return "dc_ge_2domatic";
    case BoundId::dc_le_delta_plus_1: return "dc_le_delta_plus_1";
    case BoundId::lemma_partner_cap: return "lemma_partner_cap";
    case BoundId::dc_zero_isolated: return "dc_zero_isolated";
    }
    return "unknown";
}

auto BoundReport::all_hold() const -> bool
{
    return std::ranges::all_of(entries, [](const BoundEntry & e) { return ! e.applicable || e.holds.value_or(false); });
}

auto BoundReport::entry(BoundId id) const -> const BoundEntry &
{
    auto it = std::ranges::find(entries, id, &BoundEntry::id);
    if (it == entries.end())
        throw ContractError("bound report is missing an entry");
    return *it;
}

auto check_bounds(const Graph & g, std::optional<int> /* gamma */, std::optional<int> domatic, int dc,
    const std::optional<Partition> & witness) -> BoundReport
{
    auto stats = degree_stats(g);
    bool isolate_free = ! stats.isolated_present;

    auto make = [](BoundId id, bool applicable, int lhs, int rhs, bool holds) {
        BoundEntry e{id, applicable, std::nullopt, 0, 0};
        if (applicable) {
            e.holds = holds;
            e.lhs = lhs;
            e.rhs = rhs;
        }
        return e;
    };

    BoundReport report;
    report.entries.push_back(make(BoundId::dc_range, isolate_free, dc, g.order(), dc >= 2 && dc <= g.order()));

    int twice_domatic = domatic ? 2 * *domatic : 0;
    report.entries.push_back(
        make(BoundId::dc_ge_2domatic, isolate_free && domatic.has_value(), dc, twice_domatic, dc >= twice_domatic));

    report.entries.push_back(make(BoundId::dc_le_delta_plus_1, stats.min_degree == 1, dc, stats.max_degree + 1,
        dc <= stats.max_degree + 1));

    if (witness && isolate_free) {
        int partners = -1;
        if (validate_dc_partition(g, *witness).valid)
            partners = max_coalitions_per_part(g, *witness);
        report.entries.push_back(make(BoundId::lemma_partner_cap, true, partners, stats.max_degree,
            partners >= 0 && partners <= stats.max_degree));
    }
    else
        report.entries.push_back(make(BoundId::lemma_partner_cap, false, 0, 0, false));

    int zero = dc == 0 ? 1 : 0, isolated = stats.isolated_present ? 1 : 0;
    report.entries.push_back(make(BoundId::dc_zero_isolated, true, zero, isolated, zero == isolated));
    return report;
}

auto check_closed_forms(const Graph & g, std::optional<int> gamma, std::optional<int> dc) -> ClosedFormCheck
{
    ClosedFormCheck check;
    auto compare = [&](std::string_view what, const FamilyMatch & m, int expected, std::optional<int> actual) {
        if (! actual)
            return;
        check.applicable = true;
        if (*actual != expected) {
            check.ok = false;
            check.mismatches.push_back(std::string{what} + " of " + std::string{family_name(m.family)} + " expected " +
                std::to_string(expected) + ", solver " + std::to_string(*actual));
        }
    };

    for (auto & m : recognise_families(g)) {
        try {
            compare("gamma_x2", m, gamma_x2_closed(m.family, m.a, m.b), gamma);
        }
        catch (const NotApplicableError &) {
        }
        try {
            compare("dc", m, dc_closed(m.family, m.a, m.b), dc);
        }
        catch (const NotApplicableError &) {
        }
    }
    return check;
}

} // namespace dcoal
