#pragma once

#include <dcoal/graph.hpp>
#include <dcoal/partition.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcoal {

/// γ×2 of C_n (n >= 3) is ceil(2n/3); of K_{r,s} (r, s >= 3) it is 4. Anything else throws
/// NotApplicableError.
auto gamma_x2_closed(Family family, int a, int b = 0) -> int;

/// DC of P_n (n >= 2): 2 up to n = 5, then 3. C_n (n >= 3): 3. K_{r,s} (min(r, s) >= 3): r + s - 2,
/// though exact search agrees only when min(r, s) = 3 (K_{4,4} has DC 5). K_n (n >= 2): n.
/// Anything else throws NotApplicableError.
auto dc_closed(Family family, int a, int b = 0) -> int;

/// "theorem" for formulas proved outright, "remark" for K_n, which is only stated as the
/// tightness example of the upper bound DC <= n.
auto dc_closed_source(Family family) -> std::string_view;

struct FamilyMatch {
    Family family;
    int a = 0; ///< n, or r for complete_bipartite (r >= s)
    int b = 0; ///< s for complete_bipartite
    auto operator==(const FamilyMatch &) const -> bool = default;
};

/// Every closed-form family the graph is isomorphic to (P_n, C_n, K_n, K_{r,s}), found from
/// structure alone so relabelled inputs are recognised. Stars show up as K_{r,1}.
auto recognise_families(const Graph & g) -> std::vector<FamilyMatch>;

auto is_connected(const Graph & g) -> bool;

enum class BoundId { dc_range, dc_ge_2domatic, dc_le_delta_plus_1, lemma_partner_cap, dc_zero_isolated };

auto bound_name(BoundId id) -> std::string_view;

struct BoundEntry {
    BoundId id;
    bool applicable = false;
    std::optional<bool> holds; ///< empty iff not applicable
    int lhs = 0;
    int rhs = 0;
};

/// Entries, in BoundId order:
///   dc_range            2 <= DC <= n           lhs = DC, rhs = n          isolate-free graphs
///   dc_ge_2domatic      DC >= 2 d×2            lhs = DC, rhs = 2 d×2       isolate-free, d×2 known
///   dc_le_delta_plus_1  DC <= Δ + 1            lhs = DC, rhs = Δ + 1       δ = 1
///   lemma_partner_cap   partners per part <= Δ lhs = max partners, rhs = Δ witness given
///   dc_zero_isolated    DC = 0 iff isolated    lhs = [DC = 0], rhs = [isolated vertex]   always
struct BoundReport {
    std::vector<BoundEntry> entries;

    auto all_hold() const -> bool;
    auto entry(BoundId id) const -> const BoundEntry &;
};

/// Inputs are the exact solver outputs for g; γ×2 and d×2 are absent for graphs with an
/// isolated vertex. A witness that is not a valid dc-partition fails lemma_partner_cap with lhs -1.
auto check_bounds(const Graph & g, std::optional<int> gamma, std::optional<int> domatic, int dc,
    const std::optional<Partition> & witness) -> BoundReport;

struct ClosedFormCheck {
    bool applicable = false;
    bool ok = true;
    std::vector<std::string> mismatches;
};

/// Compares solver values against every closed form that applies to g. Absent values are skipped.
auto check_closed_forms(const Graph & g, std::optional<int> gamma, std::optional<int> dc) -> ClosedFormCheck;

} // namespace dcoal
