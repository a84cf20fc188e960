#pragma once

#include <dcoal/dc_solver.hpp>
#include <dcoal/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dcoal {

struct ScanChecks {
    bool bounds = true;
    bool closed_forms = true;
    bool construct = true;
    bool lemma_partner_cap = true;
};

/// Parses a comma list of {bounds, closed-forms, construct, lemma-partner-cap, all}.
auto parse_scan_checks(std::string_view list) -> ScanChecks;

struct ScanOptions {
    ScanChecks checks;
    SearchLimits limits;
    bool timing = false; ///< fill runtime_ms; off keeps output byte-stable
};

/// One CSV row. Optional flags print as "n/a" and optional values as "none".
struct ScanRecord {
    std::string graph_id;
    std::string graph6;
    int n = 0, m = 0, min_deg = 0, max_deg = 0;
    std::optional<int> gamma_x2, d_x2, dc;
    std::optional<bool> bounds_ok;      ///< n/a only when the DC solver gave up
    std::optional<bool> closed_form_ok; ///< n/a unless a closed-form family matches
    std::optional<bool> construct_ok;   ///< n/a for graphs with an isolated vertex or when skipped
    std::int64_t runtime_ms = 0;

    bool skipped = false;
    /// Failures of the requested checks. Nonempty means the record is a counterexample.
    std::vector<std::string> violations;
    /// Observations that are not failures (e.g. partner counts above Δ on non-optimal partitions).
    std::vector<std::string> notes;
};

/// Solves every invariant of g and evaluates the requested checks. The null graph is rejected
/// with InputError; solver resource limits produce a skipped record instead of an exception.
auto scan_graph(const Graph & g, std::string graph_id, const ScanOptions & options) -> ScanRecord;

inline constexpr std::string_view scan_csv_header =
    "graph_id,n,m,min_deg,max_deg,gamma_x2,d_x2,dc,bounds_ok,closed_form_ok,construct_ok,runtime_ms";

auto to_csv_row(const ScanRecord & r) -> std::string;

/// Labelled random graphs for scans: graph i has order n_min + i mod (n_max - n_min + 1),
/// edge probability ps[(i / (n_max - n_min + 1)) mod |ps|], and seed equal to the i-th output
/// of SplitMix64(seed).
auto random_corpus(int count, int n_min, int n_max, const std::vector<double> & ps, std::uint64_t seed)
    -> std::vector<Graph>;

/// Summary of a scan run.
struct ScanSummary {
    std::uint64_t records = 0;
    std::uint64_t violations = 0;
    std::uint64_t skipped = 0;
};

/// Scans `next()`'s graphs until it returns nullopt and hands each finished record to `emit`
/// in input order. With jobs > 1, graphs are solved concurrently in batches while emission
/// stays ordered and single-threaded.
auto run_scan(const std::function<std::optional<std::pair<std::string, Graph>>()> & next, const ScanOptions & options,
    unsigned jobs, const std::function<void(const ScanRecord &)> & emit) -> ScanSummary;

} // namespace dcoal
