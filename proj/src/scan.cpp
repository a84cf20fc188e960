#include <dcoal/closed_forms.hpp>
#include <dcoal/ddset.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>
#include <dcoal/scan.hpp>

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace dcoal {

auto parse_scan_checks(std::string_view list) -> ScanChecks
{
    ScanChecks checks{false, false, false, false};
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (item == "bounds")
            checks.bounds = true;
        else if (item == "closed-forms")
            checks.closed_forms = true;
        else if (item == "construct")
            checks.construct = true;
        else if (item == "lemma-partner-cap")
            checks.lemma_partner_cap = true;
        else if (item == "all")
            checks = ScanChecks{};
        else
            throw InputError("unknown check \"" + std::string{item} + "\"");
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return checks;
}

auto scan_graph(const Graph & g, std::string graph_id, const ScanOptions & options) -> ScanRecord
{
    auto started = std::chrono::steady_clock::now();

    ScanRecord r;
    r.graph_id = std::move(graph_id);
    r.graph6 = to_graph6(g);
    auto stats = degree_stats(g);
    r.n = g.order();
    r.m = g.edge_count();
    r.min_deg = stats.min_degree;
    r.max_deg = stats.max_degree;

    if (! stats.isolated_present) {
        r.gamma_x2 = gamma_x2(g).value;
        r.d_x2 = d_x2(g).value;
    }

    std::optional<Partition> dc_witness;
    try {
        auto dc = dc_number(g, options.limits);
        r.dc = dc.value;
        dc_witness = dc.witness;
    }
    catch (const ResourceLimitError & e) {
        r.skipped = true;
        r.notes.push_back(std::string{"skipped: "} + e.what());
    }

    if (r.dc) {
        auto report = check_bounds(g, r.gamma_x2, r.d_x2, *r.dc, dc_witness);
        r.bounds_ok = report.all_hold();
        for (auto & e : report.entries) {
            if (! e.applicable || *e.holds)
                continue;
            bool requested = e.id == BoundId::lemma_partner_cap ? options.checks.lemma_partner_cap : options.checks.bounds;
            if (requested)
                r.violations.push_back(std::string{bound_name(e.id)} + " fails: lhs " + std::to_string(e.lhs) + ", rhs " +
                    std::to_string(e.rhs));
        }
    }

    auto closed = check_closed_forms(g, r.gamma_x2, r.dc);
    if (closed.applicable && ! r.skipped) {
        r.closed_form_ok = closed.ok;
        if (options.checks.closed_forms)
            for (auto & m : closed.mismatches)
                r.violations.push_back("closed form mismatch: " + m);
    }

    if (! stats.isolated_present && ! r.skipped) {
        std::string failure;
        try {
            auto built = construct_dc_partition_traced(g);
            auto size = static_cast<int>(built.partition.size());
            int k = built.domatic_number;
            if (size < 2 * k || size > 2 * k + 1)
                failure = "construct produced " + std::to_string(size) + " parts from d_x2 = " + std::to_string(k);
            else if (r.dc && size > *r.dc)
                failure = "construct produced " + std::to_string(size) + " parts, above DC = " + std::to_string(*r.dc);
            else {
                auto partners = max_coalitions_per_part(g, built.partition);
                if (partners > stats.max_degree)
                    r.notes.push_back("constructed partition has a part with " + std::to_string(partners) +
                        " partners, above max degree " + std::to_string(stats.max_degree));
            }
        }
        catch (const ContractError & e) {
            failure = e.what();
        }
        r.construct_ok = failure.empty();
        if (! failure.empty() && options.checks.construct)
            r.violations.push_back(failure);
    }

    if (options.timing)
        r.runtime_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
    return r;
}

auto to_csv_row(const ScanRecord & r) -> std::string
{
    auto value = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string{"none"}; };
    auto flag = [](std::optional<bool> f) { return f ? std::string{*f ? "true" : "false"} : std::string{"n/a"}; };

    std::ostringstream out;
    out << r.graph_id << ',' << r.n << ',' << r.m << ',' << r.min_deg << ',' << r.max_deg << ',' << value(r.gamma_x2)
        << ',' << value(r.d_x2) << ',' << value(r.dc) << ',' << flag(r.bounds_ok) << ',' << flag(r.closed_form_ok) << ','
        << flag(r.construct_ok) << ',' << r.runtime_ms;
    return out.str();
}

auto random_corpus(int count, int n_min, int n_max, const std::vector<double> & ps, std::uint64_t seed)
    -> std::vector<Graph>
{
    if (n_min < 1 || n_max < n_min)
        throw InputError("random corpus needs 1 <= n_min <= n_max");
    if (ps.empty())
        throw InputError("random corpus needs at least one edge probability");

    SplitMix64 seeds{seed};
    auto orders = n_max - n_min + 1;
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int i = 0; i < count; ++i) {
        auto p = ps[static_cast<std::size_t>(i / orders) % ps.size()];
        graphs.push_back(gen_random(n_min + i % orders, p, seeds.next()));
    }
    return graphs;
}

auto run_scan(const std::function<std::optional<std::pair<std::string, Graph>>()> & next, const ScanOptions & options,
    unsigned jobs, const std::function<void(const ScanRecord &)> & emit) -> ScanSummary
{
    ScanSummary summary;
    auto tally = [&](const ScanRecord & r) {
        ++summary.records;
        if (! r.violations.empty())
            ++summary.violations;
        if (r.skipped)
            ++summary.skipped;
        emit(r);
    };

    if (jobs <= 1) {
        while (auto item = next())
            tally(scan_graph(item->second, std::move(item->first), options));
        return summary;
    }

    // Bounded batches keep memory independent of corpus size.
    const std::size_t batch_size = 64 * static_cast<std::size_t>(jobs);
    std::vector<std::pair<std::string, Graph>> batch;
    std::vector<ScanRecord> records;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < batch_size) {
            auto item = next();
            if (! item) {
                more = false;
                break;
            }
            batch.push_back(std::move(*item));
        }
        records.assign(batch.size(), ScanRecord{});

        std::atomic<std::size_t> cursor{0};
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < jobs; ++t)
            workers.emplace_back([&, t] {
                try {
                    for (auto i = cursor++; i < batch.size(); i = cursor++)
                        records[i] = scan_graph(batch[i].second, batch[i].first, options);
                }
                catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        for (auto & w : workers)
            w.join();
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        for (auto & r : records)
            tally(r);
    }
    return summary;
}

} // namespace dcoal
