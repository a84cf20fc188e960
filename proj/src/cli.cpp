#include <dcoal/cli.hpp>
#include <dcoal/ddset.hpp>
#include <dcoal/dc_solver.hpp>
#include <dcoal/domatic.hpp>
#include <dcoal/errors.hpp>
#include <dcoal/scan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace dcoal::cli {

namespace {
    using nlohmann::ordered_json;

    auto set_json(VertexSet s) -> ordered_json
    {
        return s.to_vector();
    }

    auto partition_json(const Partition & p) -> ordered_json
    {
        auto parts = ordered_json::array();
        for (auto part : p.parts)
            parts.push_back(set_json(part));
        return parts;
    }

    // Keeps either an owned file stream or a borrowed standard input.
    class Input {
      public:
        Input(const std::string & path, std::istream & stdin_stream)
        {
            if (path == "-" || path.empty()) {
                _stream = &stdin_stream;
                return;
            }
            _file = std::make_unique<std::ifstream>(path);
            if (! *_file)
                throw InputError("cannot open \"" + path + "\"");
            _stream = _file.get();
        }

        auto stream() -> std::istream & { return *_stream; }

      private:
        std::unique_ptr<std::ifstream> _file;
        std::istream * _stream = nullptr;
    };

    auto is_blank(const std::string & line) -> bool
    {
        return line.find_first_not_of(" \t\r\n") == std::string::npos;
    }

    auto trim(std::string line) -> std::string
    {
        auto end = line.find_last_not_of(" \t\r\n");
        line.erase(end == std::string::npos ? 0 : end + 1);
        return line;
    }

    // Reads graph6 records one per line, skipping blank lines and bare headers.
    class Graph6Reader {
      public:
        explicit Graph6Reader(std::istream & in) : _in(in) {}

        auto next() -> std::optional<std::pair<std::string, Graph>>
        {
            std::string line;
            while (std::getline(_in, line)) {
                ++_line_no;
                line = trim(line);
                if (line.empty() || line == ">>graph6<<")
                    continue;
                try {
                    auto g = parse_graph6(line);
                    return std::pair{line.starts_with(">>graph6<<") ? line.substr(10) : line, std::move(g)};
                }
                catch (const InputError & e) {
                    throw InputError("line " + std::to_string(_line_no) + ": " + e.what());
                }
            }
            return std::nullopt;
        }

      private:
        std::istream & _in;
        std::size_t _line_no = 0;
    };

    // A graph file is an edge list when its first content line holds two integers.
    auto read_graph_file(const std::string & path, const std::string & format, std::istream & stdin_stream) -> Graph
    {
        Input input{path, stdin_stream};
        std::stringstream buffer;
        buffer << input.stream().rdbuf();
        auto text = buffer.str();

        std::string fmt = format;
        if (fmt == "auto") {
            std::istringstream lines{text};
            std::string first;
            while (std::getline(lines, first) && is_blank(first)) {
            }
            std::istringstream fields{first};
            long a = 0, b = 0;
            std::string extra;
            fmt = (fields >> a >> b) && ! (fields >> extra) ? "edgelist" : "graph6";
        }

        std::istringstream in{text};
        if (fmt == "edgelist")
            return read_edge_list(in);
        if (fmt != "graph6")
            throw InputError("unknown graph format \"" + fmt + "\"");
        Graph6Reader reader{in};
        auto item = reader.next();
        if (! item)
            throw InputError("\"" + path + "\" holds no graph");
        return std::move(item->second);
    }

    auto read_partition_file(const std::string & path, std::istream & stdin_stream) -> std::pair<int, Partition>
    {
        Input input{path, stdin_stream};
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(input.stream());
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(std::string{"partition JSON: "} + e.what());
        }
        if (! doc.is_object() || ! doc.contains("n") || ! doc["n"].is_number_integer() || ! doc.contains("parts") ||
            ! doc["parts"].is_array())
            throw InputError("partition JSON must look like {\"n\": <int>, \"parts\": [[v, ...], ...]}");

        Partition p;
        for (auto & part : doc["parts"]) {
            if (! part.is_array())
                throw InputError("partition JSON: every part must be an array of vertices");
            VertexSet s;
            for (auto & v : part) {
                if (! v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= max_order)
                    throw InputError("partition JSON: vertex " + v.dump() + " is not an integer in [0, 64)");
                auto vertex = v.get<Vertex>();
                if (s.contains(vertex))
                    throw InputError("partition JSON: vertex " + std::to_string(vertex) + " listed twice in one part");
                s.insert(vertex);
            }
            p.parts.push_back(s);
        }
        return {doc["n"].get<int>(), std::move(p)};
    }

    auto env_limit_n() -> std::optional<int>
    {
        auto * value = std::getenv("DCOAL_LIMIT_N");
        if (! value || ! *value)
            return std::nullopt;
        char * end = nullptr;
        long n = std::strtol(value, &end, 10);
        if (*end != '\0' || n < 1 || n > max_order)
            throw InputError("DCOAL_LIMIT_N must be an integer in [1, 64]");
        return static_cast<int>(n);
    }

    auto split_list(const std::string & list) -> std::vector<std::string>
    {
        std::vector<std::string> items;
        std::istringstream in{list};
        std::string item;
        while (std::getline(in, item, ','))
            items.push_back(item);
        return items;
    }

    // Flags that select the graphs of gen and scan.
    struct SourceFlags {
        std::string family;
        std::string input;
        std::optional<int> n, n_min, n_max, r, s, count;
        int s_min = 1;
        std::string p = "0.5";
        std::uint64_t seed = 0;

        auto add_to(CLI::App & cmd) -> void
        {
            cmd.add_option("--family", family, "path|cycle|complete|complete-bipartite|star|random|all-labeled");
            cmd.add_option("--n", n, "order of a single graph");
            cmd.add_option("--n-min", n_min, "smallest order of a sweep");
            cmd.add_option("--n-max", n_max, "largest order of a sweep");
            cmd.add_option("--r", r, "larger part of K_{r,s}");
            cmd.add_option("--s", s, "smaller part of K_{r,s}");
            cmd.add_option("--s-min", s_min, "smallest part size in a complete-bipartite sweep");
            cmd.add_option("--p", p, "edge probability (comma list for random sweeps)");
            cmd.add_option("--seed", seed, "random seed");
            cmd.add_option("--count", count, "number of random graphs");
        }

        auto order_range() const -> std::pair<int, int>
        {
            if (n)
                return {*n, *n};
            if (n_min && n_max)
                return {*n_min, *n_max};
            throw InputError("--family " + family + " needs --n or both --n-min and --n-max");
        }

        auto probabilities() const -> std::vector<double>
        {
            std::vector<double> ps;
            for (auto & item : split_list(p)) {
                try {
                    std::size_t used = 0;
                    ps.push_back(std::stod(item, &used));
                    if (used != item.size())
                        throw std::invalid_argument(item);
                }
                catch (const std::logic_error &) {
                    throw InputError("--p: \"" + item + "\" is not a number");
                }
            }
            if (ps.empty())
                throw InputError("--p needs at least one probability");
            return ps;
        }
    };

    using GraphStream = std::function<std::optional<std::pair<std::string, Graph>>()>;

    auto from_vector(std::vector<std::pair<std::string, Graph>> items) -> GraphStream
    {
        auto shared = std::make_shared<std::vector<std::pair<std::string, Graph>>>(std::move(items));
        auto index = std::make_shared<std::size_t>(0);
        return [shared, index]() -> std::optional<std::pair<std::string, Graph>> {
            if (*index >= shared->size())
                return std::nullopt;
            return std::move((*shared)[(*index)++]);
        };
    }

    auto make_source(const SourceFlags & f, std::istream & stdin_stream, std::shared_ptr<Input> & keep) -> GraphStream
    {
        if (! f.input.empty()) {
            if (! f.family.empty())
                throw InputError("--input and --family are mutually exclusive");
            keep = std::make_shared<Input>(f.input, stdin_stream);
            auto reader = std::make_shared<Graph6Reader>(keep->stream());
            return [reader] { return reader->next(); };
        }
        if (f.family.empty())
            throw InputError("choose a source with --family or --input");

        if (f.family == "all-labeled") {
            auto [lo, hi] = f.order_range();
            if (hi > LabeledGraphEnumerator::max_n)
                throw ResourceLimitError("all-labeled is limited to n <= 6; pipe a graph6 stream from geng instead");
            auto order = std::make_shared<int>(lo);
            auto gen = std::make_shared<LabeledGraphEnumerator>(lo);
            return [order, gen, hi]() -> std::optional<std::pair<std::string, Graph>> {
                while (true) {
                    if (auto g = gen->next())
                        return std::pair{to_graph6(*g), std::move(*g)};
                    if (++*order > hi)
                        return std::nullopt;
                    *gen = LabeledGraphEnumerator{*order};
                }
            };
        }

        if (f.family == "random") {
            auto ps = f.probabilities();
            std::vector<Graph> graphs;
            if (f.count) {
                auto [lo, hi] = f.order_range();
                graphs = random_corpus(*f.count, lo, hi, ps, f.seed);
            }
            else {
                if (! f.n)
                    throw InputError("--family random needs --n (or --count with an order range)");
                if (ps.size() != 1)
                    throw InputError("a single random graph takes a single --p");
                graphs.push_back(gen_random(*f.n, ps.front(), f.seed));
            }
            std::vector<std::pair<std::string, Graph>> items;
            for (auto & g : graphs)
                items.emplace_back(to_graph6(g), std::move(g));
            return from_vector(std::move(items));
        }

        auto family = parse_family(f.family);
        if (! family)
            throw InputError("unknown family \"" + f.family + "\"");

        std::vector<std::pair<std::string, Graph>> items;
        if (*family == Family::complete_bipartite) {
            if (f.r && f.s)
                items.emplace_back("complete_bipartite-" + std::to_string(*f.r) + "-" + std::to_string(*f.s),
                    make_complete_bipartite(*f.r, *f.s));
            else {
                auto [lo, hi] = f.order_range();
                for (int total = lo; total <= hi; ++total)
                    for (int s = std::max(f.s_min, 1); 2 * s <= total; ++s)
                        items.emplace_back(
                            "complete_bipartite-" + std::to_string(total - s) + "-" + std::to_string(s),
                            make_complete_bipartite(total - s, s));
            }
        }
        else {
            auto [lo, hi] = f.order_range();
            for (int order = lo; order <= hi; ++order)
                items.emplace_back(std::string{family_name(*family)} + "-" + std::to_string(order),
                    make_family(*family, order));
        }
        return from_vector(std::move(items));
    }

    auto resolve_limits(std::optional<int> limit_n, std::uint64_t budget) -> SearchLimits
    {
        SearchLimits limits;
        if (auto env = env_limit_n())
            limits.max_order = *env;
        if (limit_n)
            limits.max_order = *limit_n;
        limits.node_budget = budget;
        return limits;
    }

    auto cmd_gen(const SourceFlags & flags, std::istream & in, std::ostream & out) -> int
    {
        std::shared_ptr<Input> keep;
        auto source = make_source(flags, in, keep);
        while (auto item = source())
            out << to_graph6(item->second) << '\n';
        return exit_ok;
    }

    struct SolveFlags {
        std::string input = "-";
        std::string format = "graph6";
        std::string what = "all";
        std::optional<int> limit_n;
        std::uint64_t budget = 0;
        bool timing = false;
    };

    auto solve_one(const Graph & g, const std::string & id, bool want_gamma, bool want_domatic, bool want_dc,
        const SearchLimits & limits, bool timing) -> ordered_json
    {
        auto started = std::chrono::steady_clock::now();
        bool isolated = g.order() == 0 || degree_stats(g).isolated_present;

        ordered_json j;
        j["graph"] = id;
        ordered_json stats = ordered_json::object();
        if (want_gamma) {
            if (isolated)
                j["gamma_x2"] = nullptr;
            else {
                auto r = gamma_x2(g);
                j["gamma_x2"] = r.value;
                j["gamma_x2_witness"] = set_json(r.witness);
                stats["gamma_x2_nodes"] = r.nodes_explored;
            }
        }
        if (want_domatic) {
            if (isolated)
                j["d_x2"] = nullptr;
            else {
                auto r = d_x2(g);
                j["d_x2"] = r.value;
                j["d_x2_witness"] = partition_json(r.witness);
                stats["d_x2_nodes"] = r.nodes_explored;
            }
        }
        if (want_dc) {
            auto r = dc_number(g, limits);
            j["dc"] = r.value;
            if (r.witness)
                j["dc_witness"] = partition_json(*r.witness);
            stats["dc_nodes"] = r.nodes_explored;
        }
        if (timing)
            stats["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        j["stats"] = stats;
        return j;
    }

    auto cmd_solve(const SolveFlags & flags, std::istream & in, std::ostream & out) -> int
    {
        bool want_gamma = false, want_domatic = false, want_dc = false;
        for (auto & item : split_list(flags.what)) {
            if (item == "gamma2")
                want_gamma = true;
            else if (item == "domatic2")
                want_domatic = true;
            else if (item == "dc")
                want_dc = true;
            else if (item == "all")
                want_gamma = want_domatic = want_dc = true;
            else
                throw InputError("--what: unknown invariant \"" + item + "\"");
        }
        auto limits = resolve_limits(flags.limit_n, flags.budget);

        Input input{flags.input, in};
        if (flags.format == "edgelist") {
            auto & stream = input.stream();
            while (stream >> std::ws, stream.peek() != std::char_traits<char>::eof()) {
                auto g = read_edge_list(stream);
                out << solve_one(g, to_graph6(g), want_gamma, want_domatic, want_dc, limits, flags.timing).dump()
                    << '\n';
            }
            return exit_ok;
        }
        if (flags.format != "graph6")
            throw InputError("--format must be graph6 or edgelist");

        Graph6Reader reader{input.stream()};
        while (auto item = reader.next())
            out << solve_one(item->second, item->first, want_gamma, want_domatic, want_dc, limits, flags.timing).dump()
                << '\n';
        return exit_ok;
    }

    struct VerifyFlags {
        std::string graph;
        std::string partition;
        std::string mode = "dc";
        std::string format = "auto";
    };

    auto cmd_verify(const VerifyFlags & flags, std::istream & in, std::ostream & out) -> int
    {
        if (flags.mode != "dc" && flags.mode != "domatic2")
            throw InputError("--mode must be dc or domatic2");
        auto g = read_graph_file(flags.graph, flags.format, in);
        auto [n, p] = read_partition_file(flags.partition, in);

        ordered_json j;
        j["mode"] = flags.mode;
        std::optional<std::string> defect;
        if (n != g.order())
            defect = "partition is for n = " + std::to_string(n) + " but the graph has n = " + std::to_string(g.order());
        else
            defect = structural_defect(p, g.order());
        if (defect) {
            j["valid"] = false;
            j["reason"] = "structural";
            j["detail"] = *defect;
            out << j.dump() << '\n';
            return exit_input_error;
        }

        if (flags.mode == "domatic2") {
            auto failing = ordered_json::array();
            for (std::size_t i = 0; i < p.parts.size(); ++i)
                if (! is_double_dominating(g, p.parts[i]))
                    failing.push_back(i);
            bool valid = failing.empty();
            j["valid"] = valid;
            j["part_count"] = p.parts.size();
            j["non_dds_parts"] = failing;
            out << j.dump() << '\n';
            return valid ? exit_ok : exit_invalid;
        }

        auto v = validate_dc_partition(g, p);
        j["valid"] = v.valid;
        j["reason"] = reason_name(v.reason);
        j["offending_part"] = v.offending_part ? ordered_json(*v.offending_part) : ordered_json(nullptr);
        j["part_count"] = p.parts.size();
        j["partner_map"] = v.partner_map;
        if (v.valid)
            j["max_partners"] = max_coalitions_per_part(g, p);
        out << j.dump() << '\n';
        return v.valid ? exit_ok : exit_invalid;
    }

    auto cmd_construct(const std::string & graph_path, const std::string & format, std::istream & in,
        std::ostream & out, std::ostream & err) -> int
    {
        auto g = read_graph_file(graph_path, format, in);
        if (g.order() == 0 || degree_stats(g).isolated_present) {
            err << "dcoal: graph has an isolated vertex, so DC(G) = 0 and no dc-partition exists\n";
            return exit_invalid;
        }
        auto built = construct_dc_partition_traced(g);
        if (! validate_dc_partition(g, built.partition).valid) {
            err << "dcoal: constructed partition failed validation\n";
            return exit_invalid;
        }

        ordered_json j;
        j["n"] = g.order();
        j["parts"] = partition_json(built.partition);
        j["part_count"] = built.partition.size();
        j["d_x2"] = built.domatic_number;
        j["floor"] = 2 * built.domatic_number;
        j["branch"] = branch_name(built.branch);
        out << j.dump() << '\n';
        return exit_ok;
    }

    struct ScanFlags {
        std::string check = "all";
        std::string csv;
        unsigned jobs = 1;
        bool sort = false;
        bool strict = false;
        bool timing = false;
        std::optional<int> limit_n;
        std::uint64_t budget = 0;
    };

    auto cmd_scan(const SourceFlags & source_flags, const ScanFlags & flags, std::istream & in, std::ostream & out,
        std::ostream & err) -> int
    {
        ScanOptions options;
        options.checks = parse_scan_checks(flags.check);
        options.limits = resolve_limits(flags.limit_n, flags.budget);
        options.timing = flags.timing;

        std::shared_ptr<Input> keep;
        auto source = make_source(source_flags, in, keep);

        std::ofstream csv_file;
        std::ostream * csv = &out;
        if (! flags.csv.empty() && flags.csv != "-") {
            csv_file.open(flags.csv);
            if (! csv_file)
                throw InputError("cannot write \"" + flags.csv + "\"");
            csv = &csv_file;
        }

        *csv << scan_csv_header << '\n';
        auto summary = run_scan(source, options, std::max(flags.jobs, 1U), [&](const ScanRecord & r) {
            *csv << to_csv_row(r) << '\n';
            for (auto & note : r.notes)
                err << "note: " << r.graph_id << ": " << note << '\n';
            for (auto & v : r.violations)
                err << "violation: " << r.graph_id << " (graph6 " << r.graph6 << "): " << v << '\n';
        });
        csv->flush();

        err << "scanned " << summary.records << " graphs, " << summary.violations << " violations, " << summary.skipped
            << " skipped\n";
        if (summary.violations > 0)
            return exit_invalid;
        if (flags.strict && summary.skipped > 0)
            return exit_resource_limit;
        return exit_ok;
    }
}

auto run(int argc, const char * const * argv, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Exact double domination, double domatic and double coalition numbers of small graphs", "dcoal"};
    app.require_subcommand(1);

    SourceFlags gen_source;
    auto * gen = app.add_subcommand("gen", "write graphs as graph6, one per line");
    gen_source.add_to(*gen);

    SolveFlags solve_flags;
    auto * solve = app.add_subcommand("solve", "compute invariants, one JSON object per input graph");
    solve->add_option("--input", solve_flags.input, "graph file, or - for standard input");
    solve->add_option("--format", solve_flags.format, "graph6 | edgelist");
    solve->add_option("--what", solve_flags.what, "comma list of gamma2, domatic2, dc, all");
    solve->add_option("--limit-n", solve_flags.limit_n, "largest order the DC solver accepts");
    solve->add_option("--budget", solve_flags.budget, "DC search node budget, 0 for unlimited");
    solve->add_flag("--timing", solve_flags.timing, "report elapsed time in stats");

    VerifyFlags verify_flags;
    auto * verify = app.add_subcommand("verify-partition", "check a partition against a graph");
    verify->add_option("--graph", verify_flags.graph, "graph file (graph6 or edge list)")->required();
    verify->add_option("--partition", verify_flags.partition, "partition JSON file")->required();
    verify->add_option("--mode", verify_flags.mode, "dc | domatic2");
    verify->add_option("--format", verify_flags.format, "auto | graph6 | edgelist");

    std::string construct_graph, construct_format = "auto";
    auto * construct = app.add_subcommand("construct", "build a dc-partition from a maximum double domatic partition");
    construct->add_option("--graph", construct_graph, "graph file (graph6 or edge list)")->required();
    construct->add_option("--format", construct_format, "auto | graph6 | edgelist");

    SourceFlags scan_source;
    ScanFlags scan_flags;
    auto * scan = app.add_subcommand("scan", "solve a corpus and check every bound and closed form");
    scan_source.add_to(*scan);
    scan->add_option("--input", scan_source.input, "graph6 stream, or - for standard input");
    scan->add_option("--check", scan_flags.check, "comma list of bounds, closed-forms, construct, lemma-partner-cap, all");
    scan->add_option("--csv", scan_flags.csv, "CSV output path (default standard output)");
    scan->add_option("--jobs", scan_flags.jobs, "graphs solved concurrently");
    scan->add_flag("--sort", scan_flags.sort, "emit records in input order (always the case)");
    scan->add_flag("--strict", scan_flags.strict, "exit 3 if any graph was skipped");
    scan->add_flag("--timing", scan_flags.timing, "fill runtime_ms (makes output run dependent)");
    scan->add_option("--limit-n", scan_flags.limit_n, "largest order the DC solver accepts");
    scan->add_option("--budget", scan_flags.budget, "DC search node budget, 0 for unlimited");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (gen->parsed())
            return cmd_gen(gen_source, in, out);
        if (solve->parsed())
            return cmd_solve(solve_flags, in, out);
        if (verify->parsed())
            return cmd_verify(verify_flags, in, out);
        if (construct->parsed())
            return cmd_construct(construct_graph, construct_format, in, out, err);
        if (scan->parsed())
            return cmd_scan(scan_source, scan_flags, in, out, err);
    }
    catch (const InputError & e) {
        err << "dcoal: " << e.what() << '\n';
        return exit_input_error;
    }
    catch (const ResourceLimitError & e) {
        err << "dcoal: " << e.what() << '\n';
        return exit_resource_limit;
    }
    catch (const NoDdsError & e) {
        err << "dcoal: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const ContractError & e) {
        err << "dcoal: internal check failed: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_input_error;
}

} // namespace dcoal::cli
