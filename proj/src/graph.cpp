#include <dcoal/errors.hpp>
#include <dcoal/graph.hpp>

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

namespace dcoal {

Graph::Graph(int n, std::span<const Edge> edges) : _n(n)
{
    if (n < 0 || n > max_order)
        throw InputError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(max_order) + "]");

    _adj.assign(static_cast<std::size_t>(n), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.." +
                std::to_string(n - 1));
        if (u == v)
            throw InputError("self loop at vertex " + std::to_string(u));
        if (! _adj[u].contains(v)) {
            _adj[u].insert(v);
            _adj[v].insert(u);
            ++_edge_count;
        }
    }
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> result;
    result.reserve(static_cast<std::size_t>(_edge_count));
    for (Vertex v = 1; v < _n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (_adj[u].contains(v))
                result.emplace_back(u, v);
    return result;
}

auto degree_stats(const Graph & g) -> DegreeStats
{
    if (g.order() == 0)
        throw InputError("degree statistics are undefined for the null graph");

    DegreeStats s{g.degree(0), g.degree(0), false};
    for (Vertex v = 1; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    s.isolated_present = s.min_degree == 0;
    return s;
}

auto from_edge_list(int n, std::span<const Edge> edges) -> Graph
{
    return Graph{n, edges};
}

namespace {
    constexpr std::string_view graph6_header = ">>graph6<<";
    constexpr int graph6_bias = 63;

    auto graph6_byte(std::string_view rec, std::size_t pos) -> int
    {
        auto c = static_cast<unsigned char>(rec[pos]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 character", pos);
        return c - graph6_bias;
    }
}

auto parse_graph6(std::string_view line) -> Graph
{
    std::size_t start = 0;
    if (line.starts_with(graph6_header))
        start = graph6_header.size();

    auto end = line.find_last_not_of(" \t\r\n");
    std::string_view rec = (end == std::string_view::npos || end < start) ? std::string_view{} : line.substr(0, end + 1);

    if (rec.size() <= start)
        throw ParseError("empty graph6 record", start);

    std::size_t pos = start;
    long n = 0;
    if (rec[pos] == '~') {
        if (pos + 1 < rec.size() && rec[pos + 1] == '~')
            throw ParseError("graph6 orders above 258047 are not supported", pos);
        if (rec.size() < pos + 4)
            throw ParseError("truncated graph6 length prefix", rec.size());
        for (int i = 1; i <= 3; ++i)
            n = (n << 6) | graph6_byte(rec, pos + static_cast<std::size_t>(i));
        if (n < 63)
            throw ParseError("non-canonical graph6 length prefix", pos);
        pos += 4;
    }
    else {
        n = graph6_byte(rec, pos);
        pos += 1;
    }
    if (n > max_order)
        throw ParseError("graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                std::to_string(max_order),
            start);

    std::size_t pair_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    std::size_t byte_count = (pair_count + 5) / 6;
    if (rec.size() - pos != byte_count)
        throw ParseError("graph6 body has " + std::to_string(rec.size() - pos) + " bytes, expected " +
                std::to_string(byte_count),
            rec.size() < pos + byte_count ? rec.size() : pos + byte_count);

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++k) {
            auto byte = graph6_byte(rec, pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(u, v);
        }

    if (byte_count > 0) {
        auto last = graph6_byte(rec, pos + byte_count - 1);
        auto used = pair_count - (byte_count - 1) * 6;
        if (last & ((1 << (6 - used)) - 1))
            throw ParseError("nonzero graph6 padding bits", pos + byte_count - 1);
    }

    return Graph{static_cast<int>(n), edges};
}

auto to_graph6(const Graph & g) -> std::string
{
    std::string out;
    auto n = g.order();
    if (n <= 62)
        out.push_back(static_cast<char>(n + graph6_bias));
    else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3F) + graph6_bias));
    }

    int acc = 0, filled = 0;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + graph6_bias));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + graph6_bias));
    return out;
}

auto read_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;

    auto next_content_line = [&](std::istringstream & fields) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            fields.clear();
            fields.str(line);
            return true;
        }
        return false;
    };

    std::istringstream fields;
    long n = 0, m = 0;
    if (! next_content_line(fields) || ! (fields >> n >> m) || n < 0 || m < 0)
        throw InputError("edge list: line " + std::to_string(line_no) + ": expected header \"n m\"");
    if (n > max_order)
        throw InputError("edge list: order " + std::to_string(n) + " exceeds the supported maximum of " +
            std::to_string(max_order));

    std::vector<Edge> edges;
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (! next_content_line(fields) || ! (fields >> u >> v))
            throw InputError("edge list: line " + std::to_string(line_no) + ": expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw InputError("edge list: line " + std::to_string(line_no) + ": invalid edge " + std::to_string(u) +
                " " + std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph{static_cast<int>(n), edges};
}

auto write_edge_list(std::ostream & out, const Graph & g) -> void
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

namespace {
    constexpr std::array<std::pair<Family, std::string_view>, 5> family_names{{
        {Family::path, "path"},
        {Family::cycle, "cycle"},
        {Family::complete, "complete"},
        {Family::complete_bipartite, "complete_bipartite"},
        {Family::star, "star"},
    }};
}

auto family_name(Family f) -> std::string_view
{
    for (auto & [fam, name] : family_names)
        if (fam == f)
            return name;
    return "unknown";
}

auto parse_family(std::string_view name) -> std::optional<Family>
{
    for (auto & [fam, fam_name] : family_names)
        if (fam_name == name)
            return fam;
    if (name == "complete-bipartite")
        return Family::complete_bipartite;
    return std::nullopt;
}

namespace {
    auto require(bool ok, std::string_view family, const std::string & what) -> void
    {
        if (! ok)
            throw InputError(std::string{family} + ": " + what);
    }
}

auto make_path(int n) -> Graph
{
    require(n >= 1 && n <= max_order, "path", "need 1 <= n <= 64");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return Graph{n, edges};
}

auto make_cycle(int n) -> Graph
{
    require(n >= 3 && n <= max_order, "cycle", "need 3 <= n <= 64");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    edges.emplace_back(n - 1, 0);
    return Graph{n, edges};
}

auto make_complete(int n) -> Graph
{
    require(n >= 1 && n <= max_order, "complete", "need 1 <= n <= 64");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            edges.emplace_back(u, v);
    return Graph{n, edges};
}

auto make_complete_bipartite(int r, int s) -> Graph
{
    require(r >= 1 && s >= 1 && r + s <= max_order, "complete_bipartite", "need r, s >= 1 and r + s <= 64");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < r; ++u)
        for (Vertex v = r; v < r + s; ++v)
            edges.emplace_back(u, v);
    return Graph{r + s, edges};
}

auto make_star(int n) -> Graph
{
    require(n >= 1 && n <= max_order, "star", "need 1 <= n <= 64");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Graph{n, edges};
}

auto make_family(Family f, int a, int b) -> Graph
{
    switch (f) {
    case Family::path: return make_path(a);
    case Family::cycle: return make_cycle(a);
    case Family::complete: return make_complete(a);
    case Family::complete_bipartite: return make_complete_bipartite(a, b);
    case Family::star: return make_star(a);
    }
    throw InputError("unknown graph family");
}

auto SplitMix64::next() -> std::uint64_t
{
    std::uint64_t z = (_state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

auto gen_random(int n, double p, std::uint64_t seed) -> Graph
{
    if (! (p >= 0.0 && p <= 1.0))
        throw InputError("edge probability must lie in [0, 1]");
    if (n < 0 || n > max_order)
        throw InputError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(max_order) + "]");

    SplitMix64 rng{seed};
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) {
            double x = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
            if (x < p)
                edges.emplace_back(u, v);
        }
    return Graph{n, edges};
}

LabeledGraphEnumerator::LabeledGraphEnumerator(int n) : _n(n)
{
    if (n > max_n)
        throw ResourceLimitError("labelled enumeration is limited to n <= " + std::to_string(max_n) +
            "; pipe a graph6 stream from an external generator (e.g. geng) instead");
    if (n < 0)
        throw InputError("graph order must be nonnegative");
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            _pairs.emplace_back(u, v);
}

auto LabeledGraphEnumerator::next() -> std::optional<Graph>
{
    if (_mask >= total())
        return std::nullopt;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < _pairs.size(); ++i)
        if ((_mask >> i) & 1U)
            edges.push_back(_pairs[i]);
    ++_mask;
    return Graph{_n, edges};
}

auto enumerate_labeled_graphs(int n) -> std::vector<Graph>
{
    LabeledGraphEnumerator gen{n};
    std::vector<Graph> result;
    result.reserve(gen.total());
    while (auto g = gen.next())
        result.push_back(std::move(*g));
    return result;
}

} // namespace dcoal
