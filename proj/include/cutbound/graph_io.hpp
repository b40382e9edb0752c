#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cutbound/graph.hpp"

namespace cutbound {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out)
{
    if (!token.empty() && token.front() == '+')
        token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

inline std::string format_double(double value)
{
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

} // namespace detail

/// Parse the line-oriented edge-list format:
///
///     c <comment>
///     p <num_vertices> <num_edges>
///     e <u> <v> <weight>
///
/// Vertex ids are 0-based. Blank lines are ignored.
inline WeightedGraph load_graph(std::string_view text)
{
    bool have_header = false;
    long long declared_vertices = 0, declared_edges = 0;
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    int line_number = 0;

    auto fail = [&](Errc code, const std::string& message) {
        throw Error(code, "line " + std::to_string(line_number) + ": " + message);
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_number;

        auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == 'c')
            continue;
        if (tokens[0] == "p") {
            if (have_header)
                fail(Errc::malformed_line, "second header line");
            if (tokens.size() != 3 || !detail::parse_number(tokens[1], declared_vertices)
                || !detail::parse_number(tokens[2], declared_edges) || declared_vertices < 0 || declared_edges < 0
                || declared_vertices > std::numeric_limits<VertexId>::max())
                fail(Errc::malformed_line, "expected 'p <num_vertices> <num_edges>'");
            have_header = true;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_header)
                fail(Errc::malformed_line, "edge line before header");
            long long u = 0, v = 0;
            double w = 0.0;
            if (tokens.size() != 4 || !detail::parse_number(tokens[1], u) || !detail::parse_number(tokens[2], v)
                || !detail::parse_number(tokens[3], w) || !std::isfinite(w))
                fail(Errc::malformed_line, "expected 'e <u> <v> <weight>'");
            if (u < 0 || v < 0 || u >= declared_vertices || v >= declared_vertices)
                fail(Errc::vertex_out_of_range, "vertex id outside [0, " + std::to_string(declared_vertices) + ")");
            if (u == v)
                fail(Errc::self_loop, "self-loop at vertex " + std::to_string(u));
            if (w < 0.0)
                fail(Errc::negative_weight, "negative weight " + std::string(tokens[3]));
            const auto a = static_cast<std::uint64_t>(std::min(u, v));
            const auto b = static_cast<std::uint64_t>(std::max(u, v));
            if (!seen.insert((a << 32) | b).second)
                fail(Errc::duplicate_edge, "edge " + std::to_string(a) + " " + std::to_string(b) + " listed twice");
            edges.push_back({ static_cast<VertexId>(u), static_cast<VertexId>(v), w });
            continue;
        }
        fail(Errc::malformed_line, "unrecognized line '" + std::string(line) + "'");
    }
    if (!have_header)
        throw Error(Errc::malformed_line, "missing 'p' header line");
    if (static_cast<long long>(edges.size()) != declared_edges)
        throw Error(Errc::malformed_line,
            "header declares " + std::to_string(declared_edges) + " edges but " + std::to_string(edges.size()) + " were listed");
    return WeightedGraph(static_cast<VertexId>(declared_vertices), std::move(edges));
}

inline WeightedGraph load_graph_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::invalid_parameter, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_graph(buffer.str());
}

/// Same graph with edges sorted by (u, v); edge ids are renumbered.
inline WeightedGraph canonical(const WeightedGraph& g)
{
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    return WeightedGraph(g.vertex_count(), std::move(edges));
}

inline std::string save_graph(const WeightedGraph& g)
{
    std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    const WeightedGraph sorted = canonical(g);
    for (const Edge& e : sorted.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + detail::format_double(e.weight) + "\n";
    return out;
}

} // namespace cutbound
