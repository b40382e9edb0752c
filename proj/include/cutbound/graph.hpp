#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cutbound/error.hpp"

namespace cutbound {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId no_vertex = -1;
inline constexpr EdgeId no_edge = -1;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;

    VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Simple undirected graph with nonnegative edge weights.
///
/// Edge ids are positions in the constructor's edge list; endpoints are
/// normalized so that u < v. Adjacency lists are sorted by neighbor id,
/// which every traversal in the library relies on for determinism.
/// Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    WeightedGraph(VertexId vertex_count, std::vector<Edge> edges)
        : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(std::max<VertexId>(vertex_count, 0)))
    {
        require(vertex_count >= 0, Errc::invalid_parameter, "negative vertex count");
        integer_weights_ = true;
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            Edge& e = edges_[id];
            require(e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count, Errc::vertex_out_of_range,
                "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " outside [0, " + std::to_string(vertex_count) + ")");
            require(e.u != e.v, Errc::self_loop, "self-loop at vertex " + std::to_string(e.u));
            require(std::isfinite(e.weight), Errc::invalid_parameter, "non-finite weight");
            require(e.weight >= 0.0, Errc::negative_weight,
                "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " has negative weight");
            if (e.u > e.v)
                std::swap(e.u, e.v);
            auto [it, inserted] = index_.emplace(key(e.u, e.v), static_cast<EdgeId>(id));
            require(inserted, Errc::duplicate_edge, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " listed twice");
            adjacency_[e.u].push_back({ e.v, static_cast<EdgeId>(id) });
            adjacency_[e.v].push_back({ e.u, static_cast<EdgeId>(id) });
            total_weight_ += e.weight;
            if (e.weight != std::floor(e.weight) || e.weight > 9.0e15)
                integer_weights_ = false;
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
            max_degree_ = std::max(max_degree_, static_cast<int>(list.size()));
        }
    }

    VertexId vertex_count() const { return vertex_count_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }
    double weight(EdgeId id) const { return edge(id).weight; }
    std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const { return max_degree_; }
    double total_weight() const { return total_weight_; }

    /// True when every weight is a (moderately sized) integer, so sums of
    /// weights are exact in double precision and exact comparisons are legal.
    bool integer_weights() const { return integer_weights_; }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const
    {
        if (a > b)
            std::swap(a, b);
        auto it = index_.find(key(a, b));
        if (it == index_.end())
            return std::nullopt;
        return it->second;
    }

    bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

    double weight_of(std::span<const EdgeId> ids) const
    {
        double total = 0.0;
        for (EdgeId id : ids)
            total += weight(id);
        return total;
    }

private:
    static std::uint64_t key(VertexId a, VertexId b)
    {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    VertexId vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
    double total_weight_ = 0.0;
    int max_degree_ = 0;
    bool integer_weights_ = true;
};

inline constexpr int unbounded_girth = std::numeric_limits<int>::max();

struct GraphStats {
    double total_weight = 0.0;
    int max_degree = 0;
    int girth = unbounded_girth; // unbounded_girth for forests
    bool triangle_free = true;
    bool connected = true;
};

/// Length of a shortest cycle, computed by a BFS from every vertex.
inline int girth(const WeightedGraph& g)
{
    const VertexId n = g.vertex_count();
    int best = unbounded_girth;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<EdgeId> via(static_cast<std::size_t>(n));
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<VertexId> queue;
        dist[s] = 0;
        via[s] = no_edge;
        queue.push(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop();
            if (2 * dist[u] >= best)
                break;
            for (const Incidence& inc : g.neighbors(u)) {
                if (inc.edge == via[u])
                    continue;
                if (dist[inc.neighbor] < 0) {
                    dist[inc.neighbor] = dist[u] + 1;
                    via[inc.neighbor] = inc.edge;
                    queue.push(inc.neighbor);
                } else {
                    best = std::min(best, dist[u] + dist[inc.neighbor] + 1);
                }
            }
        }
    }
    return best;
}

/// Component label per vertex (labels are assigned in order of the smallest
/// vertex of each component) together with the number of components.
struct Components {
    std::vector<int> label;
    int count = 0;

    std::vector<std::vector<VertexId>> members() const
    {
        std::vector<std::vector<VertexId>> out(static_cast<std::size_t>(count));
        for (std::size_t v = 0; v < label.size(); ++v)
            out[static_cast<std::size_t>(label[v])].push_back(static_cast<VertexId>(v));
        return out;
    }
};

inline Components connected_components(const WeightedGraph& g)
{
    Components c;
    c.label.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (c.label[s] >= 0)
            continue;
        c.label[s] = c.count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (const Incidence& inc : g.neighbors(u)) {
                if (c.label[inc.neighbor] < 0) {
                    c.label[inc.neighbor] = c.count;
                    stack.push_back(inc.neighbor);
                }
            }
        }
        ++c.count;
    }
    return c;
}

inline bool is_connected(const WeightedGraph& g)
{
    return g.vertex_count() <= 1 || connected_components(g).count == 1;
}

inline bool has_triangle(const WeightedGraph& g)
{
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i].neighbor == b[j].neighbor)
                return true;
            if (a[i].neighbor < b[j].neighbor)
                ++i;
            else
                ++j;
        }
    }
    return false;
}

inline GraphStats stats(const WeightedGraph& g)
{
    GraphStats s;
    s.total_weight = g.total_weight();
    s.max_degree = g.max_degree();
    s.girth = girth(g);
    s.triangle_free = s.girth >= 4;
    s.connected = is_connected(g);
    return s;
}

inline void require_connected(const WeightedGraph& g, std::string_view who)
{
    require(is_connected(g), Errc::disconnected, std::string(who) + " requires a connected graph");
}

inline void require_triangle_free(const WeightedGraph& g, std::string_view who)
{
    require(!has_triangle(g), Errc::triangle_found, std::string(who) + " requires a triangle-free graph");
}

inline void require_subcubic(const WeightedGraph& g, std::string_view who)
{
    require(g.max_degree() <= 3, Errc::precondition_violated,
        std::string(who) + " requires maximum degree at most 3, got " + std::to_string(g.max_degree()));
}

/// G[vertices] with local ids 0..k-1 in the order given, plus maps back.
struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<VertexId> to_parent_vertex;
    std::vector<EdgeId> to_parent_edge;
};

inline InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const VertexId> vertices)
{
    std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<VertexId>(i);
    InducedSubgraph out;
    out.to_parent_vertex.assign(vertices.begin(), vertices.end());
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (local[e.u] != no_vertex && local[e.v] != no_vertex) {
            edges.push_back({ local[e.u], local[e.v], e.weight });
            out.to_parent_edge.push_back(id);
        }
    }
    out.graph = WeightedGraph(static_cast<VertexId>(vertices.size()), std::move(edges));
    return out;
}

} // namespace cutbound
