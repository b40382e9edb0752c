#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutbound/cut.hpp"
#include "cutbound/graph.hpp"

namespace cutbound {

enum class TreeKind { dfs, arbitrary };

/// Spanning tree with one root, or two roots joined by a tree edge e*, and
/// per-vertex levels. With two roots, level(u) is the distance from the
/// nearer root and both roots sit on level 0.
struct RootedSpanningTree {
    std::vector<VertexId> parent;    // no_vertex at roots
    std::vector<EdgeId> parent_edge; // no_edge at roots
    std::vector<VertexId> roots;
    std::vector<int> level;
    std::vector<EdgeId> tree_edges; // ascending
    TreeKind kind = TreeKind::arbitrary;
    EdgeId root_edge = no_edge; // e* when rooted at an edge

    double weight(const WeightedGraph& g) const { return g.weight_of(tree_edges); }

    bool contains(EdgeId id) const { return std::binary_search(tree_edges.begin(), tree_edges.end(), id); }
};

namespace detail {

inline std::vector<std::vector<Incidence>> tree_adjacency(const WeightedGraph& g, std::span<const EdgeId> tree_edges)
{
    std::vector<std::vector<Incidence>> adj(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId id : tree_edges) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({ e.v, id });
        adj[e.v].push_back({ e.u, id });
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    return adj;
}

/// BFS over tree edges from the given roots; fills parent, level.
inline void assign_levels(const WeightedGraph& g, RootedSpanningTree& t)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    auto adj = tree_adjacency(g, t.tree_edges);
    t.parent.assign(n, no_vertex);
    t.parent_edge.assign(n, no_edge);
    t.level.assign(n, -1);
    std::vector<VertexId> queue;
    for (VertexId r : t.roots) {
        t.level[r] = 0;
        queue.push_back(r);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (const Incidence& inc : adj[u]) {
            if (t.level[inc.neighbor] >= 0)
                continue;
            t.level[inc.neighbor] = t.level[u] + 1;
            t.parent[inc.neighbor] = u;
            t.parent_edge[inc.neighbor] = inc.edge;
            queue.push_back(inc.neighbor);
        }
    }
    require(queue.size() == n, Errc::disconnected, "tree edges do not span the graph");
}

} // namespace detail

/// Depth-first search tree exploring neighbors in ascending vertex id.
inline RootedSpanningTree dfs_tree(const WeightedGraph& g, VertexId root = 0)
{
    require(root >= 0 && root < std::max<VertexId>(g.vertex_count(), 1), Errc::invalid_parameter, "root out of range");
    require_connected(g, "dfs_tree");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    RootedSpanningTree t;
    t.kind = TreeKind::dfs;
    t.parent.assign(n, no_vertex);
    t.parent_edge.assign(n, no_edge);
    t.level.assign(n, -1);
    if (n == 0)
        return t;
    t.roots = { root };
    std::vector<std::pair<VertexId, std::size_t>> stack { { root, 0 } };
    t.level[root] = 0;
    while (!stack.empty()) {
        auto& [u, next] = stack.back();
        auto nbrs = g.neighbors(u);
        while (next < nbrs.size() && t.level[nbrs[next].neighbor] >= 0)
            ++next;
        if (next == nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const Incidence inc = nbrs[next++];
        t.parent[inc.neighbor] = u;
        t.parent_edge[inc.neighbor] = inc.edge;
        t.level[inc.neighbor] = t.level[u] + 1;
        t.tree_edges.push_back(inc.edge);
        stack.emplace_back(inc.neighbor, 0);
    }
    std::sort(t.tree_edges.begin(), t.tree_edges.end());
    return t;
}

/// Rooted tree from an explicit edge list; validates that the edges span G
/// without cycles.
inline RootedSpanningTree tree_from_edges(const WeightedGraph& g, std::vector<EdgeId> edges, VertexId root = 0, TreeKind kind = TreeKind::arbitrary)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (EdgeId id : edges)
        require(id >= 0 && id < g.edge_count(), Errc::invalid_parameter, "tree edge id out of range");
    require(g.vertex_count() == 0 || static_cast<VertexId>(edges.size()) == g.vertex_count() - 1, Errc::invalid_parameter,
        "a spanning tree needs exactly n - 1 edges");
    RootedSpanningTree t;
    t.kind = kind;
    t.tree_edges = std::move(edges);
    if (g.vertex_count() > 0) {
        require(root >= 0 && root < g.vertex_count(), Errc::invalid_parameter, "root out of range");
        t.roots = { root };
        detail::assign_levels(g, t);
    }
    return t;
}

namespace detail {

inline RootedSpanningTree kruskal(const WeightedGraph& g, bool maximize)
{
    require_connected(g, maximize ? "max_spanning_tree" : "min_spanning_tree");
    std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return maximize ? g.weight(a) > g.weight(b) : g.weight(a) < g.weight(b);
    });
    std::vector<VertexId> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<EdgeId> chosen;
    for (EdgeId id : order) {
        VertexId a = find(g.edge(id).u), b = find(g.edge(id).v);
        if (a == b)
            continue;
        parent[a] = b;
        chosen.push_back(id);
    }
    return tree_from_edges(g, std::move(chosen), 0, TreeKind::arbitrary);
}

} // namespace detail

/// Kruskal, ties broken by edge id; rooted at vertex 0.
inline RootedSpanningTree min_spanning_tree(const WeightedGraph& g) { return detail::kruskal(g, false); }
inline RootedSpanningTree max_spanning_tree(const WeightedGraph& g) { return detail::kruskal(g, true); }

/// Re-levels T from both endpoints of the tree edge e*.
inline RootedSpanningTree root_at_edge(const WeightedGraph& g, RootedSpanningTree t, EdgeId e_star)
{
    require(t.contains(e_star), Errc::precondition_violated, "e* must be a tree edge");
    t.roots = { g.edge(e_star).u, g.edge(e_star).v };
    t.root_edge = e_star;
    detail::assign_levels(g, t);
    return t;
}

/// Distances inside a spanning tree, answered by climbing from both ends.
class TreePaths {
public:
    TreePaths(const WeightedGraph& g, const RootedSpanningTree& t)
    {
        RootedSpanningTree single;
        single.tree_edges = t.tree_edges;
        single.roots = { t.roots.empty() ? 0 : t.roots.front() };
        if (g.vertex_count() > 0)
            detail::assign_levels(g, single);
        parent_ = std::move(single.parent);
        depth_ = std::move(single.level);
    }

    int distance(VertexId a, VertexId b) const
    {
        int d = 0;
        while (depth_[a] > depth_[b]) {
            a = parent_[a];
            ++d;
        }
        while (depth_[b] > depth_[a]) {
            b = parent_[b];
            ++d;
        }
        while (a != b) {
            a = parent_[a];
            b = parent_[b];
            d += 2;
        }
        return d;
    }

    bool is_ancestor(VertexId a, VertexId b) const
    {
        while (depth_[b] > depth_[a])
            b = parent_[b];
        return a == b;
    }

private:
    std::vector<VertexId> parent_;
    std::vector<int> depth_;
};

/// True when every non-tree edge joins an ancestor-descendant pair.
inline bool has_no_cross_edges(const WeightedGraph& g, const RootedSpanningTree& t)
{
    TreePaths paths(g, t);
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (t.contains(id))
            continue;
        const Edge& e = g.edge(id);
        if (!paths.is_ancestor(e.u, e.v) && !paths.is_ancestor(e.v, e.u))
            return false;
    }
    return true;
}

/// Length of a shortest odd cycle of the form T + e over non-tree edges e,
/// or unbounded_girth when every such cycle is even.
inline int shortest_odd_fundamental_cycle(const WeightedGraph& g, const RootedSpanningTree& t)
{
    TreePaths paths(g, t);
    int best = unbounded_girth;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (t.contains(id))
            continue;
        int length = paths.distance(g.edge(id).u, g.edge(id).v) + 1;
        if (length % 2 == 1)
            best = std::min(best, length);
    }
    return best;
}

/// Splits a single-rooted tree into G1 (edges between levels i and i+1 for
/// odd i) and G2 (even i). Both must verify as B-subgraphs; for DFS trees
/// that always holds, for other trees it needs G triangle-free.
inline std::pair<BSubgraph, BSubgraph> parity_layer_bsubgraphs(const WeightedGraph& g, const RootedSpanningTree& t)
{
    require(t.roots.size() <= 1, Errc::invalid_parameter, "parity layers need a single root");
    std::vector<EdgeId> odd, even;
    for (EdgeId id : t.tree_edges) {
        const Edge& e = g.edge(id);
        int upper = std::min(t.level[e.u], t.level[e.v]);
        (upper % 2 == 1 ? odd : even).push_back(id);
    }
    return { verify_b_subgraph(g, odd), verify_b_subgraph(g, even) };
}

/// The k layer B-subgraphs G_0..G_{k-1}: G_j keeps the tree edges except
/// those between levels i and i+1 with i = j (mod k), closed under the
/// non-tree edges that fall inside one of its components.
///
/// Without e*, T must be a DFS tree, k even and girth(G) >= k. With e*, T
/// is arbitrary, levels are measured from both endpoints of e*, and no
/// fundamental cycle T + e may be odd with length <= 2k - 1.
inline std::vector<BSubgraph> girth_layer_bsubgraphs(
    const WeightedGraph& g, const RootedSpanningTree& t, int k, std::optional<EdgeId> e_star = std::nullopt)
{
    RootedSpanningTree leveled = t;
    if (e_star) {
        require(k >= 1, Errc::invalid_parameter, "k must be a positive integer");
        int odd = shortest_odd_fundamental_cycle(g, t);
        require(odd == unbounded_girth || odd > 2 * k - 1, Errc::precondition_violated,
            "T + e closes an odd cycle of length " + std::to_string(odd) + " <= 2k - 1 = " + std::to_string(2 * k - 1));
        leveled = root_at_edge(g, t, *e_star);
    } else {
        require(k >= 2 && k % 2 == 0, Errc::invalid_parameter, "k must be even and at least 2");
        require(t.kind == TreeKind::dfs, Errc::precondition_violated, "layering without e* needs a DFS tree");
        require(t.roots.size() == 1, Errc::invalid_parameter, "layering without e* needs a single root");
        int gi = girth(g);
        if (gi == 3)
            throw Error(Errc::triangle_found, "girth 3 is below k = " + std::to_string(k));
        require(gi >= k, Errc::precondition_violated, "girth " + std::to_string(gi) + " is below k = " + std::to_string(k));
    }
    std::vector<BSubgraph> layers;
    for (int j = 0; j < k; ++j) {
        std::vector<EdgeId> kept;
        for (EdgeId id : leveled.tree_edges) {
            const Edge& e = g.edge(id);
            if (id == leveled.root_edge) {
                kept.push_back(id);
                continue;
            }
            int upper = std::min(leveled.level[e.u], leveled.level[e.v]);
            if (upper % k != j)
                kept.push_back(id);
        }
        layers.push_back(verify_b_subgraph(g, induced_closure(g, kept)));
    }
    return layers;
}

} // namespace cutbound
