#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cutbound/bounds.hpp"
#include "cutbound/coloring.hpp"
#include "cutbound/cut.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/graph.hpp"
#include "cutbound/report.hpp"
#include "cutbound/spanning.hpp"

namespace cutbound {

/// G made 3-regular by hanging 3 - d(v) zero-weight gadgets off every vertex
/// v. Vertices 0..original_vertices-1 and edges 0..m-1 are those of G, so a
/// cut of the result restricts to a cut of G of the same weight.
struct Regularized {
    WeightedGraph graph;
    VertexId original_vertices = 0;
    int gadgets = 0;

    Cut restrict_cut(const WeightedGraph& g, const Cut& c) const
    {
        return Cut::from_sides(g, std::vector<Side>(c.side.begin(), c.side.begin() + original_vertices));
    }
};

inline Regularized regularize(const WeightedGraph& g)
{
    require_triangle_free(g, "regularize");
    require_subcubic(g, "regularize");
    Regularized r;
    r.original_vertices = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    VertexId next = g.vertex_count();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (int i = g.degree(v); i < 3; ++i) {
            for (const Edge& e : gadget_edges(next, 0.0))
                edges.push_back(e);
            edges.push_back({ v, next + gadget_attach_vertex, 0.0 });
            next += gadget_vertex_count;
            ++r.gadgets;
        }
    }
    r.graph = WeightedGraph(next, std::move(edges));
    return r;
}

/// Proper vertex coloring with classes 1, 2, 3.
struct VertexColoring3 {
    std::vector<int> class_of;
};

inline bool is_proper_3_coloring(const WeightedGraph& g, const VertexColoring3& col)
{
    if (col.class_of.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (int c : col.class_of)
        if (c < 1 || c > 3)
            return false;
    for (const Edge& e : g.edges())
        if (col.class_of[e.u] == col.class_of[e.v])
            return false;
    return true;
}

namespace detail {

/// Colors, in reverse BFS order from `root`, every uncolored vertex reachable
/// without entering `blocked` vertices or crossing `skip_edge`. Each vertex
/// takes the lowest class unused by neighbors across edges other than
/// skip_edge. Every vertex but the root still has its BFS parent uncolored
/// when its turn comes, so only the root can run out of classes.
inline void color_reverse_bfs(const WeightedGraph& g, VertexId root, const std::vector<char>& blocked, EdgeId skip_edge, std::vector<int>& col)
{
    std::vector<VertexId> order { root };
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const Incidence& inc : g.neighbors(order[head])) {
            if (inc.edge == skip_edge || seen[inc.neighbor] || blocked[inc.neighbor] || col[inc.neighbor] != 0)
                continue;
            seen[inc.neighbor] = 1;
            order.push_back(inc.neighbor);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::array<bool, 4> used {};
        for (const Incidence& inc : g.neighbors(*it))
            if (inc.edge != skip_edge)
                used[static_cast<std::size_t>(col[inc.neighbor])] = true;
        int c = 1;
        while (c <= 3 && used[static_cast<std::size_t>(c)])
            ++c;
        require(c <= 3, Errc::internal_assertion, "greedy coloring ran out of classes at vertex " + std::to_string(*it));
        col[*it] = c;
    }
}

inline std::vector<VertexId> reachable(const WeightedGraph& g, VertexId from, const std::vector<char>& blocked, EdgeId skip_edge)
{
    std::vector<VertexId> order { from };
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    seen[from] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (const Incidence& inc : g.neighbors(order[head]))
            if (inc.edge != skip_edge && !seen[inc.neighbor] && !blocked[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                order.push_back(inc.neighbor);
            }
    return order;
}

/// Bridges of the component containing `start` (iterative lowpoint DFS).
inline std::vector<EdgeId> bridges_from(const WeightedGraph& g, VertexId start)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> out;
    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };
    std::vector<Frame> stack { { start, no_edge, 0 } };
    int time = 0;
    disc[start] = low[start] = time++;
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nbrs = g.neighbors(f.v);
        if (f.next < nbrs.size()) {
            const Incidence inc = nbrs[f.next++];
            if (inc.edge == f.via)
                continue;
            if (disc[inc.neighbor] >= 0) {
                low[f.v] = std::min(low[f.v], disc[inc.neighbor]);
            } else {
                disc[inc.neighbor] = low[inc.neighbor] = time++;
                stack.push_back({ inc.neighbor, inc.edge, 0 });
            }
            continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
            VertexId parent = stack.back().v;
            low[parent] = std::min(low[parent], low[done.v]);
            if (low[done.v] > disc[parent])
                out.push_back(done.via);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Colors the component of `start` (ignoring skip_edge) with classes 1..3.
inline void brooks_component(const WeightedGraph& g, VertexId start, EdgeId skip_edge, std::vector<int>& col)
{
    const std::vector<char> none(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> members = reachable(g, start, none, skip_edge);
    std::sort(members.begin(), members.end());
    auto degree = [&](VertexId v) {
        int d = 0;
        for (const Incidence& inc : g.neighbors(v))
            d += inc.edge != skip_edge;
        return d;
    };
    for (VertexId v : members) {
        if (degree(v) <= 2) {
            color_reverse_bfs(g, v, none, skip_edge, col);
            return;
        }
    }
    // 3-regular: find v with non-adjacent neighbors x, y such that removing
    // x and y leaves the component connected.
    std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : members) {
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                VertexId x = nbrs[i].neighbor, y = nbrs[j].neighbor;
                if (g.adjacent(x, y))
                    continue;
                blocked[x] = blocked[y] = 1;
                bool connected = reachable(g, v, blocked, skip_edge).size() + 2 == members.size();
                if (connected) {
                    col[x] = col[y] = 1;
                    color_reverse_bfs(g, v, blocked, skip_edge, col);
                    return;
                }
                blocked[x] = blocked[y] = 0;
            }
        }
    }
    // Not 2-connected; a cubic graph then has a bridge ab. Color both sides
    // separately and permute one side if a and b clash.
    std::vector<EdgeId> bridges = bridges_from(g, start);
    require(!bridges.empty(), Errc::internal_assertion, "cubic component without a Brooks triple or a bridge");
    const EdgeId bridge = bridges.front();
    const VertexId a = g.edge(bridge).u, b = g.edge(bridge).v;
    color_reverse_bfs(g, a, none, bridge, col);
    color_reverse_bfs(g, b, none, bridge, col);
    if (col[a] == col[b]) {
        const int from = col[b], to = from == 1 ? 2 : 1;
        for (VertexId v : reachable(g, b, none, bridge)) {
            if (col[v] == from)
                col[v] = to;
            else if (col[v] == to)
                col[v] = from;
        }
    }
}

} // namespace detail

/// Constructive Brooks coloring of a triangle-free graph of maximum degree
/// at most 3, one component at a time.
inline VertexColoring3 brooks_3_coloring(const WeightedGraph& g)
{
    require_subcubic(g, "brooks_3_coloring");
    require_triangle_free(g, "brooks_3_coloring");
    std::vector<int> col(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (col[v] == 0)
            detail::brooks_component(g, v, no_edge, col);
    VertexColoring3 out { std::move(col) };
    require(is_proper_3_coloring(g, out), Errc::internal_assertion, "Brooks coloring is not proper");
    return out;
}

/// s(v) for every vertex: the neighbor whose class occurs exactly once in
/// N(v), when exactly one class does so.
struct SuccessorDigraph {
    std::vector<VertexId> succ; // no_vertex where undefined
    std::vector<EdgeId> succ_edge;
};

inline SuccessorDigraph successor_digraph(const WeightedGraph& g, const VertexColoring3& col)
{
    require(is_proper_3_coloring(g, col), Errc::precondition_violated, "successor digraph needs a proper 3-coloring");
    SuccessorDigraph d;
    d.succ.assign(static_cast<std::size_t>(g.vertex_count()), no_vertex);
    d.succ_edge.assign(static_cast<std::size_t>(g.vertex_count()), no_edge);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::array<int, 4> count {};
        for (const Incidence& inc : g.neighbors(v))
            ++count[static_cast<std::size_t>(col.class_of[inc.neighbor])];
        int once = 0, which = 0;
        for (int c = 1; c <= 3; ++c)
            if (count[static_cast<std::size_t>(c)] == 1) {
                ++once;
                which = c;
            }
        if (once != 1)
            continue;
        for (const Incidence& inc : g.neighbors(v))
            if (col.class_of[inc.neighbor] == which) {
                d.succ[v] = inc.neighbor;
                d.succ_edge[v] = inc.edge;
            }
    }
    return d;
}

/// A0 / A1 / A2: edges used as v s(v) by zero, one or two endpoints.
struct EdgeClassification {
    std::vector<int> class_of_edge;
    std::array<double, 3> weight {};

    std::vector<EdgeId> edges_of(int cls) const
    {
        std::vector<EdgeId> out;
        for (std::size_t id = 0; id < class_of_edge.size(); ++id)
            if (class_of_edge[id] == cls)
                out.push_back(static_cast<EdgeId>(id));
        return out;
    }
};

inline EdgeClassification classify_edges(const WeightedGraph& g, const SuccessorDigraph& d)
{
    EdgeClassification c;
    c.class_of_edge.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (d.succ_edge[v] != no_edge)
            ++c.class_of_edge[d.succ_edge[v]];
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        c.weight[static_cast<std::size_t>(c.class_of_edge[id])] += g.weight(id);
    return c;
}

/// A cut together with the value the construction certifies for it.
struct ClaimCut {
    Cut cut;
    double certified = 0.0;
    std::optional<Rational> exact_certified;
    Details details = Details::object();

    bool meets_certificate(const WeightedGraph& g) const { return at_least(g, cut.weight, certified, exact_certified); }
};

namespace detail {

inline std::optional<Rational> exact_combination(const WeightedGraph& g, const EdgeClassification& cls, long long a0, long long a1,
    long long a2, long long denominator)
{
    if (!g.integer_weights())
        return std::nullopt;
    return Rational(a0 * exact_integer(cls.weight[0]) + a1 * exact_integer(cls.weight[1]) + a2 * exact_integer(cls.weight[2]), denominator);
}

/// Best girth-layer cut of G[vertices] over the given tree edges (k = 4),
/// as local sides aligned with `vertices`.
inline std::vector<Side> layered_tree_cut(const WeightedGraph& g, const std::vector<VertexId>& vertices,
    const std::vector<EdgeId>& tree_edges, std::optional<EdgeId> e_star)
{
    if (vertices.size() == 1)
        return { 0 };
    InducedSubgraph h = induced_subgraph(g, vertices);
    std::vector<EdgeId> local;
    for (EdgeId id = 0; id < h.graph.edge_count(); ++id)
        if (std::binary_search(tree_edges.begin(), tree_edges.end(), h.to_parent_edge[id]))
            local.push_back(id);
    RootedSpanningTree t = tree_from_edges(h.graph, local, 0, TreeKind::arbitrary);
    EdgeId star = heaviest_tree_edge(h.graph, t);
    if (e_star) {
        auto it = std::find(h.to_parent_edge.begin(), h.to_parent_edge.end(), *e_star);
        star = static_cast<EdgeId>(it - h.to_parent_edge.begin());
    }
    std::vector<BSubgraph> layers;
    try {
        layers = girth_layer_bsubgraphs(h.graph, t, 4, star);
    } catch (const Error& e) {
        throw Error(Errc::internal_assertion, std::string("short odd cycle through a G* component: ") + e.what());
    }
    return best_derandomized_cut(h.graph, layers).first.side;
}

} // namespace detail

/// Claim A: C_i = E(G) minus the successor edges of V_i is bipartite, so the
/// best of the three cuts weighs at least w(A0) + 2/3 w(A1) + 1/3 w(A2).
inline ClaimCut claim_a_cut(const WeightedGraph& g, const VertexColoring3& col, const SuccessorDigraph& d)
{
    const EdgeClassification cls = classify_edges(g, d);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::optional<Cut> best;
    Details weights = Details::array();
    for (int i = 1; i <= 3; ++i) {
        std::vector<char> removed(static_cast<std::size_t>(g.edge_count()), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (col.class_of[v] == i && d.succ_edge[v] != no_edge)
                removed[d.succ_edge[v]] = 1;
        double kept_weight = 0.0;
        std::vector<int> part(n, -1);
        std::vector<PlacementUnit> units;
        for (VertexId s = 0; s < g.vertex_count(); ++s) {
            if (part[s] >= 0)
                continue;
            PlacementUnit unit;
            part[s] = 0;
            std::vector<VertexId> queue { s };
            for (std::size_t head = 0; head < queue.size(); ++head) {
                VertexId u = queue[head];
                for (const Incidence& inc : g.neighbors(u)) {
                    if (removed[inc.edge])
                        continue;
                    if (part[inc.neighbor] < 0) {
                        part[inc.neighbor] = 1 - part[u];
                        queue.push_back(inc.neighbor);
                    } else if (part[inc.neighbor] == part[u]) {
                        throw Error(Errc::not_bipartite, "C_" + std::to_string(i) + " is not bipartite");
                    }
                }
            }
            std::sort(queue.begin(), queue.end());
            for (VertexId v : queue) {
                unit.vertices.push_back(v);
                unit.part.push_back(static_cast<Side>(part[v]));
            }
            units.push_back(std::move(unit));
        }
        for (EdgeId id = 0; id < g.edge_count(); ++id)
            if (!removed[id])
                kept_weight += g.weight(id);
        weights.push_back(kept_weight);
        Cut c = place_units(g, std::move(units));
        if (!best || c.weight > best->weight)
            best = std::move(c);
    }
    ClaimCut out;
    out.cut = std::move(*best);
    out.certified = cls.weight[0] + 2.0 / 3.0 * cls.weight[1] + 1.0 / 3.0 * cls.weight[2];
    out.exact_certified = detail::exact_combination(g, cls, 3, 2, 1, 3);
    out.details["class_weights"] = std::move(weights);
    return out;
}

/// Claim F: every component of G* = UG(D*) gets a layered cut (k = 4) of its
/// induced subgraph; components with a long directed cycle are split into
/// the trees hanging off each cycle vertex and glued so the cycle edges are
/// cut (all but the cheapest when the cycle is odd). Components are then
/// placed by conditional expectation. Structural facts the construction
/// relies on (cycle lengths divisible by 3, no chords, no edges between the
/// hanging trees) are checked and reported as internal assertions.
inline ClaimCut claim_f_cut(const WeightedGraph& g, const SuccessorDigraph& d)
{
    const EdgeClassification cls = classify_edges(g, d);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<EdgeId> star_edges;
    for (EdgeId id = 0; id < g.edge_count(); ++id)
        if (cls.class_of_edge[id] > 0)
            star_edges.push_back(id);
    int count = 0;
    std::vector<int> label = detail::edge_set_components(g, star_edges, count);
    std::vector<std::vector<VertexId>> members(static_cast<std::size_t>(count));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (label[v] >= 0)
            members[static_cast<std::size_t>(label[v])].push_back(v);

    std::vector<PlacementUnit> units;
    int in_trees = 0, two_cycles = 0, long_cycles = 0;
    Details cycle_lengths = Details::array();
    std::vector<int> on_cycle(n, -1);
    for (const auto& comp : members) {
        std::vector<EdgeId> comp_edges;
        for (VertexId v : comp)
            if (d.succ_edge[v] != no_edge)
                comp_edges.push_back(d.succ_edge[v]);
        std::sort(comp_edges.begin(), comp_edges.end());
        comp_edges.erase(std::unique(comp_edges.begin(), comp_edges.end()), comp_edges.end());

        std::vector<VertexId> roots;
        for (VertexId v : comp)
            if (d.succ[v] == no_vertex)
                roots.push_back(v);
        require(roots.size() <= 1, Errc::internal_assertion, "G* component with two vertices of out-degree 0");

        PlacementUnit unit;
        unit.vertices = comp;
        if (!roots.empty()) {
            ++in_trees;
            unit.part = detail::layered_tree_cut(g, comp, comp_edges, std::nullopt);
            units.push_back(std::move(unit));
            continue;
        }
        // Functional component: walk successors until a vertex repeats.
        std::vector<VertexId> walk;
        std::vector<int> seen_at(n, -1);
        VertexId x = comp.front();
        while (seen_at[x] < 0) {
            seen_at[x] = static_cast<int>(walk.size());
            walk.push_back(x);
            x = d.succ[x];
        }
        std::vector<VertexId> cycle(walk.begin() + seen_at[x], walk.end());
        const auto l = cycle.size();
        cycle_lengths.push_back(l);
        if (l == 2) {
            ++two_cycles;
            unit.part = detail::layered_tree_cut(g, comp, comp_edges, d.succ_edge[cycle[0]]);
            units.push_back(std::move(unit));
            continue;
        }
        ++long_cycles;
        require(l % 3 == 0, Errc::internal_assertion, "cycle of length " + std::to_string(l) + " in G* is not divisible by 3");
        for (std::size_t j = 0; j < l; ++j)
            on_cycle[cycle[j]] = static_cast<int>(j);
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = j + 2; i < l; ++i)
                if (!(j == 0 && i == l - 1))
                    require(!g.adjacent(cycle[j], cycle[i]), Errc::internal_assertion, "cycle of G* has a chord in G");

        // Group every vertex by the cycle vertex its successor path reaches.
        std::vector<int> group(n, -1);
        for (VertexId v : comp) {
            std::vector<VertexId> path;
            VertexId y = v;
            while (on_cycle[y] < 0 && group[y] < 0) {
                path.push_back(y);
                y = d.succ[y];
            }
            int gid = on_cycle[y] >= 0 ? on_cycle[y] : group[y];
            group[y] = gid;
            for (VertexId p : path)
                group[p] = gid;
        }
        std::vector<std::vector<VertexId>> groups(l);
        for (VertexId v : comp)
            groups[static_cast<std::size_t>(group[v])].push_back(v);
        std::vector<EdgeId> cycle_edges(l);
        for (std::size_t j = 0; j < l; ++j)
            cycle_edges[j] = d.succ_edge[cycle[j]];
        for (VertexId v : comp)
            for (const Incidence& inc : g.neighbors(v))
                if (label[inc.neighbor] == label[v] && group[inc.neighbor] != group[v])
                    require(std::find(cycle_edges.begin(), cycle_edges.end(), inc.edge) != cycle_edges.end(), Errc::internal_assertion,
                        "edge " + std::to_string(v) + " " + std::to_string(inc.neighbor) + " joins two trees hanging off a G* cycle");

        std::vector<std::vector<Side>> local(l);
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<EdgeId> tree;
            for (EdgeId id : comp_edges)
                if (group[g.edge(id).u] == static_cast<int>(j) && group[g.edge(id).v] == static_cast<int>(j))
                    tree.push_back(id);
            local[j] = detail::layered_tree_cut(g, groups[j], tree, std::nullopt);
        }
        // Start right after the cheapest cycle edge (ties: lowest id), flip
        // each following group so its cycle edge to the previous one is cut.
        std::size_t cheapest = 0;
        for (std::size_t j = 1; j < l; ++j) {
            double wj = g.weight(cycle_edges[j]), wc = g.weight(cycle_edges[cheapest]);
            if (wj < wc || (wj == wc && cycle_edges[j] < cycle_edges[cheapest]))
                cheapest = j;
        }
        std::vector<Side> side(n, 0);
        auto side_of = [&](std::size_t j, VertexId v) {
            auto& gv = groups[j];
            return local[j][static_cast<std::size_t>(std::find(gv.begin(), gv.end(), v) - gv.begin())];
        };
        // cycle_edges[j] joins cycle[j] and cycle[j + 1].
        std::size_t start = (cheapest + 1) % l;
        std::vector<Side> flip(l, 0);
        for (std::size_t step = 1; step < l; ++step) {
            std::size_t j = (start + step) % l, prev = (j + l - 1) % l;
            Side prev_side = side_of(prev, cycle[prev]) ^ flip[prev];
            flip[j] = (side_of(j, cycle[j]) == prev_side) ? 1 : 0;
        }
        for (std::size_t j = 0; j < l; ++j)
            for (std::size_t i = 0; i < groups[j].size(); ++i)
                side[groups[j][i]] = local[j][i] ^ flip[j];
        for (VertexId v : comp)
            unit.part.push_back(side[v]);
        units.push_back(std::move(unit));
    }

    ClaimCut out;
    out.cut = place_units(g, std::move(units));
    out.certified = 0.5 * cls.weight[0] + 7.0 / 8.0 * cls.weight[1] + cls.weight[2];
    out.exact_certified = detail::exact_combination(g, cls, 4, 7, 8, 8);
    out.details["in_tree_components"] = in_trees;
    out.details["two_cycle_components"] = two_cycles;
    out.details["long_cycle_components"] = long_cycles;
    out.details["cycle_lengths"] = std::move(cycle_lengths);
    return out;
}

/// Claim G: the matching contraction bound with M = A2.
inline ClaimCut claim_g_cut(const WeightedGraph& g, std::span<const EdgeId> a2)
{
    BoundReport r = matching_vizing_bound(g, a2);
    const double w = g.total_weight(), wm = g.weight_of(a2);
    ClaimCut out;
    out.cut = std::move(r.cut);
    out.certified = 0.6 * (w - wm) + wm;
    if (g.integer_weights())
        out.exact_certified = Rational(3 * (exact_integer(w) - exact_integer(wm)) + 5 * exact_integer(wm), 5);
    out.details["color_count"] = r.details["color_count"];
    out.details["bound_value"] = r.bound_value;
    return out;
}

namespace detail {

inline BoundReport trivial_report(const WeightedGraph& g, std::string name, double coefficient, Rational exact_coefficient)
{
    BoundReport r;
    r.name = std::move(name);
    r.bound_value = coefficient * g.total_weight();
    if (g.integer_weights())
        r.exact_bound = exact_coefficient * Rational(exact_integer(g.total_weight()));
    r.cut = local_search_improve(g, Cut::from_sides(g, std::vector<Side>(static_cast<std::size_t>(g.vertex_count()), 0)));
    return r;
}

} // namespace detail

/// The 8/11 construction: regularize, Brooks-color, build D* and A0/A1/A2,
/// take the best of the Claim A, F and G cuts. Since
/// 9/22 (A) + 8/22 (F) + 5/22 (G) = 8/11 w(G), the best certified cut meets
/// 8/11 w(G). Every claim's certificate is checked at runtime.
inline BoundReport mainprob_cut(const WeightedGraph& g)
{
    require_triangle_free(g, "mainprob_cut");
    require_subcubic(g, "mainprob_cut");
    const Rational coefficient(8, 11);
    if (g.edge_count() == 0)
        return detail::trivial_report(g, "mainprob", 8.0 / 11.0, coefficient);

    Regularized reg = regularize(g);
    const WeightedGraph& h = reg.graph;
    VertexColoring3 col = brooks_3_coloring(h);
    SuccessorDigraph dstar = successor_digraph(h, col);
    EdgeClassification cls = classify_edges(h, dstar);
    std::vector<EdgeId> a2 = cls.edges_of(2);
    require(is_matching(h, a2), Errc::internal_assertion, "A2 is not a matching");

    ClaimCut claims[] = { claim_a_cut(h, col, dstar), claim_f_cut(h, dstar), claim_g_cut(h, a2) };
    const char* names[] = { "A", "F", "G" };
    BoundReport r;
    r.name = "mainprob";
    r.bound_value = 8.0 / 11.0 * g.total_weight();
    if (g.integer_weights())
        r.exact_bound = coefficient * Rational(exact_integer(g.total_weight()));
    std::size_t best = 0;
    Details claim_details = Details::object();
    for (std::size_t i = 0; i < 3; ++i) {
        require(claims[i].meets_certificate(h), Errc::internal_assertion,
            std::string("claim ") + names[i] + " cut falls below its certified value");
        if (claims[i].cut.weight > claims[best].cut.weight)
            best = i;
        claim_details[names[i]] = { { "certified", claims[i].certified }, { "cut_weight", claims[i].cut.weight },
            { "details", claims[i].details } };
    }
    double combination = 9.0 / 22 * claims[0].certified + 8.0 / 22 * claims[1].certified + 5.0 / 22 * claims[2].certified;
    if (g.integer_weights()) {
        Rational exact = Rational(9, 22) * *claims[0].exact_certified + Rational(8, 22) * *claims[1].exact_certified
            + Rational(5, 22) * *claims[2].exact_certified;
        require(exact == *r.exact_bound, Errc::internal_assertion, "claim combination does not equal 8/11 w(G)");
    }
    r.cut = reg.restrict_cut(g, claims[best].cut);
    r.details["w_A0"] = cls.weight[0];
    r.details["w_A1"] = cls.weight[1];
    r.details["w_A2"] = cls.weight[2];
    r.details["claims"] = std::move(claim_details);
    r.details["best_claim"] = names[best];
    r.details["combination"] = combination;
    r.details["gadgets"] = reg.gadgets;
    return r;
}

/// Brooks-color, keep the heaviest pair of classes (V1, V2) and move each
/// V3 vertex to V1 when w(v, V2) >= w(v, V1), else to V2.
inline BoundReport two_thirds_cut(const WeightedGraph& g)
{
    require_triangle_free(g, "two_thirds_cut");
    require_subcubic(g, "two_thirds_cut");
    VertexColoring3 col = brooks_3_coloring(g);
    std::array<std::array<double, 4>, 4> between {};
    for (const Edge& e : g.edges()) {
        between[static_cast<std::size_t>(col.class_of[e.u])][static_cast<std::size_t>(col.class_of[e.v])] += e.weight;
        between[static_cast<std::size_t>(col.class_of[e.v])][static_cast<std::size_t>(col.class_of[e.u])] += e.weight;
    }
    std::array<int, 3> pair { 1, 2, 3 };
    for (auto candidate : { std::array<int, 3> { 1, 3, 2 }, std::array<int, 3> { 2, 3, 1 } })
        if (between[candidate[0]][candidate[1]] > between[pair[0]][pair[1]])
            pair = candidate;
    std::vector<Side> side(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int c = col.class_of[v];
        if (c == pair[1]) {
            side[v] = 1;
        } else if (c == pair[2]) {
            double to_first = 0.0, to_second = 0.0;
            for (const Incidence& inc : g.neighbors(v))
                (col.class_of[inc.neighbor] == pair[0] ? to_first : to_second) += g.weight(inc.edge);
            side[v] = to_second >= to_first ? 0 : 1;
        }
    }
    BoundReport r;
    r.name = "two_thirds";
    r.bound_value = 2.0 / 3.0 * g.total_weight();
    if (g.integer_weights())
        r.exact_bound = Rational(2 * exact_integer(g.total_weight()), 3);
    r.cut = Cut::from_sides(g, std::move(side));
    r.details["class_pair"] = { pair[0], pair[1] };
    return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo constructions

/// Summary of raw sample weights.
struct SampleStats {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation
    std::size_t count = 0;

    double standard_error() const { return count > 0 ? stddev / std::sqrt(static_cast<double>(count)) : 0.0; }
};

inline SampleStats summarize(std::span<const double> values)
{
    SampleStats s;
    s.count = values.size();
    if (values.empty())
        return s;
    for (double v : values)
        s.mean += v;
    s.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values)
            sq += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return s;
}

inline constexpr int default_trials = 256;

/// Keeps each tree edge with probability p, 2-colors the resulting forest
/// and orients every forest component uniformly at random. Raw sample, no
/// local search.
template <typename Rng>
Cut lemma_prob_sample(const WeightedGraph& g, const RootedSpanningTree& t, double p, Rng& rng)
{
    require(p >= 0.0 && p <= 1.0, Errc::invalid_parameter, "p must lie in [0, 1]");
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::bernoulli_distribution keep(p), coin(0.5);
    std::vector<std::vector<VertexId>> adj(n);
    for (EdgeId id : t.tree_edges) {
        if (!keep(rng))
            continue;
        adj[g.edge(id).u].push_back(g.edge(id).v);
        adj[g.edge(id).v].push_back(g.edge(id).u);
    }
    std::vector<int> side(n, -1);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = coin(rng) ? 1 : 0;
        std::vector<VertexId> stack { s };
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (VertexId v : adj[u])
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                }
        }
    }
    return Cut::from_sides(g, std::vector<Side>(side.begin(), side.end()));
}

/// (p+1)/2 w(T) + (1 - p^(r-1))/2 (w(G) - w(T)), r the shortest odd
/// fundamental cycle of T (no penalty when every fundamental cycle is even).
inline double lemma_prob_value(const WeightedGraph& g, const RootedSpanningTree& t, double p)
{
    const int r = shortest_odd_fundamental_cycle(g, t);
    const double wt = t.weight(g);
    const double miss = r == unbounded_girth ? 0.0 : std::pow(p, r - 1);
    return (p + 1) / 2 * wt + (1 - miss) / 2 * (g.total_weight() - wt);
}

/// Per-trial generator: mt19937_64 seeded with seed + trial.
inline std::mt19937_64 trial_rng(std::uint64_t seed, int trial) { return std::mt19937_64(seed + static_cast<std::uint64_t>(trial)); }

inline BoundReport lemma_prob_bound(const WeightedGraph& g, const RootedSpanningTree& t, double p, int trials = default_trials, std::uint64_t seed = 0)
{
    require(p >= 0.0 && p <= 1.0, Errc::invalid_parameter, "p must lie in [0, 1]");
    require(trials >= 1, Errc::invalid_parameter, "trials must be positive");
    BoundReport r;
    r.name = "lemma_prob";
    r.mode = Mode::monte_carlo;
    r.bound_value = lemma_prob_value(g, t, p);
    std::vector<double> raw;
    std::optional<Cut> best;
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, trial);
        Cut c = lemma_prob_sample(g, t, p, rng);
        raw.push_back(c.weight);
        c = local_search_improve(g, std::move(c));
        if (!best || c.weight > best->weight)
            best = std::move(c);
    }
    SampleStats s = summarize(raw);
    r.cut = std::move(*best);
    const int odd = shortest_odd_fundamental_cycle(g, t);
    r.details["p"] = p;
    r.details["r"] = odd == unbounded_girth ? Details(nullptr) : Details(odd);
    r.details["tree_weight"] = t.weight(g);
    r.details["trials"] = trials;
    r.details["seed"] = seed;
    r.details["raw_mean"] = s.mean;
    r.details["raw_stddev"] = s.stddev;
    return r;
}

/// 3193 / 10000: the tree coefficient obtained from 0.46545 (a) + 0.53455 (b).
inline constexpr double mainprobtree_coefficient = 0.3193;

struct MainProbTreeCheck {
    double tree_coefficient;    // 0.46545 * 0.925 + 0.53455 * 8/11
    double nontree_coefficient; // 0.46545 * (1 - 0.85^4)/2 + 0.53455 * 8/11
};

inline MainProbTreeCheck mainprobtree_recombination()
{
    const double p = 0.85;
    const double a_tree = (p + 1) / 2, a_rest = (1 - std::pow(p, 4)) / 2;
    return { 0.46545 * a_tree + 0.53455 * 8.0 / 11.0, 0.46545 * a_rest + 0.53455 * 8.0 / 11.0 };
}

/// w(G)/2 + 0.3193 w(T). The cut is the better of the 8/11 cut and the best
/// percolation sample with p = 0.85.
inline BoundReport mainprobtree_bound(const WeightedGraph& g, std::optional<RootedSpanningTree> tree = std::nullopt,
    int trials = default_trials, std::uint64_t seed = 0)
{
    require_triangle_free(g, "mainprobtree_bound");
    require_subcubic(g, "mainprobtree_bound");
    require_connected(g, "mainprobtree_bound");
    BoundReport r;
    r.name = "mainprobtree";
    r.mode = Mode::monte_carlo;
    if (g.vertex_count() == 0) {
        r.cut = Cut::from_sides(g, {});
        return r;
    }
    RootedSpanningTree t = tree ? std::move(*tree) : max_spanning_tree(g);
    const double wt = t.weight(g);
    r.bound_value = g.total_weight() / 2 + mainprobtree_coefficient * wt;
    if (g.integer_weights())
        r.exact_bound = Rational(exact_integer(g.total_weight()), 2) + Rational(3193, 10000) * Rational(exact_integer(wt));
    BoundReport a = lemma_prob_bound(g, t, 0.85, trials, seed);
    BoundReport b = mainprob_cut(g);
    r.cut = a.cut.weight > b.cut.weight ? a.cut : b.cut;
    MainProbTreeCheck check = mainprobtree_recombination();
    r.details["tree_weight"] = wt;
    r.details["branch_a_bound"] = a.bound_value;
    r.details["branch_a_cut"] = a.cut.weight;
    r.details["branch_b_bound"] = b.bound_value;
    r.details["branch_b_cut"] = b.cut.weight;
    r.details["tree_coefficient"] = check.tree_coefficient;
    r.details["nontree_coefficient"] = check.nontree_coefficient;
    return r;
}

/// Shearer's two-stage sampler: a uniform bipartition, then every vertex
/// that does not have more than half its neighbors across (exactly half:
/// a fair coin) is redistributed uniformly.
template <typename Rng>
Cut shearer_sample(const WeightedGraph& g, Rng& rng)
{
    std::bernoulli_distribution coin(0.5);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<Side> first(n);
    for (auto& s : first)
        s = coin(rng) ? 1 : 0;
    std::vector<Side> second = first;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int across = 0;
        for (const Incidence& inc : g.neighbors(v))
            across += first[inc.neighbor] != first[v];
        const int twice = 2 * across, deg = g.degree(v);
        bool good = twice > deg || (twice == deg && coin(rng));
        if (!good)
            second[v] = coin(rng) ? 1 : 0;
    }
    return Cut::from_sides(g, std::move(second));
}

inline BoundReport shearer_bound(const WeightedGraph& g, int trials = default_trials, std::uint64_t seed = 0)
{
    require_triangle_free(g, "shearer_bound");
    require(trials >= 1, Errc::invalid_parameter, "trials must be positive");
    BoundReport r;
    r.name = "shearer";
    r.mode = Mode::monte_carlo;
    const int delta = std::max(g.max_degree(), 1);
    r.bound_value = s_delta(delta) * g.total_weight();
    std::vector<double> raw;
    std::optional<Cut> best;
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = trial_rng(seed, trial);
        Cut c = shearer_sample(g, rng);
        raw.push_back(c.weight);
        c = local_search_improve(g, std::move(c));
        if (!best || c.weight > best->weight)
            best = std::move(c);
    }
    SampleStats s = summarize(raw);
    r.cut = std::move(*best);
    r.details["delta"] = delta;
    r.details["s_delta"] = s_delta(delta);
    r.details["trials"] = trials;
    r.details["seed"] = seed;
    r.details["raw_mean"] = s.mean;
    r.details["raw_stddev"] = s.stddev;
    return r;
}

} // namespace cutbound
