#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutbound/cut.hpp"
#include "cutbound/report.hpp"
#include "cutbound/spanning.hpp"

namespace cutbound {

/// Best derandomized cut over a family of B-subgraphs (ties: lowest index).
inline std::pair<Cut, std::size_t> best_derandomized_cut(const WeightedGraph& g, std::span<const BSubgraph> family)
{
    require(!family.empty(), Errc::internal_assertion, "empty B-subgraph family");
    Cut best = derandomized_cut(g, family[0]);
    std::size_t best_index = 0;
    for (std::size_t i = 1; i < family.size(); ++i) {
        Cut c = derandomized_cut(g, family[i]);
        if (c.weight > best.weight) {
            best = std::move(c);
            best_index = i;
        }
    }
    return { std::move(best), best_index };
}

namespace detail {

inline Cut parity_layer_cut(const WeightedGraph& g, const RootedSpanningTree& t)
{
    auto [odd, even] = parity_layer_bsubgraphs(g, t);
    const BSubgraph family[] = { std::move(odd), std::move(even) };
    return best_derandomized_cut(g, family).first;
}

inline Cut trivial_cut(const WeightedGraph& g)
{
    return Cut::from_sides(g, std::vector<Side>(static_cast<std::size_t>(g.vertex_count()), 0));
}

} // namespace detail

inline constexpr VertexId root_sweep_limit = 64;

/// DFS tree of maximum weight among the candidate roots: every root when
/// n <= 64 or sweep_all is set, otherwise root 0. Ties go to the lowest root.
inline RootedSpanningTree best_root_dfs_tree(
    const WeightedGraph& g, std::optional<VertexId> root = std::nullopt, bool sweep_all = false, int* roots_tried = nullptr)
{
    if (root) {
        if (roots_tried)
            *roots_tried = 1;
        return dfs_tree(g, *root);
    }
    const VertexId last = sweep_all || g.vertex_count() <= root_sweep_limit ? g.vertex_count() : 1;
    RootedSpanningTree best = dfs_tree(g, 0);
    double best_weight = best.weight(g);
    for (VertexId r = 1; r < last; ++r) {
        RootedSpanningTree t = dfs_tree(g, r);
        double w = t.weight(g);
        if (w > best_weight) {
            best = std::move(t);
            best_weight = w;
        }
    }
    if (roots_tried)
        *roots_tried = std::max<VertexId>(last, 1);
    return best;
}

/// w(G)/2 + w(T_min)/4, met by a parity-layer cut over a DFS tree (whose
/// weight is never below that of T_min).
inline BoundReport poljak_turzik(const WeightedGraph& g)
{
    require_connected(g, "poljak_turzik");
    BoundReport r;
    r.name = "poljak_turzik";
    if (g.vertex_count() == 0) {
        r.cut = detail::trivial_cut(g);
        return r;
    }
    const double w = g.total_weight();
    const double t_min = min_spanning_tree(g).weight(g);
    r.bound_value = w / 2 + t_min / 4;
    if (g.integer_weights())
        r.exact_bound = Rational(2 * exact_integer(w) + exact_integer(t_min), 4);
    RootedSpanningTree d = dfs_tree(g, 0);
    r.cut = detail::parity_layer_cut(g, d);
    r.details["min_tree_weight"] = t_min;
    r.details["dfs_root"] = 0;
    r.details["dfs_tree_weight"] = d.weight(g);
    return r;
}

/// w(G)/2 + w(D)/4 for a DFS tree D.
inline BoundReport dfs_bound(const WeightedGraph& g, std::optional<VertexId> root = std::nullopt, bool sweep_all = false)
{
    require_connected(g, "dfs_bound");
    BoundReport r;
    r.name = "dfs";
    if (g.vertex_count() == 0) {
        r.cut = detail::trivial_cut(g);
        return r;
    }
    int tried = 0;
    RootedSpanningTree d = best_root_dfs_tree(g, root, sweep_all, &tried);
    const double w = g.total_weight();
    const double wd = d.weight(g);
    r.bound_value = w / 2 + wd / 4;
    if (g.integer_weights())
        r.exact_bound = Rational(2 * exact_integer(w) + exact_integer(wd), 4);
    r.cut = detail::parity_layer_cut(g, d);
    r.details["dfs_root"] = d.roots.front();
    r.details["dfs_tree_weight"] = wd;
    r.details["roots_tried"] = tried;
    return r;
}

// ---------------------------------------------------------------------------
// Matchings

inline bool is_matching(const WeightedGraph& g, std::span<const EdgeId> edges)
{
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId id : edges) {
        if (id < 0 || id >= g.edge_count())
            return false;
        const Edge& e = g.edge(id);
        if (used[e.u] || used[e.v])
            return false;
        used[e.u] = used[e.v] = 1;
    }
    return true;
}

/// Heaviest-first greedy matching (ties by edge id).
inline std::vector<EdgeId> greedy_matching(const WeightedGraph& g)
{
    std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return g.weight(a) > g.weight(b); });
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<EdgeId> m;
    for (EdgeId id : order) {
        const Edge& e = g.edge(id);
        if (used[e.u] || used[e.v])
            continue;
        used[e.u] = used[e.v] = 1;
        m.push_back(id);
    }
    std::sort(m.begin(), m.end());
    return m;
}

/// One pass over non-matching edges (by id): an edge replaces the matching
/// edges at its endpoints when that strictly increases the matching weight.
inline std::vector<EdgeId> improve_matching_by_swaps(const WeightedGraph& g, std::vector<EdgeId> m)
{
    std::vector<EdgeId> mate_edge(static_cast<std::size_t>(g.vertex_count()), no_edge);
    for (EdgeId id : m)
        mate_edge[g.edge(id).u] = mate_edge[g.edge(id).v] = id;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        EdgeId a = mate_edge[e.u], b = mate_edge[e.v];
        if (a == id)
            continue;
        double removed = (a != no_edge ? g.weight(a) : 0.0) + (b != no_edge && b != a ? g.weight(b) : 0.0);
        if (e.weight <= removed)
            continue;
        for (EdgeId old : { a, b }) {
            if (old == no_edge)
                continue;
            mate_edge[g.edge(old).u] = mate_edge[g.edge(old).v] = no_edge;
        }
        mate_edge[e.u] = mate_edge[e.v] = id;
    }
    std::vector<EdgeId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (mate_edge[v] != no_edge && g.edge(mate_edge[v]).u == v)
            out.push_back(mate_edge[v]);
    std::sort(out.begin(), out.end());
    return out;
}

inline constexpr EdgeId exact_matching_edge_limit = 24;

/// Maximum weight matching by exhaustive branching; at most 24 edges.
inline std::vector<EdgeId> max_weight_matching_exhaustive(const WeightedGraph& g)
{
    require(g.edge_count() <= exact_matching_edge_limit, Errc::size_guard_exceeded,
        "exhaustive matching limited to " + std::to_string(exact_matching_edge_limit) + " edges");
    const EdgeId m = g.edge_count();
    std::vector<double> suffix(static_cast<std::size_t>(m) + 1, 0.0);
    for (EdgeId i = m - 1; i >= 0; --i)
        suffix[i] = suffix[i + 1] + g.weight(i);
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<EdgeId> current, best;
    double best_weight = -1.0;
    std::function<void(EdgeId, double)> branch = [&](EdgeId i, double weight) {
        if (weight + suffix[i] <= best_weight)
            return;
        if (i == m) {
            best_weight = weight;
            best = current;
            return;
        }
        const Edge& e = g.edge(i);
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            current.push_back(i);
            branch(i + 1, weight + e.weight);
            current.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        branch(i + 1, weight);
    };
    branch(0, 0.0);
    return best;
}

enum class MatchingStrategy { automatic, greedy, exact_small };

/// Matching picked by `strategy`; automatic is exhaustive up to 24 edges and
/// greedy plus one swap pass beyond.
inline std::vector<EdgeId> choose_matching(const WeightedGraph& g, MatchingStrategy strategy)
{
    switch (strategy) {
    case MatchingStrategy::greedy:
        return greedy_matching(g);
    case MatchingStrategy::exact_small:
        return max_weight_matching_exhaustive(g);
    case MatchingStrategy::automatic:
        break;
    }
    if (g.edge_count() <= exact_matching_edge_limit)
        return max_weight_matching_exhaustive(g);
    return improve_matching_by_swaps(g, greedy_matching(g));
}

/// (w(G) + w(M)) / 2 for a given matching M.
inline BoundReport matching_bound(const WeightedGraph& g, std::span<const EdgeId> matching)
{
    require(is_matching(g, matching), Errc::not_a_matching, "edge set is not a matching");
    BoundReport r;
    r.name = "matching";
    BSubgraph sub = verify_b_subgraph(g, matching);
    const double w = g.total_weight();
    r.bound_value = (w + sub.weight) / 2;
    if (g.integer_weights())
        r.exact_bound = Rational(exact_integer(w) + exact_integer(sub.weight), 2);
    r.cut = derandomized_cut(g, sub);
    r.details["matching_weight"] = sub.weight;
    r.details["matching_size"] = sub.edge_set.size();
    return r;
}

inline BoundReport matching_bound(const WeightedGraph& g, MatchingStrategy strategy = MatchingStrategy::automatic)
{
    std::vector<EdgeId> m = choose_matching(g, strategy);
    BoundReport r = matching_bound(g, std::span<const EdgeId>(m));
    r.details["strategy"] = strategy == MatchingStrategy::greedy ? "greedy"
        : strategy == MatchingStrategy::exact_small                ? "exact_small"
        : g.edge_count() <= exact_matching_edge_limit              ? "exact_small"
                                                                   : "greedy+swaps";
    return r;
}

// ---------------------------------------------------------------------------
// Girth-based bounds

/// Default layering depth: the girth when even, girth - 1 when odd, and the
/// smallest even number >= n for forests.
inline int default_girth_k(const WeightedGraph& g, int graph_girth)
{
    if (graph_girth == unbounded_girth) {
        int n = std::max<int>(g.vertex_count(), 2);
        return n % 2 == 0 ? n : n + 1;
    }
    return graph_girth % 2 == 0 ? graph_girth : graph_girth - 1;
}

/// w(G)/2 + (k-1)/(2k) * w(D) for a DFS tree D when girth(G) >= k, k even.
inline BoundReport girth_bound(
    const WeightedGraph& g, std::optional<int> k = std::nullopt, std::optional<VertexId> root = std::nullopt, bool sweep_all = false)
{
    require_connected(g, "girth_bound");
    const int gi = girth(g);
    if (gi == 3)
        throw Error(Errc::triangle_found, "girth_bound requires girth at least 4");
    if (k) {
        require(*k >= 2 && *k % 2 == 0, Errc::invalid_parameter, "k must be even and at least 2");
        require(gi == unbounded_girth || *k <= gi, Errc::precondition_violated,
            "k = " + std::to_string(*k) + " exceeds girth " + std::to_string(gi));
    }
    const int depth = k ? *k : default_girth_k(g, gi);
    BoundReport r;
    r.name = "girth";
    if (g.vertex_count() == 0) {
        r.cut = detail::trivial_cut(g);
        return r;
    }
    RootedSpanningTree d = best_root_dfs_tree(g, root, sweep_all);
    const double w = g.total_weight();
    const double wd = d.weight(g);
    r.bound_value = w / 2 + static_cast<double>(depth - 1) / (2.0 * depth) * wd;
    if (g.integer_weights())
        r.exact_bound = Rational(depth * exact_integer(w) + (depth - 1) * exact_integer(wd), 2LL * depth);
    auto layers = girth_layer_bsubgraphs(g, d, depth);
    auto [cut, index] = best_derandomized_cut(g, layers);
    r.cut = std::move(cut);
    r.details["k"] = depth;
    r.details["girth"] = gi == unbounded_girth ? Details(nullptr) : Details(gi);
    r.details["dfs_root"] = d.roots.front();
    r.details["dfs_tree_weight"] = wd;
    r.details["best_layer"] = index;
    return r;
}

/// w(G)/2 + w(T)/4 for any spanning tree T of a triangle-free graph
/// (default T: a maximum weight spanning tree).
inline BoundReport tfree_spanning_bound(const WeightedGraph& g, std::optional<RootedSpanningTree> tree = std::nullopt)
{
    require_connected(g, "tfree_spanning_bound");
    require_triangle_free(g, "tfree_spanning_bound");
    BoundReport r;
    r.name = "tfree_spanning";
    if (g.vertex_count() == 0) {
        r.cut = detail::trivial_cut(g);
        return r;
    }
    RootedSpanningTree t = tree ? std::move(*tree) : max_spanning_tree(g);
    const double w = g.total_weight();
    const double wt = t.weight(g);
    r.bound_value = w / 2 + wt / 4;
    if (g.integer_weights())
        r.exact_bound = Rational(2 * exact_integer(w) + exact_integer(wt), 4);
    r.cut = detail::parity_layer_cut(g, t);
    r.details["tree_weight"] = wt;
    return r;
}

/// Heaviest tree edge, ties by lowest id.
inline EdgeId heaviest_tree_edge(const WeightedGraph& g, const RootedSpanningTree& t)
{
    require(!t.tree_edges.empty(), Errc::invalid_parameter, "tree has no edges");
    EdgeId best = t.tree_edges.front();
    for (EdgeId id : t.tree_edges)
        if (g.weight(id) > g.weight(best))
            best = id;
    return best;
}

/// Largest k for which no fundamental cycle T + e is odd of length <= 2k-1.
inline int largest_girth2_k(const WeightedGraph& g, const RootedSpanningTree& t)
{
    int odd = shortest_odd_fundamental_cycle(g, t);
    if (odd == unbounded_girth)
        return std::max<int>(g.vertex_count(), 1);
    return std::max(1, (odd - 1) / 2);
}

/// w(G)/2 + (k-1)/(2k) * w(T) + w(e*)/(2k) when no fundamental cycle of T
/// is odd with length <= 2k - 1. Defaults: T a maximum spanning tree, e*
/// its heaviest edge, k the largest admissible value.
inline BoundReport girth2_bound(const WeightedGraph& g, std::optional<RootedSpanningTree> tree = std::nullopt,
    std::optional<EdgeId> e_star = std::nullopt, std::optional<int> k = std::nullopt)
{
    require_connected(g, "girth2_bound");
    BoundReport r;
    r.name = "girth2";
    if (g.edge_count() == 0) {
        r.cut = detail::trivial_cut(g);
        return r;
    }
    RootedSpanningTree t = tree ? std::move(*tree) : max_spanning_tree(g);
    const EdgeId star = e_star ? *e_star : heaviest_tree_edge(g, t);
    const int depth = k ? *k : largest_girth2_k(g, t);
    auto layers = girth_layer_bsubgraphs(g, t, depth, star);
    const double w = g.total_weight();
    const double wt = t.weight(g);
    const double we = g.weight(star);
    r.bound_value = w / 2 + static_cast<double>(depth - 1) / (2.0 * depth) * wt + we / (2.0 * depth);
    if (g.integer_weights())
        r.exact_bound = Rational(depth * exact_integer(w) + (depth - 1) * exact_integer(wt) + exact_integer(we), 2LL * depth);
    auto [cut, index] = best_derandomized_cut(g, layers);
    r.cut = std::move(cut);
    r.details["k"] = depth;
    r.details["tree_weight"] = wt;
    r.details["e_star"] = { g.edge(star).u, g.edge(star).v };
    r.details["e_star_weight"] = we;
    r.details["best_layer"] = index;
    return r;
}

} // namespace cutbound
