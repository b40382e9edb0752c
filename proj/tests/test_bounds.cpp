#include <gtest/gtest.h>

#include <random>

#include "cutbound/bounds.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/oracle.hpp"
#include "support.hpp"

using namespace cutbound;

namespace {

void expect_sound(const WeightedGraph& g, const BoundReport& r)
{
    EXPECT_TRUE(cut_meets_bound(g, r)) << r.name << " cut " << r.cut.weight << " bound " << r.bound_value;
    const double mac = exact_max_cut(g).value;
    EXPECT_TRUE(at_most(g, r.bound_value, r.exact_bound, mac)) << r.name << " bound " << r.bound_value << " mac " << mac;
    EXPECT_LE(r.cut.weight, mac);
    EXPECT_EQ(r.cut.weight, cut_weight(g, r.cut.side));
}

WeightedGraph single_edge(double w) { return WeightedGraph(2, { { 0, 1, w } }); }

} // namespace

TEST(PoljakTurzik, SpecExamples)
{
    WeightedGraph c5 = cycle_graph(5);
    BoundReport r = poljak_turzik(c5);
    EXPECT_DOUBLE_EQ(r.bound_value, 3.5);
    EXPECT_EQ(*r.exact_bound, Rational(7, 2));
    EXPECT_EQ(r.cut.weight, 4.0);

    BoundReport e = poljak_turzik(single_edge(7));
    EXPECT_DOUBLE_EQ(e.bound_value, 5.25);
    EXPECT_EQ(e.cut.weight, 7.0);

    BoundReport k4 = poljak_turzik(complete_graph(4));
    EXPECT_DOUBLE_EQ(k4.bound_value, 3.75);
    EXPECT_EQ(k4.cut.weight, 4.0);
}

TEST(PoljakTurzik, DisconnectedRejected)
{
    WeightedGraph g(4, { { 0, 1, 1 }, { 2, 3, 1 } });
    EXPECT_THROW(poljak_turzik(g), Error);
}

TEST(DfsBound, SpecExamples)
{
    BoundReport c5 = dfs_bound(cycle_graph(5));
    EXPECT_DOUBLE_EQ(c5.bound_value, 3.5);
    EXPECT_EQ(c5.cut.weight, 4.0);

    WeightedGraph pc = petersen_c3(10, 1);
    for (VertexId root = 0; root < pc.vertex_count(); ++root) {
        BoundReport r = dfs_bound(pc, root);
        EXPECT_GE(r.bound_value, 30.0 + 9.0 / 4);
        expect_sound(pc, r);
    }

    WeightedGraph tree(5, { { 0, 1, 2 }, { 1, 2, 3 }, { 1, 3, 1 }, { 3, 4, 6 } });
    BoundReport t = dfs_bound(tree);
    EXPECT_DOUBLE_EQ(t.bound_value, 12.0 / 2 + 12.0 / 4);
    EXPECT_EQ(t.cut.weight, 12.0);
}

TEST(DfsBound, RootSweepKeepsHeaviestTree)
{
    WeightedGraph g = random_connected(9, 0.4, 17, WeightDistribution::integer(0, 10));
    double best = 0.0;
    for (VertexId root = 0; root < g.vertex_count(); ++root)
        best = std::max(best, dfs_tree(g, root).weight(g));
    BoundReport r = dfs_bound(g);
    EXPECT_DOUBLE_EQ(r.details["dfs_tree_weight"].get<double>(), best);
    EXPECT_EQ(r.details["roots_tried"].get<int>(), 9);
}

TEST(DfsBound, DominatesPoljakTurzik)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        WeightedGraph g = random_connected(2 + static_cast<int>(rng() % 13), 0.3, rng(), WeightDistribution::integer(0, 10));
        BoundReport pt = poljak_turzik(g), d = dfs_bound(g);
        EXPECT_GE(*d.exact_bound, *pt.exact_bound);
        expect_sound(g, pt);
        expect_sound(g, d);
    }
}

TEST(Matching, SpecExamples)
{
    WeightedGraph k4 = complete_graph(4);
    BoundReport r = matching_bound(k4, MatchingStrategy::exact_small);
    EXPECT_DOUBLE_EQ(r.details["matching_weight"].get<double>(), 2.0);
    EXPECT_DOUBLE_EQ(r.bound_value, 4.0);
    EXPECT_EQ(r.cut.weight, 4.0);

    WeightedGraph pc = petersen_c3(10, 1);
    BoundReport greedy = matching_bound(pc, MatchingStrategy::greedy);
    EXPECT_DOUBLE_EQ(greedy.bound_value, 55.0);
    std::vector<EdgeId> chosen = greedy_matching(pc);
    std::sort(chosen.begin(), chosen.end());
    EXPECT_EQ(chosen, petersen_spokes());

    WeightedGraph one(4, { { 0, 1, 0 }, { 1, 2, 5 }, { 2, 3, 0 } });
    EXPECT_DOUBLE_EQ(matching_bound(one).bound_value, 5.0);
}

TEST(Matching, ProvidedMatchingValidated)
{
    WeightedGraph g = cycle_graph(5);
    std::vector<EdgeId> bad { 0, 1 };
    EXPECT_THROW(matching_bound(g, std::span<const EdgeId>(bad)), Error);
}

TEST(Matching, ExhaustiveIsOptimal)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        WeightedGraph g = random_connected(7, 0.4, rng(), WeightDistribution::integer(0, 10));
        if (g.edge_count() > exact_matching_edge_limit)
            continue;
        auto best = max_weight_matching_exhaustive(g);
        EXPECT_TRUE(is_matching(g, best));
        // Independent check over all edge subsets.
        double brute = 0.0;
        for (std::uint32_t mask = 0; mask < (1U << g.edge_count()); ++mask) {
            std::vector<EdgeId> m;
            for (EdgeId id = 0; id < g.edge_count(); ++id)
                if (mask >> id & 1U)
                    m.push_back(id);
            if (is_matching(g, m))
                brute = std::max(brute, g.weight_of(m));
        }
        EXPECT_DOUBLE_EQ(g.weight_of(best), brute);
        auto improved = improve_matching_by_swaps(g, greedy_matching(g));
        EXPECT_TRUE(is_matching(g, improved));
        EXPECT_GE(g.weight_of(improved), g.weight_of(greedy_matching(g)));
    }
}

TEST(Matching, TightOnEvenCliques)
{
    for (int n : { 4, 6, 8 }) {
        WeightedGraph g = complete_graph(n);
        BoundReport r = matching_bound(g);
        EXPECT_EQ(*r.exact_bound, Rational(n * n, 4));
        EXPECT_EQ(exact_max_cut(g).value, n * n / 4);
    }
}

TEST(GirthBound, TightCycles)
{
    BoundReport c5 = girth_bound(cycle_graph(5));
    EXPECT_EQ(c5.details["k"].get<int>(), 4);
    EXPECT_EQ(*c5.exact_bound, Rational(4));
    EXPECT_EQ(c5.cut.weight, 4.0);

    BoundReport c7 = girth_bound(cycle_graph(7));
    EXPECT_EQ(c7.details["k"].get<int>(), 6);
    EXPECT_EQ(*c7.exact_bound, Rational(6));
    EXPECT_EQ(c7.cut.weight, 6.0);
}

TEST(GirthBound, Errors)
{
    WeightedGraph k4 = complete_graph(4);
    try {
        girth_bound(k4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::triangle_found);
    }
    EXPECT_THROW(girth_bound(cycle_graph(5), 3), Error);
    EXPECT_THROW(girth_bound(cycle_graph(5), 6), Error);
}

TEST(GirthBound, MonotoneInK)
{
    WeightedGraph g = cycle_graph(9, 3);
    double previous = 0.0;
    for (int k : { 2, 4, 6, 8 }) {
        BoundReport r = girth_bound(g, k);
        EXPECT_GT(r.bound_value, previous);
        previous = r.bound_value;
        expect_sound(g, r);
    }
}

TEST(TfreeSpanning, SpecExamples)
{
    WeightedGraph pc = petersen_c3(10, 1);
    BoundReport r = tfree_spanning_bound(pc);
    EXPECT_DOUBLE_EQ(r.details["tree_weight"].get<double>(), 54.0);
    EXPECT_DOUBLE_EQ(r.bound_value, 43.5);
    expect_sound(pc, r);

    WeightedGraph tree(4, { { 0, 1, 1 }, { 0, 2, 2 }, { 0, 3, 5 } });
    BoundReport t = tfree_spanning_bound(tree);
    EXPECT_DOUBLE_EQ(t.bound_value, 6.0);
    EXPECT_EQ(t.cut.weight, 8.0);

    EXPECT_THROW(tfree_spanning_bound(complete_graph(4)), Error);
}

TEST(Girth2, SpecExamples)
{
    WeightedGraph c8 = cycle_graph(8);
    RootedSpanningTree t = dfs_tree(c8, 0);
    for (EdgeId e : t.tree_edges) {
        BoundReport r = girth2_bound(c8, t, e, 4);
        EXPECT_EQ(*r.exact_bound, Rational(27, 4));
        EXPECT_EQ(r.cut.weight, 8.0);
    }

    WeightedGraph edge = single_edge(6);
    BoundReport one = girth2_bound(edge, dfs_tree(edge, 0), 0, 2);
    EXPECT_DOUBLE_EQ(one.bound_value, 6.0);
    EXPECT_EQ(one.cut.weight, 6.0);

    WeightedGraph c5 = cycle_graph(5);
    RootedSpanningTree path = dfs_tree(c5, 0);
    EXPECT_THROW(girth2_bound(c5, path, path.tree_edges[0], 4), Error);
}

TEST(Girth2, DefaultsAreSound)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        WeightedGraph g = test_support::random_small_graph(rng, 12);
        if (!is_connected(g))
            continue;
        expect_sound(g, girth2_bound(g));
        if (!has_triangle(g)) {
            expect_sound(g, tfree_spanning_bound(g));
            expect_sound(g, girth_bound(g));
        }
        expect_sound(g, matching_bound(g));
    }
}
