#include <gtest/gtest.h>

#include <random>

#include "cutbound/bounds.hpp"
#include "cutbound/generators.hpp"
#include "cutbound/oracle.hpp"
#include "support.hpp"

using namespace cutbound;

namespace {

double naive_max_cut(const WeightedGraph& g)
{
    const VertexId n = g.vertex_count();
    double best = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        double w = 0.0;
        for (const Edge& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u))
                w += e.weight;
        best = std::max(best, w);
    }
    return best;
}

} // namespace

TEST(ExactMaxCut, Examples)
{
    EXPECT_DOUBLE_EQ(exact_max_cut(cycle_graph(5)).value, 4.0);
    EXPECT_DOUBLE_EQ(exact_max_cut(complete_graph(4)).value, 4.0);
    EXPECT_DOUBLE_EQ(exact_max_cut(petersen_graph()).value, 12.0);
    OracleResult r = exact_max_cut(petersen_c3(10, 1));
    EXPECT_DOUBLE_EQ(r.value, 56.0);
    EXPECT_DOUBLE_EQ(cut_weight(petersen_c3(10, 1), r.cut_witness), 56.0);
    EXPECT_DOUBLE_EQ(exact_max_cut(WeightedGraph(0, {})).value, 0.0);
}

TEST(ExactMaxCut, AgreesWithNaiveEnumeration)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        WeightedGraph g = test_support::random_small_graph(rng, 12);
        OracleResult r = exact_max_cut(g);
        EXPECT_DOUBLE_EQ(r.value, naive_max_cut(g));
        EXPECT_NEAR(cut_weight(g, r.cut_witness), r.value, 1e-9);
    }
}

TEST(ExactMaxCut, SizeGuard)
{
    WeightedGraph big = cycle_graph(31);
    try {
        exact_max_cut(big);
        FAIL() << "guard did not trigger";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::size_guard_exceeded);
    }
    EXPECT_THROW(max_b_subgraph(cycle_graph(17)), Error);
    EXPECT_THROW(max_dfs_tree_weight(cycle_graph(13)), Error);
    EXPECT_THROW(five_cycle_cover(cycle_graph(41)), Error);
    EXPECT_DOUBLE_EQ(max_dfs_tree_weight(cycle_graph(13), 13).value, 12.0);
}

TEST(MaxBSubgraph, Examples)
{
    EXPECT_DOUBLE_EQ(max_b_subgraph(cycle_graph(5)).value, 3.0);
    // Two disjoint edges of K4 form a B-subgraph; no induced bipartite
    // subgraph of K4 has more than one edge per part.
    EXPECT_DOUBLE_EQ(max_b_subgraph(complete_graph(4)).value, 2.0);
    EXPECT_DOUBLE_EQ(max_b_subgraph(cycle_graph(6, 2.0)).value, 12.0);
    EXPECT_DOUBLE_EQ(max_b_subgraph(petersen_graph()).value, 9.0);
}

TEST(MaxBSubgraph, WitnessIsValidAndDominatesBounds)
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 120; ++i) {
        WeightedGraph g = test_support::random_small_graph(rng, 11);
        OracleResult r = max_b_subgraph(g);
        BSubgraph b = verify_b_subgraph(g, r.edge_witness);
        EXPECT_NEAR(b.weight, r.value, 1e-9);
        const double mac = exact_max_cut(g).value;
        EXPECT_GE(mac + 1e-9, (g.total_weight() + r.value) / 2);
        // A random B-subgraph never beats the maximum.
        BSubgraph other = verify_b_subgraph(g, test_support::random_b_subgraph_edges(g, rng));
        EXPECT_LE(other.weight, r.value + 1e-9);
        // The matching bound uses a B-subgraph of weight w(M).
        if (g.edge_count() <= 24) {
            EXPECT_LE(g.weight_of(max_weight_matching_exhaustive(g)), r.value + 1e-9);
        }
    }
}

TEST(MaxDfsTree, Examples)
{
    EXPECT_DOUBLE_EQ(max_dfs_tree_weight(cycle_graph(5)).value, 4.0);
    WeightedGraph path(4, { { 0, 1, 2 }, { 1, 2, 3 }, { 2, 3, 4 } });
    EXPECT_DOUBLE_EQ(max_dfs_tree_weight(path).value, 9.0);
    EXPECT_DOUBLE_EQ(max_dfs_tree_weight(complete_graph(4)).value, 3.0);
    WeightedGraph heavy_cycle(4, { { 0, 1, 5 }, { 1, 2, 1 }, { 2, 3, 5 }, { 3, 0, 5 } });
    EXPECT_DOUBLE_EQ(max_dfs_tree_weight(heavy_cycle).value, 15.0);
}

TEST(MaxDfsTree, DominatesEveryDfsTree)
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 80; ++i) {
        WeightedGraph g = random_connected(std::uniform_int_distribution<int>(2, 10)(rng), 0.4, rng(), WeightDistribution::integer(0, 10));
        OracleResult r = max_dfs_tree_weight(g);
        RootedSpanningTree witness = tree_from_edges(g, r.edge_witness);
        EXPECT_NEAR(witness.weight(g), r.value, 1e-9);
        for (VertexId root = 0; root < g.vertex_count(); ++root)
            EXPECT_LE(dfs_tree(g, root).weight(g), r.value + 1e-9);
    }
}

TEST(FiveCycles, PetersenCover)
{
    WeightedGraph g = petersen_graph();
    EXPECT_EQ(five_cycles(g).size(), 12u);
    OracleResult r = five_cycle_cover(g);
    ASSERT_TRUE(r.found);
    EXPECT_TRUE(is_five_cycle_cover(g, r.edge_witness));

    using petersen_ids::x;
    using petersen_ids::y;
    ASSERT_TRUE(g.adjacent(x(1), y(1)) && g.adjacent(y(3), y(4)) && g.adjacent(x(3), x(4)));
    std::vector<EdgeId> figure { *g.find_edge(x(1), y(1)), *g.find_edge(y(3), y(4)), *g.find_edge(x(3), x(4)) };
    EXPECT_TRUE(is_five_cycle_cover(g, figure));
    EXPECT_FALSE(is_five_cycle_cover(g, std::vector<EdgeId> { figure[0], figure[1] }));
}

TEST(FiveCycles, SmallCases)
{
    OracleResult c5 = five_cycle_cover(cycle_graph(5));
    EXPECT_TRUE(c5.found);
    EXPECT_EQ(c5.edge_witness.size(), 1u);
    OracleResult c4 = five_cycle_cover(cycle_graph(4));
    EXPECT_TRUE(c4.found);
    EXPECT_TRUE(c4.edge_witness.empty());
    EXPECT_TRUE(five_cycles(cycle_graph(6)).empty());
}

TEST(FiveCycles, RandomSubcubicWitnessesVerify)
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 60; ++i) {
        WeightedGraph g = random_triangle_free_subcubic(std::uniform_int_distribution<int>(5, 20)(rng), rng());
        OracleResult r = five_cycle_cover(g);
        if (r.found) {
            EXPECT_TRUE(is_five_cycle_cover(g, r.edge_witness));
        }
    }
}

TEST(Conjecture, FiveCycleTheta)
{
    ConjectureReport r = conjecture_report(cycle_graph(5));
    ASSERT_TRUE(r.theta_ratio.has_value());
    EXPECT_NEAR(*r.theta_ratio, 0.375, 1e-12);
    EXPECT_TRUE(r.flags.empty());
}

TEST(Conjecture, WeightedPetersenMatchingRatio)
{
    WeightedGraph g = petersen_c3(10, 1);
    std::vector<EdgeId> spokes = petersen_spokes();
    ConjectureReport r = conjecture_report(g, spokes);
    EXPECT_DOUBLE_EQ(r.mac, 56.0);
    ASSERT_TRUE(r.c_ratio.has_value());
    EXPECT_NEAR(*r.c_ratio, 0.6, 1e-12);
    EXPECT_NEAR((r.mac - g.weight_of(spokes)) / (g.total_weight() - g.weight_of(spokes)), 0.6, 1e-12);
}

TEST(Conjecture, BipartiteHasNoFlags)
{
    ConjectureReport r = conjecture_report(cycle_graph(8, 3.0));
    EXPECT_DOUBLE_EQ(r.mac_ratio, 1.0);
    EXPECT_TRUE(r.flags.empty());
}

TEST(Conjecture, RejectsNonMatching)
{
    EXPECT_THROW(conjecture_report(cycle_graph(5), std::vector<EdgeId> { 0, 1 }), Error);
}
