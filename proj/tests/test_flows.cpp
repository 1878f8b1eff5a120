#include <iostream>
#include <random>

#include <gtest/gtest.h>

#include "sympoly/flows.hpp"
#include "support.hpp"

using namespace sympoly;

namespace {

Multigraph parallel_edges(std::size_t count)
{
    return Multigraph(2, std::vector<Edge>(count, Edge{0, 1}));
}

// Faces A = 0, B = 1, outer = 2 of two squares sharing an edge.
Multigraph two_squares_dual() { return Multigraph(3, {{0, 1}, {0, 2}, {0, 2}, {0, 2}, {1, 2}, {1, 2}, {1, 2}}); }

// K_{2,3} has three quadrilateral faces, pairwise sharing two edges.
Multigraph k23_dual() { return Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}); }

// Every assignment in {+-1..+-(k-1)}^E, conservation tested at every vertex.
Integer flows_oracle(const Multigraph& g, int k)
{
    const std::size_t m = g.edge_count();
    std::vector<int> values;
    for (int x = 1; x < k; ++x) {
        values.push_back(x);
        values.push_back(-x);
    }
    std::vector<std::size_t> digit(m, 0);
    Integer count = 0;
    while (true) {
        std::vector<long> net(g.vertex_count(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            net[g.edges()[i].v] += values[digit[i]];
            net[g.edges()[i].u] -= values[digit[i]];
        }
        if (std::all_of(net.begin(), net.end(), [](long x) { return x == 0; }))
            ++count;
        std::size_t i = 0;
        while (i < m && digit[i] + 1 == values.size())
            digit[i++] = 0;
        if (i == m)
            break;
        ++digit[i];
    }
    return count;
}

Integer cycle_dual_formula(long n)
{
    Integer total = 1;
    for (long i = 0; i < n - 1; ++i)
        if ((n - i) % 2 == 0)
            total += binomial(n, i) * binomial(n - i, (n - i) / 2);
    return total;
}

} // namespace

TEST(Flows, ParallelEdgeDuals)
{
    EXPECT_EQ(nowhere_zero_flows(parallel_edges(4), 2), Integer(6));
    EXPECT_EQ(facets_via_dual_flows(parallel_edges(4)), count_facets(graphs::cycle(4)));
    EXPECT_EQ(facets_via_dual_flows(parallel_edges(6)), count_facets(graphs::cycle(6)));
    EXPECT_EQ(facets_via_dual_flows(parallel_edges(6)), Integer(20));
}

TEST(Flows, SuppliedPlanarDuals)
{
    EXPECT_EQ(facets_via_dual_flows(two_squares_dual()), count_facets(testing_support::two_squares()));
    EXPECT_EQ(facets_via_dual_flows(k23_dual()), count_facets(graphs::complete_bipartite(2, 3)));
}

TEST(Flows, Triangle)
{
    EXPECT_EQ(nowhere_zero_flows(Multigraph(graphs::cycle(3)), 2), Integer(2));
}

TEST(Flows, OddDegreeGivesNoTwoFlows)
{
    for (const Graph& g : {graphs::complete(4), graphs::wheel(5), graphs::path(3), graphs::star(4),
                           graphs::complete_bipartite(3, 3), graphs::glued_odd_cycles(1, 2)}) {
        const Multigraph mg(g);
        bool odd = false;
        for (std::size_t v = 0; v < mg.vertex_count(); ++v)
            odd = odd || mg.degree(static_cast<Vertex>(v)) % 2 == 1;
        ASSERT_TRUE(odd);
        EXPECT_EQ(nowhere_zero_flows(mg, 2), Integer(0));
    }
}

TEST(Flows, LoopsRejected)
{
    try {
        Multigraph(1, {{0, 0}, {0, 0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::LoopsUnsupported);
    }
}

TEST(Flows, PruningMatchesExhaustiveSearch)
{
    std::mt19937 rng(61);
    std::uniform_int_distribution<int> vertex(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Edge> edges;
        const std::size_t m = 3 + trial % 6;
        while (edges.size() < m) {
            int a = vertex(rng), b = vertex(rng);
            if (a != b)
                edges.push_back({a, b});
        }
        const Multigraph g(4, edges);
        for (int k = 2; k <= (m <= 6 ? 4 : 3); ++k)
            EXPECT_EQ(nowhere_zero_flows(g, k), flows_oracle(g, k)) << "trial " << trial << " k " << k;
    }
}

TEST(Flows, Budget)
{
    Budget small;
    small.max_flow_assignments = 1000;
    try {
        nowhere_zero_flows(parallel_edges(12), 2, small);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeBudgetExceeded);
    }
}

TEST(DualPoints, MobiusSumExamples)
{
    EXPECT_EQ(dual_points_via_mobius(graphs::path(2)), Integer(3));
    EXPECT_EQ(dual_points_via_mobius(graphs::cycle(4)), Integer(19));
    EXPECT_EQ(dual_points_via_mobius(graphs::cycle(6)), Integer(141));
    for (long n = 3; n <= 9; ++n)
        EXPECT_EQ(dual_points_via_mobius(graphs::cycle(static_cast<std::size_t>(n))), cycle_dual_formula(n));
}

TEST(DualPoints, MobiusSumAgreesWithDirectCountOnPlanarGraphs)
{
    std::vector<Graph> planar{graphs::complete(4), testing_support::two_squares(),
                              graphs::glued_odd_cycles(1, 1), graphs::glued_odd_cycles(1, 2),
                              graphs::glued_odd_cycles(2, 2), graphs::complete_bipartite(2, 3)};
    for (std::size_t n = 2; n <= 7; ++n) {
        planar.push_back(graphs::path(n));
        planar.push_back(graphs::star(n));
    }
    for (std::size_t n = 3; n <= 6; ++n)
        planar.push_back(graphs::wheel(n));
    for (const Graph& g : planar)
        EXPECT_EQ(dual_points_via_mobius(g), polar_dual_points(g));
}

TEST(DualPoints, NonPlanarObservation)
{
    for (const Graph& g : {graphs::complete(5), graphs::complete_bipartite(3, 3)}) {
        const Integer mobius = dual_points_via_mobius(g), direct = polar_dual_points(g);
        std::cout << "[ note ] non-planar n=" << g.vertex_count() << " m=" << g.edge_count()
                  << ": Mobius sum " << mobius << ", direct count " << direct << '\n';
    }
}

TEST(DualPoints, InsideOutIdentityOnPlanarBipartiteGraphs)
{
    std::vector<Graph> graphs_{graphs::cycle(4), graphs::cycle(6), testing_support::two_squares(),
                               graphs::complete_bipartite(2, 3), graphs::path(5), graphs::star(5)};
    for (const Graph& g : graphs_)
        EXPECT_EQ(facets_via_inside_out(g), count_facets(g));
}
