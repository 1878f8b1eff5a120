#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sympoly/generators.hpp"
#include "sympoly/graph.hpp"
#include "support.hpp"

using namespace sympoly;
using testing_support::components;
using testing_support::random_connected_graph;
using testing_support::select;

namespace {

std::vector<std::vector<int>> floyd_warshall(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t i = 0; i < n; ++i)
        d[i][i] = 0;
    for (const Edge& e : g.edges())
        d[e.u][e.v] = d[e.v][e.u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Subsets that are simple cycles: connected, every touched vertex of degree 2.
std::size_t cycle_subsets(const Graph& g)
{
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        auto edges = select(g, mask);
        std::vector<int> deg(g.vertex_count(), 0);
        for (const Edge& e : edges) {
            ++deg[e.u];
            ++deg[e.v];
        }
        std::size_t touched = 0;
        bool ok = true;
        for (int d : deg) {
            if (d != 0 && d != 2)
                ok = false;
            touched += d != 0;
        }
        if (ok && components(g.vertex_count(), edges) == g.vertex_count() - touched + 1)
            ++count;
    }
    return count;
}

std::size_t spanning_tree_subsets(const Graph& g)
{
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask)
        if (std::popcount(mask) + 1 == static_cast<int>(g.vertex_count()) &&
            components(g.vertex_count(), select(g, mask)) == 1)
            ++count;
    return count;
}

std::size_t graphic_rank(const Graph& g, std::uint64_t mask)
{
    return g.vertex_count() - components(g.vertex_count(), select(g, mask));
}

} // namespace

TEST(Graph, RejectsLoopsParallelEdgesAndRange)
{
    EXPECT_THROW(Graph(2, {{0, 0}}), Error);
    EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), Error);
    EXPECT_THROW(Graph(2, {{0, 2}}), Error);
}

TEST(Distances, PathAndCycleAndComplete)
{
    EXPECT_EQ(distances(graphs::path(3), 0), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(distances(graphs::cycle(4), 0), (std::vector<int>{0, 1, 2, 1}));
    EXPECT_EQ(distances(graphs::complete(4), 2), (std::vector<int>{1, 1, 0, 1}));
}

TEST(Distances, DisconnectedThrows)
{
    try {
        distances(Graph(3, {{0, 1}}), 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DisconnectedGraph);
    }
}

TEST(Distances, AgreeWithFloydWarshallAndAreAMetric)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(2 + trial % 8, 0.3, rng);
        auto fw = floyd_warshall(g);
        const std::size_t n = g.vertex_count();
        std::vector<std::vector<int>> d;
        for (std::size_t v = 0; v < n; ++v)
            d.push_back(distances(g, static_cast<Vertex>(v)));
        EXPECT_EQ(d, fw);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                EXPECT_EQ(d[a][b], d[b][a]);
                for (std::size_t c = 0; c < n; ++c)
                    EXPECT_LE(d[a][c], d[a][b] + d[b][c]);
            }
    }
}

TEST(Bipartite, Examples)
{
    auto c4 = is_bipartite(graphs::cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->a, (std::vector<Vertex>{0, 2}));
    EXPECT_EQ(c4->b, (std::vector<Vertex>{1, 3}));
    EXPECT_FALSE(is_bipartite(graphs::cycle(3)));
    EXPECT_TRUE(is_bipartite(Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})));
}

TEST(Bipartite, MatchesExhaustiveColoring)
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(2 + trial % 7, 0.25, rng);
        bool colorable = false;
        for (std::uint32_t c = 0; c < (1u << g.vertex_count()) && !colorable; ++c) {
            bool ok = true;
            for (const Edge& e : g.edges())
                ok = ok && ((c >> e.u & 1u) != (c >> e.v & 1u));
            colorable = ok;
        }
        auto part = is_bipartite(g);
        EXPECT_EQ(part.has_value(), colorable);
        if (part) {
            EXPECT_EQ(part->a.front(), 0);
            std::vector<int> side(g.vertex_count(), -1);
            for (Vertex v : part->a)
                side[v] = 0;
            for (Vertex v : part->b)
                side[v] = 1;
            for (const Edge& e : g.edges())
                EXPECT_NE(side[e.u], side[e.v]);
        }
    }
}

TEST(SpanningTrees, Examples)
{
    EXPECT_EQ(spanning_trees(graphs::cycle(4)).size(), 4u);
    EXPECT_EQ(spanning_trees(graphs::path(5)).size(), 1u);
    EXPECT_EQ(spanning_trees(graphs::complete(4)).size(), 16u);
    EXPECT_EQ(matrix_tree_count(graphs::complete(5)), Integer(125));
}

TEST(SpanningTrees, EachTreeIsSpanningAcyclicAndDistinct)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(2 + trial % 6, 0.4, rng);
        auto trees = spanning_trees(g);
        std::set<EdgeSet> distinct(trees.begin(), trees.end());
        EXPECT_EQ(distinct.size(), trees.size());
        for (const auto& t : trees) {
            ASSERT_EQ(t.size() + 1, g.vertex_count());
            std::vector<Edge> e;
            for (auto r : t)
                e.push_back(g.edge(r));
            EXPECT_EQ(components(g.vertex_count(), e), 1u);
        }
        EXPECT_EQ(trees.size(), spanning_tree_subsets(g));
    }
}

TEST(SpanningTrees, CountEqualsMatrixTreeOnThousandRandomGraphs)
{
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_connected_graph(1 + trial % 7, density(rng), rng);
        std::uint64_t count = for_each_spanning_tree(g.vertex_count(), g.edges(), [](const auto&) {});
        EXPECT_EQ(Integer(count), matrix_tree_count(g)) << "trial " << trial;
    }
}

TEST(SimpleCycles, Examples)
{
    auto c6 = simple_cycles(graphs::cycle(6));
    ASSERT_EQ(c6.size(), 1u);
    EXPECT_EQ(c6[0].length(), 6u);
    EXPECT_TRUE(simple_cycles(graphs::star(5)).empty());
    auto k4 = simple_cycles(graphs::complete(4));
    std::map<std::size_t, int> by_length;
    for (const auto& c : k4)
        ++by_length[c.length()];
    EXPECT_EQ(by_length[3], 4);
    EXPECT_EQ(by_length[4], 3);
}

TEST(SimpleCycles, MatchExhaustiveSubsetCheck)
{
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(3 + trial % 5, 0.5, rng);
        auto cycles = simple_cycles(g);
        EXPECT_EQ(cycles.size(), cycle_subsets(g));
        std::set<EdgeSet> supports;
        for (const auto& c : cycles) {
            ASSERT_EQ(c.edge_ranks.size(), c.length());
            for (std::size_t i = 0; i < c.length(); ++i) {
                const Edge& e = g.edge(c.edge_ranks[i]);
                const Vertex a = c.vertices[i], b = c.vertices[(i + 1) % c.length()];
                EXPECT_TRUE((e.u == a && e.v == b) || (e.u == b && e.v == a));
            }
            EdgeSet s = c.edge_ranks;
            std::sort(s.begin(), s.end());
            supports.insert(s);
        }
        EXPECT_EQ(supports.size(), cycles.size());
    }
}

TEST(SimpleCycles, BudgetExceeded)
{
    Budget b;
    b.max_cycles = 5;
    try {
        simple_cycles(graphs::complete(4), b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::CycleBudgetExceeded);
    }
}

TEST(Contract, Examples)
{
    const Graph c4 = graphs::cycle(4);
    EdgeSet one{0};
    Graph c3 = contract(c4, one);
    EXPECT_EQ(c3.vertex_count(), 3u);
    EXPECT_EQ(c3.edge_count(), 3u);
    EXPECT_FALSE(is_bipartite(c3));

    EdgeSet opposite{0, 2};
    Graph k2 = contract(c4, opposite);
    EXPECT_EQ(k2.vertex_count(), 2u);
    EXPECT_EQ(k2.edges(), (std::vector<Edge>{{0, 1}}));

    EXPECT_EQ(contract(c4, EdgeSet{}), c4);
}

TEST(Contract, VertexCountAndSpanningTree)
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(2 + trial % 7, 0.4, rng);
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << g.edge_count()) - 1);
        const std::uint64_t mask = pick(rng);
        Graph h = contract(g, mask_to_edges(mask));
        EXPECT_EQ(h.vertex_count(), components(g.vertex_count(), select(g, mask)));
        auto tree = spanning_trees(g).front();
        Graph point = contract(g, tree);
        EXPECT_EQ(point.vertex_count(), 1u);
        EXPECT_EQ(point.edge_count(), 0u);
    }
}

TEST(Flats, Examples)
{
    EXPECT_EQ(flats(graphs::cycle(3)).size(), 5u);
    EXPECT_EQ(flats(graphs::path(6)).size(), 32u);
    // C_n: the full set and every subset of size < n - 1.
    for (std::size_t n = 3; n <= 8; ++n) {
        auto lattice = flats(graphs::cycle(n), false);
        std::size_t expected = 1;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            expected += std::popcount(mask) + 1 < static_cast<int>(n);
        EXPECT_EQ(lattice.size(), expected);
    }
}

TEST(Flats, ClosureIsExtensiveIdempotentAndRankPreserving)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        Graph g = random_connected_graph(2 + trial % 7, 0.5, rng);
        if (g.edge_count() > 12)
            continue;
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << g.edge_count()) - 1);
        const std::uint64_t mask = pick(rng);
        const std::uint64_t closed = matroid_closure(g, mask);
        EXPECT_EQ(closed & mask, mask);
        EXPECT_EQ(matroid_closure(g, closed), closed);
        EXPECT_EQ(graphic_rank(g, closed), graphic_rank(g, mask));
        for (std::size_t r = 0; r < g.edge_count(); ++r)
            if (!(closed >> r & 1u)) {
                EXPECT_GT(graphic_rank(g, closed | std::uint64_t{1} << r), graphic_rank(g, closed));
            }
    }
}

TEST(Flats, MembershipAndMobiusRecursion)
{
    std::mt19937 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(2 + trial % 5, 0.5, rng);
        auto lattice = flats(g);
        std::set<std::uint64_t> members(lattice.flats.begin(), lattice.flats.end());
        EXPECT_EQ(lattice.flats.front(), 0u);
        EXPECT_EQ(lattice.flats.back(), (std::uint64_t{1} << g.edge_count()) - 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
            bool closed = true;
            for (std::size_t r = 0; r < g.edge_count(); ++r)
                if (!(mask >> r & 1u) && graphic_rank(g, mask | std::uint64_t{1} << r) == graphic_rank(g, mask))
                    closed = false;
            EXPECT_EQ(members.count(mask) == 1, closed);
        }
        const std::size_t top = lattice.size() - 1;
        for (std::size_t i = 0; i < lattice.size(); ++i) {
            EXPECT_EQ(lattice.mobius_to_top[i], lattice.mobius(i, top));
            EXPECT_EQ(lattice.mobius_from_bottom[i], lattice.mobius(0, i));
            // sum over F <= H <= top of mu(H, top) is [F = top]
            Integer sum = 0;
            for (std::size_t h = 0; h < lattice.size(); ++h)
                if (FlatLattice::leq(lattice.flats[i], lattice.flats[h]))
                    sum += lattice.mobius_to_top[h];
            EXPECT_EQ(sum, Integer(i == top ? 1 : 0));
        }
    }
}

TEST(Flats, BudgetExceeded)
{
    Budget b;
    b.max_flat_edges = 5;
    try {
        flats(graphs::complete(4), true, b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SizeBudgetExceeded);
    }
}
