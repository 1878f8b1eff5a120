#ifndef SYMPOLY_GENERATORS_HPP
#define SYMPOLY_GENERATORS_HPP

#include <vector>

#include "graph.hpp"

namespace sympoly::graphs {

/// Path 0 - 1 - ... - (n-1).
inline Graph path(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return Graph(n, std::move(e));
}

/// Cycle with edges {i, i+1 mod n} in order of i.
inline Graph cycle(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return Graph(n, std::move(e));
}

inline Graph complete(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(n, std::move(e));
}

/// Star with centre 0 and leaves 1..n-1.
inline Graph star(std::size_t n)
{
    std::vector<Edge> e;
    for (std::size_t i = 1; i < n; ++i)
        e.push_back({0, static_cast<Vertex>(i)});
    return Graph(n, std::move(e));
}

inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
    return Graph(a + b, std::move(e));
}

/// Wheel K_1 * C_n: hub 0, rim 1..n in cyclic order. Spokes come first
/// (rank i-1 joins the hub to rim vertex i), then the rim edges.
inline Graph wheel(std::size_t n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "wheel needs a rim of at least 3 vertices");
    std::vector<Edge> e;
    for (std::size_t i = 1; i <= n; ++i)
        e.push_back({0, static_cast<Vertex>(i)});
    for (std::size_t i = 1; i <= n; ++i)
        e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i % n + 1)});
    return Graph(n + 1, std::move(e));
}

/// Glues g2 onto g1 by identifying vertex v2 of g2 with vertex v1 of g1.
/// Vertices of g1 keep their labels; the others of g2 follow in order.
inline Graph vertex_join(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2)
{
    const std::size_t n1 = g1.vertex_count();
    std::vector<Vertex> map(g2.vertex_count());
    Vertex next = static_cast<Vertex>(n1);
    for (std::size_t v = 0; v < g2.vertex_count(); ++v)
        map[v] = static_cast<Vertex>(v) == v2 ? v1 : next++;
    std::vector<Edge> e = g1.edges();
    for (const Edge& ed : g2.edges())
        e.push_back({map[ed.u], map[ed.v]});
    return Graph(static_cast<std::size_t>(next), std::move(e));
}

/// Glues g2 onto g1 along an edge: edge r2 = {c, d} of g2 is identified
/// with edge r1 = {a, b} of g1 so that c ~ a and d ~ b.
inline Graph edge_join(const Graph& g1, std::size_t r1, const Graph& g2, std::size_t r2)
{
    const Edge e1 = g1.edge(r1);
    const Edge e2 = g2.edge(r2);
    std::vector<Vertex> map(g2.vertex_count());
    Vertex next = static_cast<Vertex>(g1.vertex_count());
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
        const auto w = static_cast<Vertex>(v);
        map[v] = w == e2.u ? e1.u : w == e2.v ? e1.v : next++;
    }
    std::vector<Edge> e = g1.edges();
    for (std::size_t r = 0; r < g2.edge_count(); ++r)
        if (r != r2)
            e.push_back({map[g2.edge(r).u], map[g2.edge(r).v]});
    return Graph(static_cast<std::size_t>(next), std::move(e));
}

/// Two odd cycles C_{2i+1} and C_{2j+1} sharing one edge.
inline Graph glued_odd_cycles(std::size_t i, std::size_t j)
{
    return edge_join(cycle(2 * i + 1), 0, cycle(2 * j + 1), 0);
}

} // namespace sympoly::graphs

#endif
