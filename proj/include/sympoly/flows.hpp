#ifndef SYMPOLY_FLOWS_HPP
#define SYMPOLY_FLOWS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "budget.hpp"
#include "ehrhart.hpp"
#include "facets.hpp"
#include "graph.hpp"

namespace sympoly {

/// Undirected multigraph: parallel edges allowed, loops rejected. Every edge
/// is oriented from its smaller endpoint (tail) to its larger one (head).
class Multigraph {
public:
    Multigraph() = default;

    Multigraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        for (Edge& e : edges_) {
            if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
                static_cast<std::size_t>(e.v) >= n_)
                throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
            if (e.u == e.v)
                throw Error(ErrorKind::LoopsUnsupported, "loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
    }

    explicit Multigraph(const Graph& g) : Multigraph(g.vertex_count(), g.edges()) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t degree(Vertex v) const
    {
        return static_cast<std::size_t>(
            std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// Integer flows with entries in {+-1, ..., +-(k-1)}, counted exhaustively.
/// A vertex's conservation law is checked as soon as its last incident edge
/// is assigned.
inline Integer nowhere_zero_flows(const Multigraph& g, int k, const Budget& budget = default_budget())
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "k must be at least 2");
    const std::size_t m = g.edge_count();
    Integer space = 1;
    for (std::size_t i = 0; i < m; ++i)
        space *= 2 * k - 2;
    if (space > budget.max_flow_assignments)
        throw Error(ErrorKind::SizeBudgetExceeded, "flow search space " + space.str() + " exceeds cap " +
                                                       std::to_string(budget.max_flow_assignments));
    const std::size_t n = g.vertex_count();
    if (m == 0)
        return 1;

    // Assign edges in order of their later endpoint so vertices close early.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.edges()[a].v < g.edges()[b].v;
    });
    std::vector<std::size_t> last(n, 0);
    std::vector<char> touched(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const Edge& e = g.edges()[order[i]];
        last[e.u] = last[e.v] = i;
        touched[e.u] = touched[e.v] = 1;
    }
    std::vector<std::vector<Vertex>> closes(m);
    for (std::size_t v = 0; v < n; ++v)
        if (touched[v])
            closes[last[v]].push_back(static_cast<Vertex>(v));

    std::vector<long> net(n, 0); // inflow minus outflow
    std::vector<int> values;
    for (int x = 1; x < k; ++x) {
        values.push_back(x);
        values.push_back(-x);
    }
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            ++count;
            return;
        }
        const Edge& e = g.edges()[order[i]];
        for (int x : values) {
            net[e.v] += x;
            net[e.u] -= x;
            const bool ok = std::all_of(closes[i].begin(), closes[i].end(), [&](Vertex v) { return net[v] == 0; });
            if (ok)
                rec(i + 1);
            net[e.v] -= x;
            net[e.u] += x;
        }
    };
    rec(0);
    return count;
}

/// Facets of a bipartite planar graph from 2-flows on a supplied planar dual.
inline Integer facets_via_dual_flows(const Multigraph& dual, const Budget& budget = default_budget())
{
    return nowhere_zero_flows(dual, 2, budget);
}

namespace detail {

/// Facet count with the one-vertex graph counted as having one facet.
inline Integer facets_or_one(const Graph& g) { return g.vertex_count() == 1 ? Integer(1) : count_facets(g); }

} // namespace detail

/// Polar-dual lattice points as the sum, over flats S with G/S bipartite, of
/// the facet counts of G/S (parallel edges of G/S collapsed).
inline Integer dual_points_via_mobius(const Graph& g, const Budget& budget = default_budget())
{
    require_connected(g, "dual_points_via_mobius");
    const FlatLattice lattice = flats(g, false, budget);
    Integer total = 0;
    for (std::uint64_t flat : lattice.flats) {
        const EdgeSet s = mask_to_edges(flat);
        const Graph h = contract(g, s);
        if (is_bipartite(h))
            total += detail::facets_or_one(h);
    }
    return total;
}

/// Facet count as sum over flats H of mu(bottom, H) times the polar-dual
/// point count of G/H; holds for planar bipartite graphs.
inline Integer facets_via_inside_out(const Graph& g, const Budget& budget = default_budget())
{
    require_connected(g, "facets_via_inside_out");
    const FlatLattice lattice = flats(g, true, budget);
    Integer total = 0;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (lattice.mobius_from_bottom[i] == 0)
            continue;
        const EdgeSet s = mask_to_edges(lattice.flats[i]);
        total += lattice.mobius_from_bottom[i] * polar_dual_points(contract(g, s));
    }
    return total;
}

} // namespace sympoly

#endif
