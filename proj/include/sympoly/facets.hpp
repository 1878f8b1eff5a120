#ifndef SYMPOLY_FACETS_HPP
#define SYMPOLY_FACETS_HPP

#include <cstdlib>
#include <functional>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "graph.hpp"
#include "linear.hpp"

namespace sympoly {

/// Integer vertex labeling f with f(0) = 0 describing the facet
/// { x : sum_v f(v) x_v = 1 } of the symmetric edge polytope.
struct FacetLabeling {
    std::vector<int> values;

    int operator[](Vertex v) const { return values.at(v); }
    FacetLabeling negated() const
    {
        FacetLabeling r = *this;
        for (int& x : r.values)
            x = -x;
        return r;
    }

    friend bool operator==(const FacetLabeling&, const FacetLabeling&) = default;
    friend auto operator<=>(const FacetLabeling&, const FacetLabeling&) = default;
};

/// The oriented edges (u, v) with f(v) - f(u) = 1, in edge-rank order.
struct OrientedSubgraph {
    std::size_t vertex_count = 0;
    std::vector<OrientedEdge> edges;

    std::vector<Edge> undirected() const
    {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (const auto& e : edges)
            out.push_back({e.tail, e.head});
        return out;
    }
};

/// Checks both facet conditions: |f(u) - f(v)| <= 1 on every edge, and the
/// edges with |f(u) - f(v)| = 1 form a connected spanning subgraph.
inline bool is_facet_defining(const Graph& g, const FacetLabeling& f)
{
    if (f.values.size() != g.vertex_count() || f.values.empty() || f.values[0] != 0)
        return false;
    detail::DisjointSets ds(g.vertex_count());
    std::size_t comps = g.vertex_count();
    for (const Edge& e : g.edges()) {
        const int d = std::abs(f[e.u] - f[e.v]);
        if (d > 1)
            return false;
        if (d == 1 && ds.unite(e.u, e.v))
            --comps;
    }
    return comps == 1;
}

namespace detail {

/// DFS over vertices in BFS order from vertex 0. Each vertex takes its BFS
/// parent's label plus -1, 0 or +1 (0 skipped for bipartite graphs, where
/// every facet has |f(u) - f(v)| = 1 on all edges), subject to |f(v)| <=
/// dist(0, v) and |f(u) - f(v)| <= 1 against already labeled neighbours.
template <class Visit>
void search_facets(const Graph& g, Visit&& visit)
{
    const std::size_t n = g.vertex_count();
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "facet enumeration needs at least two vertices");
    require_connected(g, "facet enumeration");
    const std::vector<int> dist = distances(g, 0);
    const bool bipartite = is_bipartite(g).has_value();

    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& inc : g.neighbors(order[i]))
            if (!seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                parent[inc.neighbor] = order[i];
                order.push_back(inc.neighbor);
            }
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = i;

    FacetLabeling f{std::vector<int>(n, 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (is_facet_defining(g, f))
                visit(static_cast<const FacetLabeling&>(f));
            return;
        }
        const Vertex v = order[i];
        for (int delta : {-1, 0, 1}) {
            if (bipartite && delta == 0)
                continue;
            const int value = f[parent[v]] + delta;
            if (std::abs(value) > dist[v])
                continue;
            bool ok = true;
            for (const auto& inc : g.neighbors(v)) {
                if (position[inc.neighbor] >= i)
                    continue;
                const int d = std::abs(value - f[inc.neighbor]);
                if (d > 1 || (bipartite && d == 0)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            f.values[v] = value;
            rec(i + 1);
        }
        f.values[v] = 0;
    };
    rec(1);
}

} // namespace detail

/// All facet labelings of a connected graph with at least two vertices.
inline std::vector<FacetLabeling> enumerate_facets(const Graph& g)
{
    std::vector<FacetLabeling> out;
    detail::search_facets(g, [&](const FacetLabeling& f) { out.push_back(f); });
    return out;
}

inline Integer count_facets(const Graph& g)
{
    std::uint64_t count = 0;
    detail::search_facets(g, [&](const FacetLabeling&) { ++count; });
    return count;
}

inline OrientedSubgraph facet_subgraph(const Graph& g, const FacetLabeling& f)
{
    if (!is_facet_defining(g, f))
        throw Error(ErrorKind::NotAFacet, "labeling does not define a facet");
    OrientedSubgraph sub{g.vertex_count(), {}};
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const Edge& e = g.edge(r);
        if (f[e.v] - f[e.u] == 1)
            sub.edges.push_back({e.u, e.v, r});
        else if (f[e.u] - f[e.v] == 1)
            sub.edges.push_back({e.v, e.u, r});
    }
    return sub;
}

/// Vertex-facet incidences of the polytope. Polytope vertex 2r is edge r
/// oriented as stored (u -> v, the point e_v - e_u), vertex 2r+1 its reverse.
struct IncidenceStructure {
    std::size_t graph_vertices = 0;
    std::vector<OrientedEdge> vertices;
    std::vector<FacetLabeling> facets;
    /// members[j] has bit i set iff vertex i lies on facet j.
    std::vector<boost::dynamic_bitset<>> members;

    std::size_t dimension() const { return graph_vertices - 1; }
};

inline IncidenceStructure incidence_structure(const Graph& g)
{
    IncidenceStructure inc;
    inc.graph_vertices = g.vertex_count();
    for (std::size_t r = 0; r < g.edge_count(); ++r) {
        const Edge& e = g.edge(r);
        inc.vertices.push_back({e.u, e.v, r});
        inc.vertices.push_back({e.v, e.u, r});
    }
    inc.facets = enumerate_facets(g);
    for (const auto& f : inc.facets) {
        boost::dynamic_bitset<> bits(inc.vertices.size());
        for (std::size_t i = 0; i < inc.vertices.size(); ++i)
            if (f[inc.vertices[i].head] - f[inc.vertices[i].tail] == 1)
                bits.set(i);
        inc.members.push_back(std::move(bits));
    }
    return inc;
}

struct FaceLattice {
    /// f-vector f_0 .. f_{d-1}.
    std::vector<Integer> fvector;
    /// Proper nonempty faces as vertex sets, with their dimensions.
    std::vector<boost::dynamic_bitset<>> faces;
    std::vector<std::size_t> dims;
};

namespace detail {

/// Affine dimension of a proper face: linear rank of its points in the
/// chart e_i - e_{n-1} minus one (the face lies on f.x = 1, off the origin).
inline std::size_t face_dimension(const IncidenceStructure& inc, const boost::dynamic_bitset<>& face)
{
    const std::size_t cols = inc.graph_vertices - 1;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = face.find_first(); i != boost::dynamic_bitset<>::npos; i = face.find_next(i)) {
        std::vector<Rational> row(cols, 0);
        const auto& oe = inc.vertices[i];
        if (static_cast<std::size_t>(oe.head) < cols)
            row[oe.head] += 1;
        if (static_cast<std::size_t>(oe.tail) < cols)
            row[oe.tail] -= 1;
        rows.push_back(std::move(row));
    }
    return rank(std::move(rows)) - 1;
}

} // namespace detail

/// Proper faces as all nonempty intersections of facet vertex sets.
inline FaceLattice face_lattice(const IncidenceStructure& inc, const Budget& budget = default_budget())
{
    const std::size_t d = inc.dimension();
    if (d > budget.max_face_lattice_dim)
        throw Error(ErrorKind::SizeBudgetExceeded,
                    "face lattice of a " + std::to_string(d) + "-dimensional polytope exceeds cap " +
                        std::to_string(budget.max_face_lattice_dim));
    std::set<boost::dynamic_bitset<>> faces(inc.members.begin(), inc.members.end());
    std::vector<boost::dynamic_bitset<>> frontier(faces.begin(), faces.end());
    while (!frontier.empty()) {
        std::vector<boost::dynamic_bitset<>> next;
        for (const auto& face : frontier)
            for (const auto& facet : inc.members) {
                auto meet = face & facet;
                if (meet.any() && faces.insert(meet).second)
                    next.push_back(std::move(meet));
            }
        frontier = std::move(next);
    }
    FaceLattice out;
    out.fvector.assign(d, 0);
    for (const auto& face : faces) {
        const std::size_t dim = detail::face_dimension(inc, face);
        out.faces.push_back(face);
        out.dims.push_back(dim);
        if (dim < d)
            out.fvector[dim] += 1;
    }
    return out;
}

inline std::vector<Integer> fvector(const Graph& g, const Budget& budget = default_budget())
{
    return face_lattice(incidence_structure(g), budget).fvector;
}

} // namespace sympoly

#endif
