#ifndef SYMPOLY_VOLUME_HPP
#define SYMPOLY_VOLUME_HPP

#include <algorithm>
#include <cassert>
#include <set>
#include <vector>

#include "facets.hpp"
#include "graph.hpp"

namespace sympoly {

/// Support of one leading monomial of the Groebner basis: oriented edges
/// sorted by rank.
struct ForbiddenSet {
    std::vector<OrientedEdge> edges;

    friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;
    friend auto operator<=>(const ForbiddenSet&, const ForbiddenSet&) = default;
};

/// Simplices of one facet, each a spanning tree of G_F given by its sorted
/// edge ranks (orientation is read off the facet labeling).
struct FacetTriangulation {
    FacetLabeling facet;
    std::vector<EdgeSet> simplices;
};

struct FacetVolume {
    Integer count;
    FacetTriangulation triangulation;
};

/// Leading-monomial supports for every simple cycle in both orientations:
/// a 2k-cycle gives its k-subsets avoiding the cycle's smallest-rank edge,
/// a (2k+1)-cycle all its (k+1)-subsets. The degree-two binomials x_e y_e - z^2
/// are left out since no facet contains both orientations of an edge.
inline std::vector<ForbiddenSet> forbidden_sets(const Graph& g, const Budget& budget = default_budget())
{
    std::set<ForbiddenSet> out;
    for (const Cycle& c : simple_cycles(g, budget)) {
        const std::size_t len = c.length();
        const std::size_t k = len / 2;
        for (int orientation = 0; orientation < 2; ++orientation) {
            std::vector<OrientedEdge> oriented(len);
            for (std::size_t i = 0; i < len; ++i) {
                Vertex a = c.vertices[i];
                Vertex b = c.vertices[(i + 1) % len];
                if (orientation)
                    std::swap(a, b);
                oriented[i] = {a, b, c.edge_ranks[i]};
            }
            std::vector<OrientedEdge> pool;
            std::size_t size = k + 1;
            if (len % 2 == 0) {
                const auto smallest = std::min_element(c.edge_ranks.begin(), c.edge_ranks.end()) - c.edge_ranks.begin();
                for (std::size_t i = 0; i < len; ++i)
                    if (static_cast<std::ptrdiff_t>(i) != smallest)
                        pool.push_back(oriented[i]);
                size = k;
            } else {
                pool = oriented;
            }
            detail::for_each_subset(pool.size(), size, [&](const std::vector<std::size_t>& idx) {
                ForbiddenSet fs;
                for (std::size_t i : idx)
                    fs.edges.push_back(pool[i]);
                std::sort(fs.edges.begin(), fs.edges.end());
                out.insert(std::move(fs));
            });
        }
    }
    return {out.begin(), out.end()};
}

/// Spanning trees of G_F that contain no forbidden set lying entirely in G_F.
inline FacetVolume facet_volume(const Graph& g, const FacetLabeling& f, const std::vector<ForbiddenSet>& forb,
                                bool keep_simplices = true)
{
    const OrientedSubgraph sub = facet_subgraph(g, f);
    if (sub.edges.size() > 64)
        throw Error(ErrorKind::SizeBudgetExceeded, "facet subgraph with more than 64 edges");
    std::vector<int> slot(g.edge_count(), -1);
    for (std::size_t i = 0; i < sub.edges.size(); ++i) {
        assert(slot[sub.edges[i].rank] < 0);
        slot[sub.edges[i].rank] = static_cast<int>(i);
    }

    std::vector<std::uint64_t> relevant;
    for (const ForbiddenSet& fs : forb) {
        std::uint64_t mask = 0;
        bool inside = true;
        for (const OrientedEdge& e : fs.edges) {
            const int s = slot.at(e.rank);
            if (s < 0 || sub.edges[s].tail != e.tail) {
                inside = false;
                break;
            }
            mask |= std::uint64_t{1} << s;
        }
        if (inside)
            relevant.push_back(mask);
    }

    FacetVolume out{0, {f, {}}};
    const std::vector<Edge> undirected = sub.undirected();
    for_each_spanning_tree(g.vertex_count(), undirected, [&](const std::vector<std::size_t>& tree) {
        std::uint64_t mask = 0;
        for (std::size_t i : tree)
            mask |= std::uint64_t{1} << i;
        for (std::uint64_t r : relevant)
            if ((mask & r) == r)
                return;
        out.count += 1;
        if (keep_simplices) {
            EdgeSet ranks;
            for (std::size_t i : tree)
                ranks.push_back(sub.edges[i].rank);
            std::sort(ranks.begin(), ranks.end());
            out.triangulation.simplices.push_back(std::move(ranks));
        }
    });
    std::sort(out.triangulation.simplices.begin(), out.triangulation.simplices.end());
    return out;
}

/// Regular unimodular triangulation of the boundary, facet by facet, in
/// facet enumeration order.
inline std::vector<FacetTriangulation> triangulation(const Graph& g, const Budget& budget = default_budget())
{
    const auto forb = forbidden_sets(g, budget);
    std::vector<FacetTriangulation> out;
    for (const auto& f : enumerate_facets(g))
        out.push_back(facet_volume(g, f, forb).triangulation);
    return out;
}

/// Normalized volume with respect to the zero-sum lattice.
inline Integer normalized_volume(const Graph& g, const Budget& budget = default_budget())
{
    const auto forb = forbidden_sets(g, budget);
    Integer total = 0;
    for (const auto& f : enumerate_facets(g))
        total += facet_volume(g, f, forb, false).count;
    return total;
}

} // namespace sympoly

#endif
