#ifndef SYMPOLY_GRAPH_HPP
#define SYMPOLY_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "types.hpp"

namespace sympoly {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed copy of a graph edge: the polytope vertex e_head - e_tail.
struct OrientedEdge {
    Vertex tail = 0;
    Vertex head = 0;
    std::size_t rank = 0;

    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
    friend auto operator<=>(const OrientedEdge& a, const OrientedEdge& b)
    {
        return std::tie(a.rank, a.tail, a.head) <=> std::tie(b.rank, b.tail, b.head);
    }
};

/// Sorted list of edge ranks.
using EdgeSet = std::vector<std::size_t>;

namespace detail {

/// Calls visit(indices) for every k-subset of 0..n-1 in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        visit(static_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}


struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

} // namespace detail

/// Simple undirected graph on vertices 0..n-1. The position of an edge in
/// edges() is its rank in the fixed total edge order.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges))
    {
        std::unordered_set<std::uint64_t> seen;
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n_ ||
                static_cast<std::size_t>(e.v) >= n_)
                throw Error(ErrorKind::InvalidGraph, "edge endpoint out of range");
            if (e.u == e.v)
                throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(e.u));
            if (!seen.insert(key(e.u, e.v)).second)
                throw Error(ErrorKind::InvalidGraph,
                            "parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
        }
        adjacency_.assign(n_, {});
        for (std::size_t r = 0; r < edges_.size(); ++r) {
            adjacency_[edges_[r].u].push_back({edges_[r].v, r});
            adjacency_[edges_[r].v].push_back({edges_[r].u, r});
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t rank) const { return edges_.at(rank); }

    struct Incidence {
        Vertex neighbor;
        std::size_t rank;
    };
    const std::vector<Incidence>& neighbors(Vertex v) const { return adjacency_.at(v); }

    std::optional<std::size_t> edge_rank(Vertex a, Vertex b) const
    {
        for (const auto& inc : adjacency_.at(a))
            if (inc.neighbor == b)
                return inc.rank;
        return std::nullopt;
    }

    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

    /// Same graph with edge ranks permuted: new rank i holds old edge order[i].
    Graph reordered(std::span<const std::size_t> order) const
    {
        std::vector<Edge> e;
        e.reserve(order.size());
        for (std::size_t r : order)
            e.push_back(edges_.at(r));
        return Graph(n_, std::move(e));
    }

    /// Vertex relabeling: vertex v becomes perm[v]; edge order is kept.
    Graph relabeled(std::span<const Vertex> perm) const
    {
        std::vector<Edge> e;
        e.reserve(edges_.size());
        for (const Edge& ed : edges_)
            e.push_back({perm[ed.u], perm[ed.v]});
        return Graph(n_, std::move(e));
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    static std::uint64_t key(Vertex a, Vertex b)
    {
        if (a > b)
            std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

inline bool is_connected(const Graph& g)
{
    if (g.vertex_count() <= 1)
        return true;
    detail::DisjointSets ds(g.vertex_count());
    std::size_t comps = g.vertex_count();
    for (const Edge& e : g.edges())
        if (ds.unite(e.u, e.v))
            --comps;
    return comps == 1;
}

inline void require_connected(const Graph& g, const char* what)
{
    if (!is_connected(g))
        throw Error(ErrorKind::DisconnectedGraph, std::string(what) + " requires a connected graph");
}

/// BFS distances in edge count from v.
inline std::vector<int> distances(const Graph& g, Vertex v)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    dist.at(v) = 0;
    queue.push(v);
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        for (const auto& inc : g.neighbors(x)) {
            if (dist[inc.neighbor] < 0) {
                dist[inc.neighbor] = dist[x] + 1;
                queue.push(inc.neighbor);
            }
        }
    }
    for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w] < 0)
            throw Error(ErrorKind::DisconnectedGraph,
                        "vertex " + std::to_string(w) + " unreachable from " + std::to_string(v));
    return dist;
}

struct Bipartition {
    std::vector<Vertex> a;
    std::vector<Vertex> b;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Two-coloring with the smallest vertex of every component in class a.
inline std::optional<Bipartition> is_bipartite(const Graph& g)
{
    std::vector<int> color(g.vertex_count(), -1);
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::queue<Vertex> queue;
        queue.push(static_cast<Vertex>(s));
        while (!queue.empty()) {
            Vertex x = queue.front();
            queue.pop();
            for (const auto& inc : g.neighbors(x)) {
                if (color[inc.neighbor] < 0) {
                    color[inc.neighbor] = 1 - color[x];
                    queue.push(inc.neighbor);
                } else if (color[inc.neighbor] == color[x]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < color.size(); ++v)
        (color[v] == 0 ? parts.a : parts.b).push_back(static_cast<Vertex>(v));
    return parts;
}

/// Calls visit(indices) once for every spanning tree of the graph on n
/// vertices with the given edge list; indices point into `edges`. Returns
/// the number of trees visited. visit may return false to stop early.
template <class Visit>
std::uint64_t for_each_spanning_tree(std::size_t n, std::span<const Edge> edges, Visit&& visit)
{
    if (n == 0)
        return 0;
    std::vector<std::size_t> chosen;
    std::uint64_t count = 0;
    bool stop = false;

    auto completable = [&](detail::DisjointSets ds, std::size_t from, std::size_t have) {
        std::size_t comps = n - have;
        for (std::size_t i = from; i < edges.size() && comps > 1; ++i)
            if (ds.unite(edges[i].u, edges[i].v))
                --comps;
        return comps == 1;
    };

    std::function<void(std::size_t, const detail::DisjointSets&)> rec =
        [&](std::size_t i, const detail::DisjointSets& ds) {
            if (stop)
                return;
            if (chosen.size() + 1 == n) {
                ++count;
                if constexpr (std::is_same_v<std::invoke_result_t<Visit, const std::vector<std::size_t>&>, bool>) {
                    if (!visit(static_cast<const std::vector<std::size_t>&>(chosen)))
                        stop = true;
                } else {
                    visit(static_cast<const std::vector<std::size_t>&>(chosen));
                }
                return;
            }
            if (i == edges.size() || edges.size() - i < n - 1 - chosen.size())
                return;
            detail::DisjointSets with = ds;
            if (with.unite(edges[i].u, edges[i].v)) {
                chosen.push_back(i);
                rec(i + 1, with);
                chosen.pop_back();
            }
            if (completable(ds, i + 1, chosen.size()))
                rec(i + 1, ds);
        };

    detail::DisjointSets start(n);
    if (completable(start, 0, 0))
        rec(0, start);
    return count;
}

/// Every spanning tree of a connected graph as a sorted set of edge ranks.
inline std::vector<EdgeSet> spanning_trees(const Graph& g)
{
    require_connected(g, "spanning_trees");
    std::vector<EdgeSet> out;
    for_each_spanning_tree(g.vertex_count(), g.edges(),
                           [&](const std::vector<std::size_t>& t) { out.push_back(t); });
    return out;
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Kirchhoff's count: determinant of the Laplacian with row/column 0 removed.
inline Integer matrix_tree_count(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n <= 1)
        return 1;
    std::vector<std::vector<Integer>> lap(n - 1, std::vector<Integer>(n - 1, 0));
    for (const Edge& e : g.edges()) {
        const int a = e.u - 1;
        const int b = e.v - 1;
        if (a >= 0)
            lap[a][a] += 1;
        if (b >= 0)
            lap[b][b] += 1;
        if (a >= 0 && b >= 0) {
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    return bareiss_determinant(std::move(lap));
}

/// A simple cycle v_0 v_1 ... v_{L-1}; edge_ranks[i] is the rank of
/// {v_i, v_{i+1 mod L}}. v_0 is the smallest vertex and v_1 < v_{L-1}.
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<std::size_t> edge_ranks;

    std::size_t length() const noexcept { return vertices.size(); }
    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// All simple cycles of length >= 3, each once up to rotation and
/// reflection, in DFS discovery order.
inline std::vector<Cycle> simple_cycles(const Graph& g, const Budget& budget = default_budget())
{
    std::vector<Cycle> out;
    const std::size_t n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    std::vector<std::size_t> ranks;

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex x) {
        for (const auto& inc : g.neighbors(x)) {
            const Vertex y = inc.neighbor;
            if (y == start && path.size() >= 3 && path[1] < path.back()) {
                if (out.size() >= budget.max_cycles)
                    throw Error(ErrorKind::CycleBudgetExceeded,
                                "more than " + std::to_string(budget.max_cycles) + " simple cycles");
                Cycle c{path, ranks};
                c.edge_ranks.push_back(inc.rank);
                out.push_back(std::move(c));
            } else if (y > start && !on_path[y]) {
                on_path[y] = 1;
                path.push_back(y);
                ranks.push_back(inc.rank);
                dfs(start, y);
                path.pop_back();
                ranks.pop_back();
                on_path[y] = 0;
            }
        }
    };

    for (std::size_t s = 0; s < n; ++s) {
        const Vertex start = static_cast<Vertex>(s);
        on_path[s] = 1;
        path.assign(1, start);
        ranks.clear();
        dfs(start, start);
        on_path[s] = 0;
    }
    return out;
}

/// G/S: merge the components of (V, S), drop loops, collapse parallel
/// edges. Merged classes are named by their smallest original vertex and
/// then compacted in increasing order; surviving edges keep relative order.
inline Graph contract(const Graph& g, std::span<const std::size_t> s)
{
    detail::DisjointSets ds(g.vertex_count());
    for (std::size_t r : s)
        ds.unite(g.edge(r).u, g.edge(r).v);
    std::vector<int> label(g.vertex_count(), -1);
    int next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const int root = ds.find(static_cast<int>(v));
        if (label[root] < 0)
            label[root] = next++;
        label[v] = label[root];
    }
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> seen;
    for (const Edge& e : g.edges()) {
        int a = label[e.u];
        int b = label[e.v];
        if (a == b)
            continue;
        const std::uint64_t k = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
        if (seen.insert(k).second)
            edges.push_back({a, b});
    }
    return Graph(static_cast<std::size_t>(next), std::move(edges));
}

/// Closure in the graphic matroid: every edge whose endpoints are joined
/// inside `mask` is added.
inline std::uint64_t matroid_closure(const Graph& g, std::uint64_t mask)
{
    detail::DisjointSets ds(g.vertex_count());
    for (std::size_t r = 0; r < g.edge_count(); ++r)
        if (mask >> r & 1u)
            ds.unite(g.edge(r).u, g.edge(r).v);
    std::uint64_t closed = mask;
    for (std::size_t r = 0; r < g.edge_count(); ++r)
        if (ds.find(g.edge(r).u) == ds.find(g.edge(r).v))
            closed |= std::uint64_t{1} << r;
    return closed;
}

inline EdgeSet mask_to_edges(std::uint64_t mask)
{
    EdgeSet out;
    for (std::size_t r = 0; mask; ++r, mask >>= 1)
        if (mask & 1u)
            out.push_back(r);
    return out;
}

/// Lattice of flats of the graphic matroid, ordered by inclusion. flats are
/// edge bitmasks sorted by (size, mask); index 0 is the bottom, the last
/// entry is the full edge set.
struct FlatLattice {
    std::vector<std::uint64_t> flats;
    /// mobius_to_top[i] = mu(flats[i], E); mobius_from_bottom[i] = mu(bottom, flats[i]).
    /// Both empty when the lattice was built without Mobius values.
    std::vector<Integer> mobius_to_top;
    std::vector<Integer> mobius_from_bottom;

    std::size_t size() const noexcept { return flats.size(); }
    bool has_mobius() const noexcept { return !mobius_to_top.empty(); }

    static bool leq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

    /// mu(flats[i], flats[j]) by the defining recursion on the interval.
    Integer mobius(std::size_t i, std::size_t j) const
    {
        if (!leq(flats.at(i), flats.at(j)))
            return 0;
        std::vector<Integer> mu(flats.size(), 0);
        for (std::size_t k = i; k <= j; ++k) {
            if (!leq(flats[i], flats[k]) || !leq(flats[k], flats[j]))
                continue;
            if (k == i) {
                mu[k] = 1;
                continue;
            }
            Integer sum = 0;
            for (std::size_t h = i; h < k; ++h)
                if (mu[h] != 0 && leq(flats[h], flats[k]))
                    sum += mu[h];
            mu[k] = -sum;
        }
        return mu[j];
    }
};

inline FlatLattice flats(const Graph& g, bool with_mobius = true, const Budget& budget = default_budget())
{
    const std::size_t m = g.edge_count();
    if (m > budget.max_flat_edges || m >= 64)
        throw Error(ErrorKind::SizeBudgetExceeded,
                    "flat enumeration over " + std::to_string(m) + " edges exceeds cap " +
                        std::to_string(budget.max_flat_edges));
    std::vector<std::uint64_t> found;
    const std::uint64_t limit = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < limit; ++mask)
        if (matroid_closure(g, mask) == mask)
            found.push_back(mask);
    std::sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    FlatLattice lattice{std::move(found), {}, {}};
    if (!with_mobius)
        return lattice;
    const std::size_t count = lattice.flats.size();
    if (count > budget.max_mobius_flats)
        throw Error(ErrorKind::SizeBudgetExceeded,
                    std::to_string(count) + " flats exceed the Mobius cap " +
                        std::to_string(budget.max_mobius_flats));
    const auto& f = lattice.flats;
    lattice.mobius_from_bottom.assign(count, 0);
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            lattice.mobius_from_bottom[k] = 1;
            continue;
        }
        Integer sum = 0;
        for (std::size_t h = 0; h < k; ++h)
            if (FlatLattice::leq(f[h], f[k]))
                sum += lattice.mobius_from_bottom[h];
        lattice.mobius_from_bottom[k] = -sum;
    }
    lattice.mobius_to_top.assign(count, 0);
    for (std::size_t k = count; k-- > 0;) {
        if (k + 1 == count) {
            lattice.mobius_to_top[k] = 1;
            continue;
        }
        Integer sum = 0;
        for (std::size_t h = k + 1; h < count; ++h)
            if (FlatLattice::leq(f[k], f[h]))
                sum += lattice.mobius_to_top[h];
        lattice.mobius_to_top[k] = -sum;
    }
    return lattice;
}

} // namespace sympoly

#endif
