#ifndef SYMPOLY_TESTS_SUPPORT_HPP
#define SYMPOLY_TESTS_SUPPORT_HPP

// Shared fixtures and brute-force oracles for the test suites. Oracles here
// deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "sympoly/generators.hpp"
#include "sympoly/genfun.hpp"
#include "sympoly/graph.hpp"

namespace testing_support {

using sympoly::Edge;
using sympoly::Graph;
using sympoly::Vertex;

/// Connected graph on n vertices: a random spanning tree plus each other
/// pair independently with probability p; edge order shuffled.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng)
{
    std::vector<Edge> edges;
    std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        const std::size_t u = pick(rng);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        used[u][v] = used[v][u] = 1;
    }
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!used[u][v] && coin(rng))
                edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    std::shuffle(edges.begin(), edges.end(), rng);
    return Graph(n, std::move(edges));
}

/// Number of connected components of (V, subset of edges).
inline std::size_t components(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Edge& e : edges) {
            const std::size_t m = std::min(label[e.u], label[e.v]);
            if (label[e.u] != m || label[e.v] != m) {
                label[e.u] = label[e.v] = m;
                changed = true;
            }
        }
    }
    std::sort(label.begin(), label.end());
    return static_cast<std::size_t>(std::unique(label.begin(), label.end()) - label.begin());
}

inline std::vector<Edge> select(const Graph& g, std::uint64_t mask)
{
    std::vector<Edge> out;
    for (std::size_t r = 0; r < g.edge_count(); ++r)
        if (mask >> r & 1u)
            out.push_back(g.edge(r));
    return out;
}

/// Facet labelings by exhaustive search over the box [-n, n]^(V \ {0}),
/// testing the two facet conditions literally.
inline std::vector<std::vector<int>> box_search_facets(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const int radius = static_cast<int>(n);
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 0);
    for (std::size_t i = 1; i < n; ++i)
        f[i] = -radius;
    while (true) {
        bool ok = true;
        std::vector<Edge> tight;
        for (const Edge& e : g.edges()) {
            const int d = std::abs(f[e.u] - f[e.v]);
            if (d > 1) {
                ok = false;
                break;
            }
            if (d == 1)
                tight.push_back(e);
        }
        if (ok && components(n, tight) == 1)
            out.push_back(f);
        std::size_t i = 1;
        while (i < n && f[i] == radius)
            f[i++] = -radius;
        if (i >= n)
            break;
        ++f[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Random valid bad-word set: up to `count` words of length 1..max_len over
/// k letters, dropping candidates that break the factor condition.
inline sympoly::BadWordSet random_bad_words(int k, std::size_t count, std::size_t max_len, std::mt19937& rng)
{
    sympoly::BadWordSet b{k, {}};
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> sym(0, k - 1);
    for (std::size_t attempt = 0; attempt < 4 * count && b.words.size() < count; ++attempt) {
        sympoly::Word w(len(rng));
        for (int& c : w)
            c = sym(rng);
        sympoly::BadWordSet trial = b;
        trial.words.push_back(w);
        try {
            sympoly::validate(trial);
            b = std::move(trial);
        } catch (const sympoly::Error&) {
        }
    }
    return b;
}

/// Small named fixtures used across suites.
inline Graph two_squares() { return sympoly::graphs::edge_join(sympoly::graphs::cycle(4), 0, sympoly::graphs::cycle(4), 0); }

} // namespace testing_support

#endif
