#ifndef SYMPOLY_KR_HPP
#define SYMPOLY_KR_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "budget.hpp"
#include "facets.hpp"
#include "graph.hpp"
#include "linear.hpp"

namespace sympoly {

/// Rational point in R^V.
using RationalPoint = std::vector<Rational>;

/// Marked vertices with their graph distances; distance[a][b] is the
/// distance between subset[a] and subset[b].
struct MetricRestriction {
    std::vector<Vertex> subset;
    std::vector<std::vector<int>> distance;
};

struct KRGenerators {
    MetricRestriction metric;
    /// (e_i - e_j) / d(i, j) for ordered pairs i != j of the subset.
    std::vector<RationalPoint> points;
};

namespace detail {

inline std::vector<Vertex> normalize_subset(const Graph& g, std::vector<Vertex> v1)
{
    std::sort(v1.begin(), v1.end());
    if (std::adjacent_find(v1.begin(), v1.end()) != v1.end())
        throw Error(ErrorKind::InvalidArgument, "subset has a repeated vertex");
    if (v1.size() < 2)
        throw Error(ErrorKind::InvalidArgument, "subset needs at least 2 vertices");
    for (Vertex v : v1)
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
            throw Error(ErrorKind::InvalidArgument, "subset vertex " + std::to_string(v) + " out of range");
    return v1;
}

inline Rational dot(const FacetLabeling& f, const RationalPoint& x)
{
    Rational s = 0;
    for (std::size_t v = 0; v < x.size(); ++v)
        if (x[v] != 0)
            s += f.values[v] * x[v];
    return s;
}

} // namespace detail

inline MetricRestriction metric_restriction(const Graph& g, std::vector<Vertex> v1)
{
    require_connected(g, "metric_restriction");
    MetricRestriction m{detail::normalize_subset(g, std::move(v1)), {}};
    for (Vertex a : m.subset) {
        const auto d = distances(g, a);
        std::vector<int> row;
        for (Vertex b : m.subset)
            row.push_back(d[b]);
        m.distance.push_back(std::move(row));
    }
    return m;
}

inline KRGenerators kr_generators(const Graph& g, std::vector<Vertex> v1)
{
    KRGenerators out{metric_restriction(g, std::move(v1)), {}};
    const auto& s = out.metric.subset;
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
            if (a == b)
                continue;
            RationalPoint p(g.vertex_count(), 0);
            const Rational w(1, out.metric.distance[a][b]);
            p[s[a]] = w;
            p[s[b]] = -w;
            out.points.push_back(std::move(p));
        }
    return out;
}

/// Membership in P_G via its facet inequalities f . x <= 1 (x assumed zero-sum).
inline bool satisfies_facets(const std::vector<FacetLabeling>& facets, const RationalPoint& x)
{
    return std::all_of(facets.begin(), facets.end(), [&](const FacetLabeling& f) { return detail::dot(f, x) <= 1; });
}

inline bool verify_generators_in_section(const Graph& g, std::vector<Vertex> v1)
{
    const KRGenerators kr = kr_generators(g, v1);
    const auto facets = enumerate_facets(g);
    std::vector<char> marked(g.vertex_count(), 0);
    for (Vertex v : kr.metric.subset)
        marked[v] = 1;
    for (const RationalPoint& p : kr.points) {
        for (std::size_t v = 0; v < p.size(); ++v)
            if (!marked[v] && p[v] != 0)
                return false;
        if (!satisfies_facets(facets, p))
            return false;
    }
    return true;
}

/// Vertices of P_G intersected with R^{V1}, by solving every choice of
/// (|V1| - 1) facet hyperplanes within the section and keeping feasible
/// solutions. Sorted, without repeats.
inline std::vector<RationalPoint> section_vertices(const Graph& g, std::vector<Vertex> v1,
                                                   const Budget& budget = default_budget())
{
    require_connected(g, "section_vertices");
    const auto s = detail::normalize_subset(g, std::move(v1));
    const std::size_t d = s.size() - 1;
    if (d > budget.max_section_dim)
        throw Error(ErrorKind::SizeBudgetExceeded, "section dimension " + std::to_string(d) + " exceeds cap " +
                                                       std::to_string(budget.max_section_dim));
    // Coordinates y_i = x_{s[i]} for i < d; x_{s[d]} = -sum y.
    std::set<std::vector<Rational>> distinct;
    for (const FacetLabeling& f : enumerate_facets(g)) {
        std::vector<Rational> row(d);
        for (std::size_t i = 0; i < d; ++i)
            row[i] = f.values[s[i]] - f.values[s[d]];
        distinct.insert(std::move(row));
    }
    const std::vector<std::vector<Rational>> rows(distinct.begin(), distinct.end());
    auto feasible = [&](const std::vector<Rational>& y) {
        return std::all_of(rows.begin(), rows.end(), [&](const std::vector<Rational>& r) {
            Rational v = 0;
            for (std::size_t i = 0; i < d; ++i)
                v += r[i] * y[i];
            return v <= 1;
        });
    };
    std::set<RationalPoint> found;
    detail::for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::vector<Rational>> a;
        for (std::size_t i : pick)
            a.push_back(rows[i]);
        auto y = solve_full_column_rank(a, std::vector<Rational>(d, Rational(1)));
        if (!y || !feasible(*y))
            return;
        RationalPoint x(g.vertex_count(), 0);
        Rational sum = 0;
        for (std::size_t i = 0; i < d; ++i) {
            x[s[i]] = (*y)[i];
            sum += (*y)[i];
        }
        x[s[d]] = -sum;
        found.insert(std::move(x));
    });
    return {found.begin(), found.end()};
}

/// Convex-combination test by Caratheodory: some affinely independent set
/// of at most dim + 1 generators carries p with nonnegative weights.
inline bool in_convex_hull(const std::vector<RationalPoint>& generators, const RationalPoint& p, std::size_t dim)
{
    const std::size_t coords = p.size();
    for (std::size_t size = 1; size <= std::min(dim + 1, generators.size()); ++size) {
        bool hit = false;
        detail::for_each_subset(generators.size(), size, [&](const std::vector<std::size_t>& pick) {
            if (hit)
                return;
            std::vector<std::vector<Rational>> a(coords + 1, std::vector<Rational>(size));
            std::vector<Rational> b(coords + 1);
            for (std::size_t c = 0; c < coords; ++c) {
                for (std::size_t j = 0; j < size; ++j)
                    a[c][j] = generators[pick[j]][c];
                b[c] = p[c];
            }
            for (std::size_t j = 0; j < size; ++j)
                a[coords][j] = 1;
            b[coords] = 1;
            auto lambda = solve_full_column_rank(std::move(a), std::move(b));
            if (lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; }))
                hit = true;
        });
        if (hit)
            return true;
    }
    return false;
}

/// Both inclusions of P_G cap R^{V1} = KR(V1, d).
inline bool verify_section_equality(const Graph& g, std::vector<Vertex> v1, const Budget& budget = default_budget())
{
    if (!verify_generators_in_section(g, v1))
        return false;
    const KRGenerators kr = kr_generators(g, v1);
    const std::size_t dim = kr.metric.subset.size() - 1;
    for (const RationalPoint& p : section_vertices(g, v1, budget))
        if (!in_convex_hull(kr.points, p, dim))
            return false;
    return true;
}

} // namespace sympoly

#endif
