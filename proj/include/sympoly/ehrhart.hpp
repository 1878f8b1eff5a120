#ifndef SYMPOLY_EHRHART_HPP
#define SYMPOLY_EHRHART_HPP

#include <cstdlib>
#include <functional>
#include <vector>

#include "facets.hpp"
#include "linear.hpp"
#include "polynomial.hpp"

namespace sympoly {

namespace detail {

/// Integer points x with sum 0 and f.x <= j for every facet. The dilate jP
/// lies in the l1-ball of radius 2j, which bounds the search.
inline Integer count_dilate_points(std::size_t n, const std::vector<FacetLabeling>& facets, long j)
{
    if (n == 1)
        return 1;
    const long radius = 2 * j;
    std::vector<long> x(n, 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t, long, long)> rec = [&](std::size_t i, long sum, long norm) {
        if (i + 1 == n) {
            x[i] = -sum;
            if (norm + std::labs(sum) > radius)
                return;
            for (const auto& f : facets) {
                long value = 0;
                for (std::size_t v = 0; v < n; ++v)
                    value += f.values[v] * x[v];
                if (value > j)
                    return;
            }
            ++count;
            return;
        }
        for (long c = -j; c <= j; ++c) {
            const long nsum = sum + c;
            const long nnorm = norm + std::labs(c);
            if (nnorm + std::labs(nsum) > radius)
                continue;
            x[i] = c;
            rec(i + 1, nsum, nnorm);
        }
        x[i] = 0;
    };
    rec(0, 0, 0);
    return count;
}

inline void check_lattice_budget(const Graph& g, const Budget& budget)
{
    if (g.vertex_count() > budget.max_lattice_vertices)
        throw Error(ErrorKind::SizeBudgetExceeded,
                    "lattice enumeration on " + std::to_string(g.vertex_count()) + " vertices exceeds cap " +
                        std::to_string(budget.max_lattice_vertices));
}

} // namespace detail

/// |jP_G intersected with the zero-sum lattice|.
inline Integer lattice_points(const Graph& g, long j, const Budget& budget = default_budget())
{
    if (j < 0)
        throw Error(ErrorKind::InvalidArgument, "dilation factor must be nonnegative");
    detail::check_lattice_budget(g, budget);
    require_connected(g, "lattice_points");
    if (g.vertex_count() == 1)
        return 1;
    return detail::count_dilate_points(g.vertex_count(), enumerate_facets(g), j);
}

struct HStarData {
    RatPolynomial ehrhart;
    IntPolynomial hstar;
    std::vector<Integer> gamma;
    std::size_t dim = 0;

    Integer volume() const { return hstar(Integer(1)); }
};

/// h* from E(0..d): h*_i = sum_k (-1)^k C(d+1, k) E(i - k), the numerator of
/// sum_j E(j) t^j over (1 - t)^(d+1).
inline IntPolynomial hstar_from_values(const std::vector<Integer>& values, std::size_t d)
{
    std::vector<Integer> h(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
            const Integer term = binomial(static_cast<long>(d + 1), static_cast<long>(k)) * values.at(i - k);
            h[i] += k % 2 ? Integer(-term) : term;
        }
    return IntPolynomial(std::move(h));
}

inline HStarData h_star(const Graph& g, const Budget& budget = default_budget())
{
    detail::check_lattice_budget(g, budget);
    require_connected(g, "h_star");
    HStarData data;
    data.dim = g.vertex_count() - 1;
    const std::vector<FacetLabeling> facets =
        g.vertex_count() > 1 ? enumerate_facets(g) : std::vector<FacetLabeling>{};
    std::vector<Integer> values;
    std::vector<std::pair<Integer, Rational>> nodes;
    for (std::size_t j = 0; j <= data.dim; ++j) {
        values.push_back(detail::count_dilate_points(g.vertex_count(), facets, static_cast<long>(j)));
        nodes.emplace_back(Integer(j), Rational(values.back()));
    }
    data.ehrhart = interpolate(nodes);
    data.hstar = hstar_from_values(values, data.dim);
    data.gamma = gamma_vector(data.hstar, static_cast<long>(data.dim));
    return data;
}

/// (dim)! times the leading coefficient of the Ehrhart polynomial.
inline Integer ehrhart_volume(const HStarData& data)
{
    Rational v = data.ehrhart.coeff(data.dim);
    for (std::size_t i = 2; i <= data.dim; ++i)
        v *= Integer(i);
    if (denominator(v) != 1)
        throw Error(ErrorKind::NonIntegralResult, "Ehrhart leading coefficient times d! is not an integer");
    return numerator(v);
}

/// Labelings f with f(0) = 0 and |f(u) - f(v)| <= 1 on every edge: the
/// integer points of the polar dual.
inline Integer polar_dual_points(const Graph& g)
{
    require_connected(g, "polar_dual_points");
    const std::size_t n = g.vertex_count();
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

    std::vector<int> f(n, 0);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            ++count;
            return;
        }
        const Vertex v = order[i];
        for (int delta : {-1, 0, 1}) {
            const int value = f[parent[v]] + delta;
            bool ok = true;
            for (const auto& inc : g.neighbors(v))
                if (position[inc.neighbor] < i && std::abs(value - f[inc.neighbor]) > 1) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            f[v] = value;
            rec(i + 1);
        }
    };
    rec(1);
    return count;
}

} // namespace sympoly

#endif
