#ifndef SYMPOLY_FAMILIES_HPP
#define SYMPOLY_FAMILIES_HPP

#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational_function.hpp"

namespace sympoly {

struct CycleInvariants {
    Integer facets;
    Integer volume;
    std::vector<Integer> fvector;
};

/// P_{C_{2k}}: C(2k,k) facets, volume k C(2k,k); f_i counts ordered pairs of
/// disjoint edge sets (A, B) with |A| + |B| = i + 1 and |A|, |B| < k.
inline CycleInvariants cycle_invariants(long k)
{
    if (k < 2)
        throw Error(ErrorKind::InvalidArgument, "even cycle half-length must be at least 2");
    CycleInvariants out{binomial(2 * k, k), k * binomial(2 * k, k), {}};
    for (long i = 0; i < 2 * k - 2; ++i) {
        Integer f = 0;
        for (long a = 0; a < k; ++a) {
            const long b = i + 1 - a;
            if (b >= 0 && b < k)
                f += binomial(2 * k, a) * binomial(2 * k - a, b);
        }
        out.fvector.push_back(f);
    }
    out.fvector.push_back(out.facets);
    return out;
}

struct TreeInvariants {
    Integer facets;
    Integer volume;
    IntPolynomial hstar;
};

inline TreeInvariants tree_invariants(long n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "tree needs at least 2 vertices");
    const Integer p = Integer(1) << (n - 1);
    return {p, p, one_plus_t_power(static_cast<std::size_t>(n - 1))};
}

inline Integer complete_graph_facets(long n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "complete graph needs at least 2 vertices");
    return (Integer(1) << n) - 2;
}

/// Facets of two bipartite graphs glued along an edge.
inline Integer edge_join_facets(const Integer& f1, const Integer& f2)
{
    const Integer p = f1 * f2;
    if (p % 2 != 0)
        throw Error(ErrorKind::NonDivisible, "facet product is odd");
    return p / 2;
}

inline IntPolynomial vertex_join_hstar(const IntPolynomial& h1, const IntPolynomial& h2) { return h1 * h2; }

/// H1 H2 / (1 + t); the second graph must be bipartite.
inline IntPolynomial edge_join_hstar(const IntPolynomial& h1, const IntPolynomial& h2)
{
    return exact_divide(h1 * h2, IntPolynomial{1, 1});
}

inline std::vector<Integer> gamma_convolution(const std::vector<Integer>& g1, const std::vector<Integer>& g2)
{
    if (g1.empty() || g2.empty())
        return {};
    std::vector<Integer> out(g1.size() + g2.size() - 1, 0);
    for (std::size_t i = 0; i < g1.size(); ++i)
        for (std::size_t j = 0; j < g2.size(); ++j)
            out[i + j] += g1[i] * g2[j];
    return out;
}

/// C_{2i+1} and C_{2j+1} glued along an edge.
inline Integer odd_cycles_edge_join_volume(long i, long j)
{
    if (i < 1 || j < 1)
        throw Error(ErrorKind::InvalidArgument, "odd cycle half-lengths must be positive");
    return (i + j + 2 * i * j) * binomial(2 * i, i) * binomial(2 * j, j);
}

/// (2z^6 + 2z^5 - 7z^4 - 3z^3 + z + 1) / ((1 - z)(1 - z - 2z^2 - 2z^3)).
inline RationalFunction wheel_facet_generating_function()
{
    const RatPolynomial num({1, 1, 0, -3, -7, 2, 2});
    const RatPolynomial den = RatPolynomial({1, -1}) * RatPolynomial({1, -1, -2, -2});
    return RationalFunction(num, den);
}

/// Facets of K_1 * C_n: a_3..a_6 from the generating function, then
/// a_n = 2a_{n-1} + a_{n-2} - 2a_{n-4}.
inline Integer wheel_facets(long n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "wheel rim must have at least 3 vertices");
    const auto head = series_coefficients(wheel_facet_generating_function(), 6);
    std::vector<Integer> a;
    for (const auto& c : head)
        a.push_back(numerator(c));
    for (long m = 7; m <= n; ++m)
        a.push_back(2 * a[m - 1] + a[m - 2] - 2 * a[m - 4]);
    return a[n];
}

/// (1 - sqrt 3)^n + (1 + sqrt 3)^n, minus 2 for even n, via
/// p_m = 2p_{m-1} + 2p_{m-2}, p_0 = p_1 = 2.
inline Integer wheel_volume(long n)
{
    if (n < 3)
        throw Error(ErrorKind::InvalidArgument, "wheel rim must have at least 3 vertices");
    Integer prev = 2, cur = 2;
    for (long m = 2; m <= n; ++m) {
        Integer next = 2 * cur + 2 * prev;
        prev = cur;
        cur = next;
    }
    return n % 2 == 0 ? Integer(cur - 2) : cur;
}

/// A facet word over {+, 0, -} cyclically avoiding +-, -+ and 000.
inline bool is_wheel_facet_word(const std::string& w)
{
    const std::size_t n = w.size();
    if (n < 3)
        return false;
    for (char c : w)
        if (c != '+' && c != '0' && c != '-')
            return false;
    for (std::size_t i = 0; i < n; ++i) {
        const char a = w[i], b = w[(i + 1) % n], c = w[(i + 2) % n];
        if ((a == '+' && b == '-') || (a == '-' && b == '+') || (a == '0' && b == '0' && c == '0'))
            return false;
    }
    return true;
}

/// Cyclic factors of the form (+ or -) 0 (+ or -).
inline long wheel_word_c(const std::string& w)
{
    const std::size_t n = w.size();
    long c = 0;
    for (std::size_t i = 0; i < n; ++i)
        c += w[i] != '0' && w[(i + 1) % n] == '0' && w[(i + 2) % n] != '0';
    return c;
}

/// 2^c(w), or 2^c(w) - 1 when n is even and w alternates one sign with 0.
inline Integer per_facet_wheel_volume(const std::string& w)
{
    if (!is_wheel_facet_word(w))
        throw Error(ErrorKind::NotAFacetWord, "'" + w + "' is not a wheel facet word");
    const std::size_t n = w.size();
    const Integer full = Integer(1) << wheel_word_c(w);
    if (n % 2 != 0)
        return full;
    for (char sign : {'+', '-'})
        for (std::size_t offset = 0; offset < 2; ++offset) {
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i)
                match = w[i] == ((i + offset) % 2 == 0 ? sign : '0');
            if (match)
                return full - 1;
        }
    return full;
}

struct OuterplanarInvariants {
    Integer facets;
    Integer volume;
};

/// Bipartite outerplanar graph with bounded regions of half-lengths a_i,
/// s edges shared by two regions and t bridges:
/// facets 2^(t-s) prod C(2a_i, a_i), volume 2^(t-s) prod a_i C(2a_i, a_i).
inline OuterplanarInvariants outerplanar_bipartite(const std::vector<long>& a, long s, long t)
{
    if (s < 0 || t < 0)
        throw Error(ErrorKind::InvalidArgument, "s and t must be nonnegative");
    Rational facets = 1, volume = 1;
    for (long ai : a) {
        if (ai < 2)
            throw Error(ErrorKind::InvalidArgument, "region half-lengths must be at least 2");
        facets *= binomial(2 * ai, ai);
        volume *= ai * binomial(2 * ai, ai);
    }
    const Rational scale = t >= s ? Rational(Integer(1) << (t - s)) : Rational(1, Integer(1) << (s - t));
    facets *= scale;
    volume *= scale;
    if (denominator(facets) != 1 || denominator(volume) != 1)
        throw Error(ErrorKind::NonIntegralResult, "parameters do not describe a bipartite outerplanar graph");
    return {numerator(facets), numerator(volume)};
}

} // namespace sympoly

#endif
