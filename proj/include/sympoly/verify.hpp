#ifndef SYMPOLY_VERIFY_HPP
#define SYMPOLY_VERIFY_HPP

// The reproduction suite behind `sympoly verify --suite paper` and the
// acceptance test: ten criteria, each an exact check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart.hpp"
#include "facets.hpp"
#include "families.hpp"
#include "flows.hpp"
#include "generators.hpp"
#include "genfun.hpp"
#include "kr.hpp"
#include "volume.hpp"

namespace sympoly::verify {

struct Outcome {
    bool pass = true;
    /// Failed checks first, then observations.
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
};

namespace detail {

class Checker {
public:
    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what)
    {
        if (got == want)
            return;
        std::ostringstream os;
        os << what << ": got " << got << ", expected " << want;
        fail(os.str());
    }

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }

    void fail(const std::string& what)
    {
        out_.pass = false;
        out_.failures.push_back(what);
    }

    void note(const std::string& what) { out_.notes.push_back(what); }

    /// Runs f, turning a thrown Error into a failed check.
    void guard(const std::string& what, const std::function<void()>& f)
    {
        try {
            f();
        } catch (const Error& e) {
            fail(what + ": " + e.what());
        }
    }

    Outcome result() { return std::move(out_); }

private:
    Outcome out_;
};

template <class T>
std::string join(const std::vector<T>& xs)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    os << ')';
    return os.str();
}

inline std::string name(const std::string& family, long n) { return family + "(" + std::to_string(n) + ")"; }

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng)
{
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, v - 1);
        edges.push_back({static_cast<Vertex>(pick(rng)), static_cast<Vertex>(v)});
    }
    std::bernoulli_distribution coin(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const bool present = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
                return (e.u == static_cast<Vertex>(u) && e.v == static_cast<Vertex>(v)) ||
                       (e.u == static_cast<Vertex>(v) && e.v == static_cast<Vertex>(u));
            });
            if (!present && coin(rng))
                edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    std::shuffle(edges.begin(), edges.end(), rng);
    return Graph(n, std::move(edges));
}

/// Facet labelings by scanning the box [-n, n]^(V \ {0}) and testing the
/// two defining conditions literally.
inline std::vector<std::vector<int>> box_search_facets(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    const int r = static_cast<int>(n);
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, -r);
    f[0] = 0;
    while (true) {
        bool ok = true;
        ::sympoly::detail::DisjointSets ds(n);
        std::size_t comps = n;
        for (const Edge& e : g.edges()) {
            const int d = std::abs(f[e.u] - f[e.v]);
            if (d > 1) {
                ok = false;
                break;
            }
            if (d == 1 && ds.unite(e.u, e.v))
                --comps;
        }
        if (ok && comps == 1)
            out.push_back(f);
        std::size_t i = 1;
        while (i < n && f[i] == r)
            f[i++] = -r;
        if (i >= n)
            break;
        ++f[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline BadWordSet random_bad_words(int k, std::size_t count, std::size_t max_len, std::mt19937& rng)
{
    BadWordSet b{k, {}};
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<int> sym(0, k - 1);
    for (std::size_t attempt = 0; attempt < 4 * count && b.words.size() < count; ++attempt) {
        Word w(len(rng));
        for (int& c : w)
            c = sym(rng);
        BadWordSet trial = b;
        trial.words.push_back(w);
        try {
            validate(trial);
            b = std::move(trial);
        } catch (const Error&) {
        }
    }
    return b;
}

inline Integer cycle_dual_points_formula(long n)
{
    Integer total = 1;
    for (long i = 0; i < n - 1; ++i)
        if ((n - i) % 2 == 0)
            total += binomial(n, i) * binomial(n - i, (n - i) / 2);
    return total;
}

inline std::vector<Vertex> all_vertices(const Graph& g)
{
    std::vector<Vertex> v(g.vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline bool is_automorphism(const Graph& g, const std::vector<Vertex>& perm)
{
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return g.edge_rank(perm[e.u], perm[e.v]).has_value(); });
}

} // namespace detail

inline Outcome facet_counts()
{
    detail::Checker c;
    const std::vector<long> cycles{6, 20, 70};
    for (long k = 2; k <= 4; ++k) {
        const auto got = count_facets(graphs::cycle(static_cast<std::size_t>(2 * k)));
        c.equal(got, Integer(cycles[k - 2]), detail::name("C", 2 * k));
        c.equal(got, binomial(2 * k, k), detail::name("C", 2 * k) + " vs binomial");
    }
    for (std::size_t n = 2; n <= 6; ++n) {
        c.equal(count_facets(graphs::path(n)), Integer(1) << (n - 1), detail::name("path", n));
        c.equal(count_facets(graphs::star(n)), Integer(1) << (n - 1), detail::name("star", n));
    }
    c.equal(count_facets(graphs::complete(3)), Integer(6), "K3");
    c.equal(count_facets(graphs::complete(4)), Integer(14), "K4");
    const std::vector<long> wheels{14, 26, 62, 138, 310};
    for (long n = 3; n <= 7; ++n) {
        c.equal(count_facets(graphs::wheel(static_cast<std::size_t>(n))), Integer(wheels[n - 3]),
                detail::name("wheel", n));
        c.equal(wheel_facets(n), Integer(wheels[n - 3]), detail::name("wheel recursion", n));
    }
    return c.result();
}

inline Outcome volumes()
{
    detail::Checker c;
    auto three_ways = [&](const std::string& what, const Graph& g, const Integer& closed, long known) {
        c.guard(what, [&] {
            const Integer tri = normalized_volume(g);
            const Integer ehr = ehrhart_volume(h_star(g));
            c.equal(tri, closed, what + " triangulation vs closed form");
            c.equal(ehr, closed, what + " Ehrhart vs closed form");
            if (known > 0)
                c.equal(closed, Integer(known), what + " closed form vs known value");
        });
    };
    three_ways("C4", graphs::cycle(4), cycle_invariants(2).volume, 12);
    three_ways("C6", graphs::cycle(6), cycle_invariants(3).volume, 60);
    three_ways("glued C3,C3", graphs::glued_odd_cycles(1, 1), odd_cycles_edge_join_volume(1, 1), 16);
    three_ways("glued C3,C5", graphs::glued_odd_cycles(1, 2), odd_cycles_edge_join_volume(1, 2), 84);
    const std::vector<long> wheels{20, 54, 152};
    for (long n = 3; n <= 5; ++n)
        three_ways(detail::name("wheel", n), graphs::wheel(static_cast<std::size_t>(n)), wheel_volume(n), wheels[n - 3]);
    for (long n = 2; n <= 6; ++n) {
        three_ways(detail::name("path", n), graphs::path(static_cast<std::size_t>(n)), tree_invariants(n).volume, 0);
        three_ways(detail::name("star", n), graphs::star(static_cast<std::size_t>(n)), tree_invariants(n).volume, 0);
    }
    return c.result();
}

inline Outcome hstar_vectors()
{
    detail::Checker c;
    std::vector<std::pair<std::string, Graph>> graphs_{
        {"C4", graphs::cycle(4)},           {"C5", graphs::cycle(5)},
        {"C6", graphs::cycle(6)},           {"K3", graphs::complete(3)},
        {"K4", graphs::complete(4)},        {"wheel(4)", graphs::wheel(4)},
        {"path(5)", graphs::path(5)},       {"star(5)", graphs::star(5)},
        {"glued C3,C5", graphs::glued_odd_cycles(1, 2)},
        {"C4 edge-join C4", graphs::edge_join(graphs::cycle(4), 0, graphs::cycle(4), 0)},
        {"K3 edge-join C4", graphs::edge_join(graphs::complete(3), 0, graphs::cycle(4), 0)}};
    std::vector<HStarData> data;
    for (const auto& [name, g] : graphs_) {
        data.push_back(h_star(g));
        const auto& h = data.back();
        c.expect(h.hstar.coeff(0) == 1, name + ": h*_0 != 1");
        c.expect(h.hstar.is_palindromic(static_cast<long>(h.dim)), name + ": h* not palindromic");
        const bool nonneg = std::all_of(h.gamma.begin(), h.gamma.end(), [](const Integer& x) { return x >= 0; });
        c.expect(nonneg, name + ": negative gamma entry");
        c.note(name + " gamma " + detail::join(h.gamma) + (nonneg ? " nonnegative" : " has a negative entry"));
    }
    // (C4, C4) and (K3, C4): joined graphs are the last two fixtures
    const HStarData &c4 = data[0], &k3 = data[3];
    const HStarData &c4c4 = data[data.size() - 2], &k3c4 = data[data.size() - 1];
    c.equal(edge_join_hstar(c4.hstar, c4.hstar), c4c4.hstar, "(C4,C4) H1 H2 / (1+t)");
    c.equal(edge_join_hstar(k3.hstar, c4.hstar), k3c4.hstar, "(K3,C4) H1 H2 / (1+t)");
    c.equal(detail::join(gamma_convolution(c4.gamma, c4.gamma)), detail::join(c4c4.gamma), "(C4,C4) gamma convolution");
    c.equal(detail::join(gamma_convolution(k3.gamma, c4.gamma)), detail::join(k3c4.gamma), "(K3,C4) gamma convolution");
    return c.result();
}

inline Outcome goulden_jackson()
{
    detail::Checker c;
    const BadWordSet three_letter{3, {{0, 1}, {1, 0}, {2, 2, 2}}};
    auto ints = [](std::initializer_list<long> xs) {
        std::vector<Rational> v;
        for (long x : xs)
            v.emplace_back(x);
        return v;
    };
    c.equal(detail::join(series_coefficients(gj_linear(three_letter), 5)), detail::join(ints({1, 3, 7, 16, 36, 82})),
            "linear series");
    const auto cyclic = series_coefficients(gj_cyclic(three_letter).genfun, 7);
    c.equal(detail::join(std::vector<Rational>(cyclic.begin() + 1, cyclic.end())),
            detail::join(ints({3, 7, 14, 26, 62, 138, 310})), "cyclic series");
    const BadWordSet wheel4{4, {{0, 1}, {1, 0}, {2, 2, 2}, {3, 3}, {2, 3}, {3, 2}}};
    const RationalFunction expected(RatPolynomial{1, 2, 0, -12, -5, 6, 2}, RatPolynomial{1, -2, -3, 2, 2});
    c.expect(gj_cyclic(wheel4).genfun == expected, "wheel 4-letter cyclic generating function differs from the closed form");

    for (const BadWordSet& b : {three_letter, wheel4}) {
        const auto lin = series_coefficients(gj_linear(b), 10);
        const auto cyc = series_coefficients(gj_cyclic(b).genfun, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            c.equal(lin[n], Rational(brute_force_words(b, n, false)), "linear brute force k=" + std::to_string(b.k) + " n=" + std::to_string(n));
            if (n >= 1)
                c.equal(cyc[n], Rational(brute_force_words(b, n, true)), "cyclic brute force k=" + std::to_string(b.k) + " n=" + std::to_string(n));
        }
    }
    std::mt19937 rng(2024);
    std::size_t sets = 0, below = 0, below_mismatch = 0;
    for (int trial = 0; trial < 96; ++trial) {
        const BadWordSet b = detail::random_bad_words(1 + trial % 4, 1 + trial % 6, 4, rng);
        ++sets;
        const auto lin = series_coefficients(gj_linear(b), 10);
        const auto cyc = series_coefficients(gj_cyclic(b).genfun, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            const std::string where = " trial " + std::to_string(trial) + " n=" + std::to_string(n);
            c.equal(lin[n], Rational(brute_force_words(b, n, false)), "linear" + where);
            if (n == 0)
                continue;
            const Rational words(brute_force_words(b, n, true));
            if (n >= b.max_length()) {
                c.equal(cyc[n], words, "cyclic" + where);
            } else {
                ++below;
                below_mismatch += cyc[n] != words;
            }
        }
    }
    c.note("random sets: " + std::to_string(sets) + "; cyclic coefficients below the longest bad word differ from word counts in " +
           std::to_string(below_mismatch) + " of " + std::to_string(below) + " cases (not asserted)");
    return c.result();
}

inline Outcome cycle_fvectors()
{
    detail::Checker c;
    c.equal(detail::join(fvector(graphs::cycle(4))), std::string("(8,12,6)"), "C4 f-vector");
    for (long k = 2; k <= 3; ++k)
        c.equal(detail::join(fvector(graphs::cycle(static_cast<std::size_t>(2 * k)))),
                detail::join(cycle_invariants(k).fvector), detail::name("C", 2 * k) + " face lattice vs formula");
    return c.result();
}

inline Outcome polar_dual_counts()
{
    detail::Checker c;
    const std::vector<std::pair<long, long>> known{{4, 19}, {6, 141}};
    for (const auto& [n, want] : known) {
        const Graph g = graphs::cycle(static_cast<std::size_t>(n));
        const std::string what = detail::name("C", n);
        c.equal(polar_dual_points(g), Integer(want), what + " direct");
        c.equal(dual_points_via_mobius(g), Integer(want), what + " Mobius");
        c.equal(detail::cycle_dual_points_formula(n), Integer(want), what + " closed form");
    }
    c.equal(polar_dual_points(graphs::path(2)), Integer(3), "K2 direct");
    c.equal(dual_points_via_mobius(graphs::path(2)), Integer(3), "K2 Mobius");
    std::vector<std::pair<std::string, Graph>> pairwise{
        {"K4", graphs::complete(4)},
        {"glued C3,C3", graphs::glued_odd_cycles(1, 1)},
        {"glued C3,C5", graphs::glued_odd_cycles(1, 2)},
        {"glued C5,C5", graphs::glued_odd_cycles(2, 2)},
        {"C4 edge-join C4", graphs::edge_join(graphs::cycle(4), 0, graphs::cycle(4), 0)}};
    for (long n = 2; n <= 6; ++n) {
        pairwise.emplace_back(detail::name("path", n), graphs::path(static_cast<std::size_t>(n)));
        pairwise.emplace_back(detail::name("star", n), graphs::star(static_cast<std::size_t>(n)));
    }
    for (long n = 3; n <= 5; ++n)
        pairwise.emplace_back(detail::name("wheel", n), graphs::wheel(static_cast<std::size_t>(n)));
    for (const auto& [name, g] : pairwise)
        c.equal(dual_points_via_mobius(g), polar_dual_points(g), name + " Mobius vs direct");
    return c.result();
}

inline Outcome flow_duality()
{
    detail::Checker c;
    const Multigraph dual_c4(2, std::vector<Edge>(4, Edge{0, 1}));
    const Multigraph dual_c6(2, std::vector<Edge>(6, Edge{0, 1}));
    c.equal(facets_via_dual_flows(dual_c4), count_facets(graphs::cycle(4)), "dual of C4");
    c.equal(facets_via_dual_flows(dual_c4), Integer(6), "dual of C4");
    c.equal(facets_via_dual_flows(dual_c6), count_facets(graphs::cycle(6)), "dual of C6");
    c.equal(facets_via_dual_flows(dual_c6), Integer(20), "dual of C6");
    std::vector<std::pair<std::string, Graph>> odd{
        {"K4", graphs::complete(4)},
        {"glued C3,C5", graphs::glued_odd_cycles(1, 2)},
        {"C4 edge-join C4", graphs::edge_join(graphs::cycle(4), 0, graphs::cycle(4), 0)},
        {"K2,3", graphs::complete_bipartite(2, 3)}};
    for (long n = 2; n <= 6; ++n)
        odd.emplace_back(detail::name("path", n), graphs::path(static_cast<std::size_t>(n)));
    for (long n = 4; n <= 6; ++n)
        odd.emplace_back(detail::name("star", n), graphs::star(static_cast<std::size_t>(n)));
    for (long n = 3; n <= 6; ++n)
        odd.emplace_back(detail::name("wheel", n), graphs::wheel(static_cast<std::size_t>(n)));
    for (const auto& [name, g] : odd) {
        const Multigraph mg(g);
        bool has_odd = false;
        for (std::size_t v = 0; v < mg.vertex_count(); ++v)
            has_odd = has_odd || mg.degree(static_cast<Vertex>(v)) % 2 == 1;
        c.expect(has_odd, name + " has no odd-degree vertex");
        c.equal(nowhere_zero_flows(mg, 2), Integer(0), name + " 2-flows");
    }
    return c.result();
}

inline Outcome outerplanar()
{
    detail::Checker c;
    const auto big = outerplanar_bipartite({2, 2, 2, 2, 3}, 3, 3);
    c.equal(big.facets, Integer(25920), "a=(2,2,2,2,3), s=3, t=3 facets");
    c.equal(big.volume, Integer(1244160), "a=(2,2,2,2,3), s=3, t=3 volume");
    const auto small = outerplanar_bipartite({2}, 0, 4);
    c.equal(small.facets, Integer(96), "a=(2), s=0, t=4 facets");
    c.equal(small.volume, Integer(192), "a=(2), s=0, t=4 volume");
    return c.result();
}

inline Outcome kr_sections()
{
    detail::Checker c;
    auto check = [&](const std::string& name, const Graph& g, const std::vector<Vertex>& s) {
        std::string label = name + " V1=" + detail::join(s);
        c.guard(label, [&] { c.expect(verify_section_equality(g, s), label); });
    };
    for (std::size_t n = 2; n <= 5; ++n)
        check(detail::name("path", static_cast<long>(n)), graphs::path(n), {0, static_cast<Vertex>(n - 1)});
    for (std::size_t n : {4u, 6u})
        for (Vertex a = 0; a < static_cast<Vertex>(n); ++a)
            for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b)
                check(detail::name("C", static_cast<long>(n)), graphs::cycle(n), {a, b});
    for (const auto& [name, g] : std::vector<std::pair<std::string, Graph>>{{"C4", graphs::cycle(4)},
                                                                            {"K3", graphs::complete(3)},
                                                                            {"K4", graphs::complete(4)},
                                                                            {"path(4)", graphs::path(4)},
                                                                            {"star(5)", graphs::star(5)}})
        check(name, g, detail::all_vertices(g));
    return c.result();
}

inline Outcome property_suites()
{
    detail::Checker c;
    std::mt19937 rng(10);
    for (int trial = 0; trial < 1000; ++trial) {
        const Graph g = detail::random_connected_graph(2 + trial % 6, 0.45, rng);
        const auto trees = for_each_spanning_tree(g.vertex_count(), g.edges(), [](const auto&) {});
        if (Integer(trees) != matrix_tree_count(g))
            c.fail("spanning trees vs Matrix-Tree on random graph " + std::to_string(trial));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = detail::random_connected_graph(trial < 2 ? 7 : 2 + trial % 5, 0.4, rng);
        std::vector<std::vector<int>> enumerated;
        for (const auto& f : enumerate_facets(g))
            enumerated.push_back(f.values);
        std::sort(enumerated.begin(), enumerated.end());
        if (enumerated != detail::box_search_facets(g))
            c.fail("facet enumerator vs box search on random graph " + std::to_string(trial));
    }
    const std::vector<std::pair<std::string, Graph>> fixtures{
        {"C4", graphs::cycle(4)},
        {"C6", graphs::cycle(6)},
        {"K4", graphs::complete(4)},
        {"wheel(4)", graphs::wheel(4)},
        {"glued C3,C5", graphs::glued_odd_cycles(1, 2)},
        {"C4 edge-join C4", graphs::edge_join(graphs::cycle(4), 0, graphs::cycle(4), 0)}};
    for (const auto& [name, g] : fixtures) {
        const Integer base = normalized_volume(g);
        std::vector<std::size_t> order(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        std::vector<Vertex> perm = detail::all_vertices(g);
        for (int t = 0; t < 20; ++t) {
            std::shuffle(order.begin(), order.end(), rng);
            if (normalized_volume(g.reordered(order)) != base)
                c.fail(name + ": volume changed under edge reordering");
            std::shuffle(perm.begin(), perm.end(), rng);
            if (normalized_volume(g.relabeled(perm)) != base)
                c.fail(name + ": volume changed under vertex relabeling");
        }
        std::vector<Vertex> sigma = detail::all_vertices(g);
        std::size_t automorphisms = 0;
        do {
            if (!detail::is_automorphism(g, sigma))
                continue;
            ++automorphisms;
            if (automorphisms > 20)
                break;
            if (normalized_volume(g.relabeled(sigma)) != base)
                c.fail(name + ": volume changed under an automorphism");
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return c.result();
}

inline std::vector<Criterion> reproduction_suite()
{
    return {
        {1, "facet counts", facet_counts},
        {2, "normalized volume by triangulation, Ehrhart and closed form", volumes},
        {3, "h* palindromy, edge-join and gamma identities", hstar_vectors},
        {4, "Goulden-Jackson series and brute force", goulden_jackson},
        {5, "even-cycle f-vectors", cycle_fvectors},
        {6, "polar-dual lattice points", polar_dual_counts},
        {7, "2-flows on planar duals", flow_duality},
        {8, "bipartite outerplanar formula", outerplanar},
        {9, "Kantorovich-Rubinstein sections", kr_sections},
        {10, "property suites", property_suites},
    };
}

/// Runs one criterion, reporting an escaped Error as a failure.
inline Outcome run(const Criterion& criterion)
{
    try {
        return criterion.run();
    } catch (const Error& e) {
        Outcome o;
        o.pass = false;
        o.failures.push_back(e.what());
        return o;
    }
}

} // namespace sympoly::verify

#endif
