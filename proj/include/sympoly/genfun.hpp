#ifndef SYMPOLY_GENFUN_HPP
#define SYMPOLY_GENFUN_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "linear.hpp"
#include "rational_function.hpp"

namespace sympoly {

using Word = std::vector<int>;

/// Forbidden factors over the alphabet 0..k-1.
struct BadWordSet {
    int k = 0;
    std::vector<Word> words;

    std::size_t max_length() const
    {
        std::size_t m = 0;
        for (const auto& w : words)
            m = std::max(m, w.size());
        return m;
    }
};

namespace detail {

inline bool is_factor(const Word& small, const Word& big)
{
    return std::search(big.begin(), big.end(), small.begin(), small.end()) != big.end();
}

inline std::string word_string(const Word& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "." : "") + std::to_string(w[i]);
    return s;
}

} // namespace detail

/// Rejects empty words, out-of-range symbols, duplicates, and any word that
/// is a factor of another.
inline void validate(const BadWordSet& b)
{
    if (b.k < 1)
        throw Error(ErrorKind::InvalidBadWordSet, "alphabet must be nonempty");
    for (const auto& w : b.words) {
        if (w.empty())
            throw Error(ErrorKind::InvalidBadWordSet, "empty bad word");
        for (int c : w)
            if (c < 0 || c >= b.k)
                throw Error(ErrorKind::InvalidBadWordSet, "symbol outside the alphabet in " + detail::word_string(w));
    }
    for (std::size_t i = 0; i < b.words.size(); ++i)
        for (std::size_t j = 0; j < b.words.size(); ++j) {
            if (i == j)
                continue;
            if (b.words[i] == b.words[j])
                throw Error(ErrorKind::InvalidBadWordSet, "duplicate bad word " + detail::word_string(b.words[i]));
            if (detail::is_factor(b.words[i], b.words[j]))
                throw Error(ErrorKind::InvalidBadWordSet, detail::word_string(b.words[i]) + " is a factor of " +
                                                              detail::word_string(b.words[j]));
        }
}

/// (u : v): sum over proper suffixes x of u that are proper prefixes of v of
/// s^(|v| - |x|).
inline RationalFunction overlap_weight(const Word& u, const Word& v)
{
    std::vector<Rational> c(v.size() + 1, 0);
    const std::size_t limit = std::min(u.size(), v.size());
    for (std::size_t l = 1; l < limit; ++l)
        if (std::equal(u.end() - static_cast<std::ptrdiff_t>(l), u.end(), v.begin()))
            c[v.size() - l] += 1;
    return RationalFunction(RatPolynomial(std::move(c)));
}

struct ClusterSystem {
    /// overlaps(i, j) = (b_i : b_j).
    RatMatrix overlaps;
    std::vector<RationalFunction> cluster;
    RationalFunction total;
    /// a_ij = -(b_i : b_j).
    RatMatrix a;
    /// A (I - A)^{-1} s dA/ds.
    RatMatrix m;
};

/// Solves L_j + sum_i (b_i : b_j) L_i = -s^|b_j| and builds the cyclic
/// matrices.
inline ClusterSystem cluster_system(const BadWordSet& b)
{
    validate(b);
    const std::size_t n = b.words.size();
    ClusterSystem sys{RatMatrix(n, n), {}, RationalFunction(0), RatMatrix(n, n), RatMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sys.overlaps(i, j) = overlap_weight(b.words[i], b.words[j]);

    RatMatrix coeff = RatMatrix::identity(n);
    std::vector<RationalFunction> rhs;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            coeff(j, i) += sys.overlaps(i, j);
        rhs.push_back(-RationalFunction::monomial(1, b.words[j].size()));
    }
    if (n > 0)
        sys.cluster = solve_linear(coeff, rhs);
    for (const auto& l : sys.cluster)
        sys.total += l;

    if (n > 0) {
        sys.a = sys.overlaps.map([](const RationalFunction& x) { return -x; });
        const RatMatrix ds = sys.a.map([](const RationalFunction& x) { return RationalFunction::variable() * x.derivative(); });
        sys.m = sys.a * inverse(RatMatrix::identity(n) - sys.a) * ds;
    }
    return sys;
}

/// 1 / (1 - ks - L).
inline RationalFunction gj_linear(const BadWordSet& b)
{
    const ClusterSystem sys = cluster_system(b);
    return RationalFunction(1) / (RationalFunction(1) - RationalFunction::monomial(b.k, 1) - sys.total);
}

struct CyclicGenFun {
    /// (1 + s L' - L) / (1 - ks - L) + sum_i chop_{l_i}(m_ii).
    RationalFunction genfun;
    RationalFunction main;
    RationalFunction chopped;
    /// sum_i of the Taylor terms below order l_i removed from m_ii.
    RatPolynomial correction;
};

inline CyclicGenFun gj_cyclic(const BadWordSet& b)
{
    const ClusterSystem sys = cluster_system(b);
    const RationalFunction s = RationalFunction::variable();
    const RationalFunction& l = sys.total;
    CyclicGenFun out;
    out.main = (RationalFunction(1) + s * l.derivative() - l) /
               (RationalFunction(1) - RationalFunction::monomial(b.k, 1) - l);
    for (std::size_t i = 0; i < b.words.size(); ++i) {
        const RationalFunction& mii = sys.m(i, i);
        const RationalFunction c = chop(mii, b.words[i].size());
        out.chopped += c;
        out.correction = out.correction + (mii - c).num();
    }
    out.genfun = out.main + out.chopped;
    return out;
}

/// Exhaustive count of length-n words avoiding every bad word. For cyclic
/// words the first letter stays fixed and factors may wrap across the seam;
/// only bad words of length at most n are checked.
inline Integer brute_force_words(const BadWordSet& b, std::size_t n, bool cyclic, const Budget& budget = default_budget())
{
    validate(b);
    Integer total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= b.k;
        if (total > budget.max_words)
            throw Error(ErrorKind::SizeBudgetExceeded, "k^n exceeds the word budget");
    }
    Word w(n);
    std::uint64_t count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (cyclic)
                for (const auto& bad : b.words) {
                    if (bad.size() > n)
                        continue;
                    for (std::size_t start = n - bad.size() + 1; start < n; ++start) {
                        bool hit = true;
                        for (std::size_t t = 0; t < bad.size() && hit; ++t)
                            hit = w[(start + t) % n] == bad[t];
                        if (hit)
                            return;
                    }
                }
            ++count;
            return;
        }
        for (int c = 0; c < b.k; ++c) {
            w[i] = c;
            bool hit = false;
            for (const auto& bad : b.words)
                if (bad.size() <= i + 1 &&
                    std::equal(bad.begin(), bad.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 1 - bad.size()))) {
                    hit = true;
                    break;
                }
            if (!hit)
                rec(i + 1);
        }
    };
    rec(0);
    return count;
}

} // namespace sympoly

#endif
