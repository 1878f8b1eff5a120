#ifndef SYMPOLY_POLYNOMIAL_HPP
#define SYMPOLY_POLYNOMIAL_HPP

#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "types.hpp"

namespace sympoly {

/// Dense univariate polynomial, coefficient i multiplies t^i. Trailing zeros
/// are always trimmed, so the zero polynomial has no coefficients.
template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
    static Polynomial monomial(const T& coeff, std::size_t degree)
    {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = coeff;
        return Polynomial(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const noexcept { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    T operator()(const T& x) const
    {
        T acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const
    {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i)
            d.push_back(c_[i] * T(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    bool is_palindromic(long d) const
    {
        for (long i = 0; i <= d; ++i)
            if (coeff(static_cast<std::size_t>(i)) != coeff(static_cast<std::size_t>(d - i)))
                return false;
        return true;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& k)
    {
        for (auto& x : c_)
            x *= k;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend Polynomial operator*(Polynomial a, const T& k) { return a *= k; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Coefficients below t^r removed.
    Polynomial chopped_below(std::size_t r) const
    {
        std::vector<T> c = c_;
        for (std::size_t i = 0; i < std::min(r, c.size()); ++i)
            c[i] = 0;
        return Polynomial(std::move(c));
    }

    Polynomial truncated(std::size_t max_degree) const
    {
        if (c_.size() <= max_degree + 1)
            return *this;
        return Polynomial(std::vector<T>(c_.begin(), c_.begin() + static_cast<long>(max_degree) + 1));
    }

    std::string to_string(const char* var = "t") const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            T v = c_[i];
            if (!first)
                os << (v < 0 ? " - " : " + ");
            else if (v < 0)
                os << "-";
            if (v < 0)
                v = -v;
            if (i == 0 || v != 1)
                os << v;
            if (i > 0)
                os << var;
            if (i > 1)
                os << "^" << i;
            first = false;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

namespace detail {

inline bool exact_quotient(const Integer& a, const Integer& b, Integer& q)
{
    q = a / b;
    return q * b == a;
}

inline bool exact_quotient(const Rational& a, const Rational& b, Rational& q)
{
    q = a / b;
    return true;
}

} // namespace detail

/// Long division a = q*b + r with deg r < deg b. Over the integers the
/// division must stay integral, otherwise NonDivisible is thrown.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b)
{
    if (b.is_zero())
        throw Error(ErrorKind::DivisionByZeroPolynomial, "polynomial division by zero");
    std::vector<T> rem = a.coeffs();
    if (a.degree() < b.degree())
        return {Polynomial<T>{}, a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<T> quot(rem.size() - db, T(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        T q;
        if (!detail::exact_quotient(rem[k + db], b.leading(), q))
            throw Error(ErrorKind::NonDivisible, "leading coefficient does not divide over the integers");
        quot[k] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k + j] -= q * b.coeffs()[j];
    }
    return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

/// Quotient that must be exact; NonDivisible otherwise.
template <class T>
Polynomial<T> exact_divide(const Polynomial<T>& a, const Polynomial<T>& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(ErrorKind::NonDivisible, "(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    return q;
}

inline RatPolynomial monic(const RatPolynomial& p)
{
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading());
}

/// Monic gcd over Q (zero when both inputs are zero).
inline RatPolynomial gcd(RatPolynomial a, RatPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline RatPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<Rational> c;
    for (const auto& x : p.coeffs())
        c.emplace_back(x);
    return RatPolynomial(std::move(c));
}

/// Integer polynomial with the same coefficients, or nullopt if some
/// coefficient is fractional.
inline std::optional<IntPolynomial> to_integer(const RatPolynomial& p)
{
    std::vector<Integer> c;
    for (const auto& x : p.coeffs()) {
        if (denominator(x) != 1)
            return std::nullopt;
        c.push_back(numerator(x));
    }
    return IntPolynomial(std::move(c));
}

inline IntPolynomial one_plus_t_power(std::size_t e)
{
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= e; ++i)
        c.push_back(binomial(static_cast<long>(e), static_cast<long>(i)));
    return IntPolynomial(std::move(c));
}

/// gamma-vector of a palindromic polynomial of degree d:
/// h(t) = sum_i gamma_i t^i (1+t)^(d-2i).
inline std::vector<Integer> gamma_vector(const IntPolynomial& h, long d)
{
    if (!h.is_palindromic(d))
        throw Error(ErrorKind::NonPalindromicHStar, h.to_string() + " is not palindromic of degree " + std::to_string(d));
    std::vector<Integer> gamma;
    IntPolynomial rest = h;
    for (long i = 0; 2 * i <= d; ++i) {
        Integer g = rest.coeff(static_cast<std::size_t>(i));
        gamma.push_back(g);
        IntPolynomial term = one_plus_t_power(static_cast<std::size_t>(d - 2 * i));
        rest -= IntPolynomial::monomial(1, static_cast<std::size_t>(i)) * term * g;
    }
    if (!rest.is_zero())
        throw Error(ErrorKind::NonPalindromicHStar, "gamma extraction left remainder " + rest.to_string());
    return gamma;
}

inline IntPolynomial from_gamma(const std::vector<Integer>& gamma, long d)
{
    IntPolynomial h;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        h += IntPolynomial::monomial(gamma[i], i) * one_plus_t_power(static_cast<std::size_t>(d - 2 * static_cast<long>(i)));
    return h;
}

} // namespace sympoly

#endif
