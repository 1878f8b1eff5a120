#ifndef SYMPOLY_RATIONAL_FUNCTION_HPP
#define SYMPOLY_RATIONAL_FUNCTION_HPP

#include <ostream>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace sympoly {

/// Element of Q(s), always kept reduced with a monic denominator, so that
/// structural equality is equality of functions.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(RatPolynomial::constant(1)) {}
    RationalFunction(const Rational& c) : num_(RatPolynomial::constant(c)), den_(RatPolynomial::constant(1)) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    RationalFunction(RatPolynomial num) : num_(std::move(num)), den_(RatPolynomial::constant(1)) {}
    RationalFunction(RatPolynomial num, RatPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    static RationalFunction variable() { return RationalFunction(RatPolynomial{0, 1}); }
    static RationalFunction monomial(long coeff, std::size_t degree)
    {
        return RationalFunction(RatPolynomial::monomial(Rational(coeff), degree));
    }

    const RatPolynomial& num() const noexcept { return num_; }
    const RatPolynomial& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction derivative() const
    {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFunction inverse() const
    {
        if (is_zero())
            throw Error(ErrorKind::DivisionByZeroPolynomial, "inverse of the zero rational function");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a)
    {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    std::string to_string(const char* var = "s") const
    {
        if (den_.degree() == 0)
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
    void normalize()
    {
        if (den_.is_zero())
            throw Error(ErrorKind::DivisionByZeroPolynomial, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = RatPolynomial::constant(1);
            return;
        }
        RatPolynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        const Rational lead = den_.leading();
        num_ *= Rational(1) / lead;
        den_ *= Rational(1) / lead;
    }

    RatPolynomial num_;
    RatPolynomial den_;
};

/// Taylor coefficients c_0..c_N at s = 0 from the recurrence den * f = num.
inline std::vector<Rational> series_coefficients(const RationalFunction& f, std::size_t order)
{
    const RatPolynomial& den = f.den();
    if (den.coeff(0) == 0)
        throw Error(ErrorKind::PoleAtOrigin, f.to_string() + " has a pole at s = 0");
    std::vector<Rational> c(order + 1);
    const Rational d0 = den.coeff(0);
    for (std::size_t i = 0; i <= order; ++i) {
        Rational acc = f.num().coeff(i);
        for (std::size_t j = 1; j <= i && j < den.coeffs().size(); ++j)
            acc -= den.coeffs()[j] * c[i - j];
        c[i] = acc / d0;
    }
    return c;
}

/// f minus its Taylor terms below s^r.
inline RationalFunction chop(const RationalFunction& f, std::size_t r)
{
    if (r == 0)
        return f;
    auto head = series_coefficients(f, r - 1);
    return f - RationalFunction(RatPolynomial(std::move(head)));
}

} // namespace sympoly

#endif
