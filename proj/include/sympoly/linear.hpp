#ifndef SYMPOLY_LINEAR_HPP
#define SYMPOLY_LINEAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rational_function.hpp"

namespace sympoly {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(rows * cols, fill)
    {
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0))
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        Matrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i)
            c.a_[i] = c.a_[i] - b.a_[i];
        return c;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    template <class F>
    Matrix map(F&& f) const
    {
        Matrix c(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i)
            c.a_[i] = f(a_[i]);
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<RationalFunction>;

/// Gaussian elimination over the field of T. The pivot in each column is
/// the first nonzero entry at or below the diagonal.
template <class T>
std::vector<T> solve_linear(Matrix<T> a, std::vector<T> b)
{
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw Error(ErrorKind::InvalidArgument, "solve_linear needs a square system");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == T(0))
            ++piv;
        if (piv == n)
            throw Error(ErrorKind::SingularSystem, "no pivot in column " + std::to_string(col));
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(piv, j), a(col, j));
            std::swap(b[piv], b[col]);
        }
        const T inv = T(1) / a(col, col);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == T(0))
                continue;
            const T factor = a(r, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a(r, j) = a(r, j) - factor * a(col, j);
            b[r] = b[r] - factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        b[i] = b[i] / a(i, i);
    return b;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a)
{
    const std::size_t n = a.rows();
    Matrix<T> inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<T> e(n, T(0));
        e[j] = T(1);
        auto col = solve_linear(a, std::move(e));
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = col[i];
    }
    return inv;
}

/// Rank over Q of the given rows.
inline std::size_t rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t r = 0;
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0)
                continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Solution of a (possibly rectangular) system A x = b whose columns are
/// linearly independent; nullopt if inconsistent or rank-deficient.
inline std::optional<std::vector<Rational>> solve_full_column_rank(std::vector<std::vector<Rational>> a,
                                                                   std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    std::vector<std::size_t> pivot_row(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0)
            ++piv;
        if (piv == rows)
            return std::nullopt;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0)
                continue;
            const Rational f = a[i][col] / a[r][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_row[col] = r++;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t col = 0; col < cols; ++col)
        x[col] = b[pivot_row[col]] / a[pivot_row[col]][col];
    return x;
}

/// Lagrange interpolation through (x_i, y_i) with distinct x_i.
inline RatPolynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points)
{
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw Error(ErrorKind::DuplicatePoints, "interpolation node repeated");
    RatPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RatPolynomial basis = RatPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            basis *= RatPolynomial{Rational(-points[j].first), Rational(1)};
            denom *= Rational(points[i].first - points[j].first);
        }
        result += basis * (points[i].second / denom);
    }
    return result;
}

} // namespace sympoly

#endif
