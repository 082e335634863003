#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "purefield/integer.hpp"
#include "purefield/qpoly.hpp"

namespace purefield {

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch in sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }

    Matrix scaled(const T& c) const
    {
        Matrix r = *this;
        for (auto& x : r.data_)
            x *= c;
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Characteristic polynomial det(X*I - A) by the division-free
/// Samuelson-Berkowitz recurrence; works over any commutative ring R.
/// Returns coefficients in descending order: [1, c_1, ..., c_n].
template <typename R>
std::vector<R> berkowitz(const Matrix<R>& a)
{
    if (!a.is_square())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<R> c{R(1)};
    for (std::size_t r = 1; r <= n; ++r) {
        const std::size_t k = r - 1;  // new row/column index
        const R& diag = a(k, k);
        // beta_j = R_row * A_{k}^j * S_col for j = 0..k-1
        std::vector<R> beta(k, R(0));
        std::vector<R> v(k, R(0));
        for (std::size_t i = 0; i < k; ++i)
            v[i] = a(i, k);
        for (std::size_t j = 0; j < k; ++j) {
            R acc(0);
            for (std::size_t i = 0; i < k; ++i)
                acc += a(k, i) * v[i];
            beta[j] = acc;
            if (j + 1 < k) {
                std::vector<R> w(k, R(0));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t l = 0; l < k; ++l)
                        w[i] += a(i, l) * v[l];
                v = std::move(w);
            }
        }
        std::vector<R> next(r + 1, R(0));
        for (std::size_t i = 0; i <= r; ++i) {
            if (i < c.size())
                next[i] += c[i];
            if (i >= 1 && i - 1 < c.size())
                next[i] -= diag * c[i - 1];
        }
        for (std::size_t j = 0; j + 2 <= r; ++j) {
            R acc(0);
            for (std::size_t i = 0; i <= j; ++i)
                acc += c[i] * beta[j - i];
            next[j + 2] -= acc;
        }
        c = std::move(next);
    }
    return c;
}

/// Monic characteristic polynomial det(X*I - M).
QPolynomial charpoly(const RatMatrix& m);

/// p(M) for a square matrix M.
RatMatrix evaluate_at(const QPolynomial& p, const RatMatrix& m);

/// Hermite normal form of the lattice spanned by the rows of a square
/// nonsingular integer matrix: lower-triangular, positive diagonal, entries
/// below the diagonal reduced into [0, diagonal entry of their column).
/// Invariant under left multiplication by unimodular matrices.
/// Throws std::domain_error for singular input.
IntMatrix hnf(const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

}  // namespace purefield
