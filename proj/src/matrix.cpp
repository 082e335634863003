#include "purefield/matrix.hpp"

#include <utility>

namespace purefield {

QPolynomial charpoly(const RatMatrix& m)
{
    std::vector<Rational> desc = berkowitz(m);
    return QPolynomial(std::vector<Rational>(desc.rbegin(), desc.rend()));
}

RatMatrix evaluate_at(const QPolynomial& p, const RatMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("evaluate_at needs a square matrix");
    RatMatrix acc(m.rows(), m.cols());
    const RatMatrix id = RatMatrix::identity(m.rows());
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * m + id.scaled(c[k]);
    return acc;
}

namespace {

void row_axpy(IntMatrix& h, std::size_t target, const Integer& q, std::size_t source)
{
    for (std::size_t j = 0; j < h.cols(); ++j)
        if (h(source, j) != 0)
            h(target, j) -= q * h(source, j);
}

void swap_rows(IntMatrix& h, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < h.cols(); ++j)
        std::swap(h(a, j), h(b, j));
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("hnf expects a square matrix");
    const std::size_t n = m.rows();
    IntMatrix h = m;
    for (std::size_t c = n; c-- > 0;) {
        // gather the gcd of column c over rows 0..c into row c
        for (;;) {
            std::size_t pivot = n;
            for (std::size_t i = 0; i <= c; ++i)
                if (h(i, c) != 0 && (pivot == n || abs(h(i, c)) < abs(h(pivot, c))))
                    pivot = i;
            if (pivot == n)
                throw std::domain_error("hnf of a singular matrix");
            swap_rows(h, pivot, c);
            bool done = true;
            for (std::size_t i = 0; i < c; ++i) {
                if (h(i, c) == 0)
                    continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(c, c).get_mpz_t());
                row_axpy(h, i, q, c);
                if (h(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(c, c) < 0)
            for (std::size_t j = 0; j < n; ++j)
                h(c, j) = -h(c, j);
        for (std::size_t i = c + 1; i < n; ++i) {
            Integer q = floor_div(h(i, c), h(c, c));
            if (q != 0)
                row_axpy(h, i, q, c);
        }
    }
    return h;
}

Integer determinant(const IntMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            swap_rows(a, k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    Integer den = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            den = lcm(den, m(i, j).get_den());
    IntMatrix scaled(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            scaled(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
    return make_rational(determinant(scaled), ipow(den, m.rows()));
}

}  // namespace purefield
