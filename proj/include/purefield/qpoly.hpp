#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "purefield/integer.hpp"

namespace purefield {

/// Dense polynomial over Q; coefficient i multiplies X^i. Never carries
/// trailing zeros, so the zero polynomial has no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    QPolynomial(std::initializer_list<long> coeffs);

    static QPolynomial constant(const Rational& c);
    /// c * X^k
    static QPolynomial monomial(const Rational& c, std::size_t k);
    static QPolynomial from_integers(const std::vector<Integer>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    bool is_monic() const;
    bool has_integer_coefficients() const;

    /// Least positive c with c * this in Z[X]; 1 for the zero polynomial.
    Integer denominator() const;
    /// Integer coefficients of denominator() * this.
    std::vector<Integer> scaled_numerator() const;

    QPolynomial derivative() const;
    /// this(X^e)
    QPolynomial substitute_power(std::size_t e) const;
    /// X^j * this
    QPolynomial shift(std::size_t j) const;
    Rational evaluate(const Rational& x) const;

    QPolynomial operator-() const;
    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const Rational& c);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
    friend QPolynomial operator*(const Rational& c, QPolynomial a) { return a *= c; }
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human form, highest degree first, e.g. "X^2 - 3*X + 1/2".
    std::string to_string(const char* var = "X") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Euclidean division; returns (quotient, remainder). Throws on zero divisor.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

/// Minimum valuation over the nonzero coefficients. Throws std::domain_error
/// for the zero polynomial.
long vp_poly(const Integer& p, const QPolynomial& f);

}  // namespace purefield
