#pragma once

// Value types shared by basis construction, certification and periodicity.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "purefield/integer.hpp"
#include "purefield/matrix.hpp"
#include "purefield/qpoly.hpp"

namespace purefield {

struct PrimePower {
    std::uint64_t p = 0;
    unsigned k = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Q(m^(1/n)) with square-free m not in {0, 1, -1}.
class PureField {
public:
    /// Validates n >= 2 and square-freeness of m. Throws InvalidInput for
    /// bad input, ResourceBound when square-freeness cannot be decided
    /// within the trial-division bound and allow_unknown is false.
    static PureField create(std::uint64_t n, const Integer& m,
                            std::uint64_t square_free_bound = default_square_free_bound,
                            bool allow_unknown = false);

    std::uint64_t n() const { return n_; }
    const Integer& m() const { return m_; }
    /// Prime factorization of n, ascending primes.
    const std::vector<PrimePower>& factorization() const { return factors_; }

    friend bool operator==(const PureField& a, const PureField& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
    PureField(std::uint64_t n, Integer m);
    std::uint64_t n_ = 0;
    Integer m_;
    std::vector<PrimePower> factors_;
};

/// numerator(alpha) / denominator with integer numerator coefficients and
/// gcd(content(numerator), denominator) = 1.
struct BasisElement {
    QPolynomial numerator;
    Integer denominator = 1;

    static BasisElement from_polynomial(const QPolynomial& poly);
    QPolynomial polynomial() const;
    long degree() const { return numerator.degree(); }
    friend bool operator==(const BasisElement& a, const BasisElement& b)
    {
        return a.denominator == b.denominator && a.numerator == b.numerator;
    }
};

/// A Z-module basis given by rows D * coords, in Hermite normal form.
struct CanonicalForm {
    Integer den = 1;
    IntMatrix hnf;
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b)
    {
        return a.den == b.den && a.hnf == b.hnf;
    }
};

struct IntegralBasis {
    PureField field;
    std::vector<BasisElement> elements;
    CanonicalForm canonical;
};

enum class IndexSource { Eisenstein, ClosedForm };

struct IndexReport {
    /// ind_p of the n-th root for every p | n.
    std::map<std::uint64_t, std::uint64_t> per_prime;
    std::map<std::uint64_t, IndexSource> source;
    /// Ore bound from the Newton polygon of X^n - m at p, and whether it
    /// is an equality (phi-regular).
    std::map<std::uint64_t, std::pair<std::uint64_t, bool>> polygon;
    Integer total_index = 1;
    Integer field_discriminant;
    Integer poly_discriminant;
};

/// Canonical form of the module spanned by polynomials of degree < n,
/// taken as coordinate rows in the power basis. Requires n independent rows.
CanonicalForm canonical_form(std::uint64_t n, const std::vector<QPolynomial>& generators);
CanonicalForm canonical_form(std::uint64_t n, const std::vector<BasisElement>& elements);

/// (-1)^(n(n-1)/2) n^n (-m)^(n-1)
Integer poly_discriminant(std::uint64_t n, const Integer& m);

std::string to_string(IndexSource s);

}  // namespace purefield
