#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "purefield/integer.hpp"
#include "purefield/qpoly.hpp"

namespace purefield {

/// Dense polynomial over F_p with coefficients in [0, p). The zero
/// polynomial is empty; otherwise the leading coefficient is nonzero.
/// p must be a prime below 2^32 so products fit in 64 bits.
class FpPolynomial {
public:
    FpPolynomial() = default;
    FpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static FpPolynomial from_integers(std::uint64_t p, const std::vector<Integer>& coeffs);
    /// Reduction of a polynomial whose coefficient denominators are prime to p.
    static FpPolynomial from_qpoly(std::uint64_t p, const QPolynomial& f);
    static FpPolynomial x(std::uint64_t p);
    static FpPolynomial one(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& coefficients() const { return c_; }
    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }

    FpPolynomial monic() const;
    FpPolynomial derivative() const;
    /// Lift to Z[X] with coefficients in [0, p).
    QPolynomial lift() const;

    friend FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b);
    friend FpPolynomial operator*(const FpPolynomial& a, std::uint64_t c);
    friend bool operator==(const FpPolynomial& a, const FpPolynomial& b)
    {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    /// Orders by degree, then coefficients from the top; used for
    /// deterministic factor lists.
    friend bool operator<(const FpPolynomial& a, const FpPolynomial& b);

    std::string to_string(const char* var = "X") const;

private:
    void normalize();
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p);

std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& a, const FpPolynomial& b);
FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b);
/// base^exp mod modulus.
FpPolynomial powmod(const FpPolynomial& base, const Integer& exp, const FpPolynomial& modulus);

/// Monic gcd. Throws std::domain_error when both inputs are zero.
FpPolynomial fp_gcd(const FpPolynomial& a, const FpPolynomial& b);
/// gcd(f, f') constant. Constants count as separable.
bool is_separable(const FpPolynomial& f);

/// Distinct monic irreducible factors of f (f nonzero), sorted.
/// Square-free decomposition, distinct-degree splitting, then
/// Cantor-Zassenhaus equal-degree splitting with a fixed seed.
std::vector<FpPolynomial> distinct_irreducible_factors(const FpPolynomial& f);

/// Arithmetic in F_p[X]/(modulus) for an irreducible modulus, and in
/// polynomials over that field (coefficient lists, index = power of Y).
class FpExtField {
public:
    explicit FpExtField(FpPolynomial modulus);

    const FpPolynomial& modulus() const { return mod_; }
    std::uint64_t characteristic() const { return mod_.modulus(); }
    FpPolynomial reduce(const FpPolynomial& a) const { return a % mod_; }
    FpPolynomial mul(const FpPolynomial& a, const FpPolynomial& b) const { return (a * b) % mod_; }
    FpPolynomial inverse(const FpPolynomial& a) const;

    using Poly = std::vector<FpPolynomial>;
    Poly normalize(Poly a) const;
    Poly derivative(const Poly& a) const;
    std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const;
    /// Monic gcd over the field.
    Poly gcd(Poly a, Poly b) const;
    bool is_separable(const Poly& a) const;

private:
    FpPolynomial mod_;
};

}  // namespace purefield
