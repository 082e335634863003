#pragma once

// Test-side reference computations. They deliberately avoid the library's
// algorithms (no Berkowitz, no Bareiss, no closed forms) so agreement means
// something.

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <random>
#include <string>
#include <vector>

#include "purefield/field.hpp"
#include "purefield/integer.hpp"
#include "purefield/matrix.hpp"
#include "purefield/qpoly.hpp"

namespace testing_support {

using purefield::Integer;
using purefield::QPolynomial;
using purefield::Rational;
using purefield::RatMatrix;

inline unsigned naive_vp(unsigned long p, Integer a)
{
    unsigned e = 0;
    while (a % p == 0) {
        a /= p;
        ++e;
    }
    return e;
}

inline bool naive_square_free(long m)
{
    if (m < 0)
        m = -m;
    for (long d = 2; d * d <= m; ++d)
        if (m % (d * d) == 0)
            return false;
    return true;
}

/// Square-free m with |m| <= bound, m not in {0, 1, -1}, ascending |m|, positive first.
inline std::vector<long> square_free_values(long bound)
{
    std::vector<long> out;
    for (long a = 2; a <= bound; ++a)
        if (naive_square_free(a)) {
            out.push_back(a);
            out.push_back(-a);
        }
    return out;
}

/// Faddeev-LeVerrier: c_{n-k} = -tr(A M_k)/k with M_{k+1} = A M_k + c_{n-k} I.
inline QPolynomial leverrier_charpoly(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const RatMatrix am = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / static_cast<unsigned long>(k);
        m = am + RatMatrix::identity(n).scaled(c[n - k]);
    }
    return QPolynomial(c);
}

/// Determinant by cofactor-free Gaussian elimination over Q.
inline Rational gauss_det(RatMatrix a)
{
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(piv, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Power-basis coordinates of poly(alpha) with alpha^n = m.
inline std::vector<Rational> reduce_mod(const QPolynomial& poly, std::size_t n, const Integer& m)
{
    std::vector<Rational> out(n);
    Rational scale = 1;
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
        if (i && i % n == 0)
            scale *= m;
        out[i % n] += poly.coefficients()[i] * scale;
    }
    return out;
}

/// Charpoly of multiplication by poly(alpha), via Leverrier.
inline QPolynomial element_charpoly(const QPolynomial& poly, std::size_t n, const Integer& m)
{
    RatMatrix a(n, n);
    std::vector<Rational> col = reduce_mod(poly, n, m);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            a(i, j) = col[i];
        Rational top = col[n - 1];
        for (std::size_t i = n - 1; i > 0; --i)
            col[i] = col[i - 1];
        col[0] = top * m;
    }
    return leverrier_charpoly(a);
}

inline bool integral_element(const QPolynomial& poly, std::size_t n, const Integer& m)
{
    return element_charpoly(poly, n, m).has_integer_coefficients();
}

/// Z-module equality by mutual containment: every generator of one side is
/// an integer combination of the other's triangular basis.
inline bool triangular_contains(const std::vector<QPolynomial>& basis, const QPolynomial& v, std::size_t n)
{
    std::vector<Rational> rest(n);
    for (std::size_t i = 0; i < n; ++i)
        rest[i] = v.coeff(i);
    for (std::size_t k = n; k-- > 0;) {
        if (rest[k] == 0)
            continue;
        const Rational x = rest[k] / basis[k].coeff(k);
        if (x.get_den() != 1)
            return false;
        for (std::size_t i = 0; i <= k; ++i)
            rest[i] -= x * basis[k].coeff(i);
    }
    return true;
}

inline bool same_span(const std::vector<QPolynomial>& a, const std::vector<QPolynomial>& b, std::size_t n)
{
    for (const auto& v : b)
        if (!triangular_contains(a, v, n))
            return false;
    for (const auto& v : a)
        if (!triangular_contains(b, v, n))
            return false;
    return true;
}

/// Parses fraction notation, e.g. "(X^8+4X^4+3X^2+4)/6" or "X^3".
inline QPolynomial parse_fraction(std::string s)
{
    std::string num = s;
    long den = 1;
    const auto slash = s.rfind('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = std::stol(s.substr(slash + 1));
    }
    if (!num.empty() && num.front() == '(')
        num = num.substr(1, num.size() - 2);
    std::vector<Rational> c;
    std::size_t i = 0;
    while (i < num.size()) {
        long sign = 1;
        if (num[i] == '+' || num[i] == '-') {
            sign = num[i] == '-' ? -1 : 1;
            ++i;
        }
        long coef = 1;
        bool has_digits = false;
        std::size_t j = i;
        while (j < num.size() && std::isdigit(static_cast<unsigned char>(num[j])))
            ++j;
        if (j > i) {
            coef = std::stol(num.substr(i, j - i));
            has_digits = true;
        }
        i = j;
        std::size_t power = 0;
        if (i < num.size() && num[i] == 'X') {
            power = 1;
            ++i;
            if (i < num.size() && num[i] == '^') {
                ++i;
                j = i;
                while (j < num.size() && std::isdigit(static_cast<unsigned char>(num[j])))
                    ++j;
                power = std::stoul(num.substr(i, j - i));
                i = j;
            }
        } else if (!has_digits) {
            throw std::invalid_argument("bad term in " + s);
        }
        if (c.size() <= power)
            c.resize(power + 1);
        c[power] += purefield::make_rational(sign * coef, den);
    }
    return QPolynomial(c);
}

inline std::vector<QPolynomial> parse_list(const std::vector<std::string>& items)
{
    std::vector<QPolynomial> out;
    for (const auto& s : items)
        out.push_back(parse_fraction(s));
    return out;
}

struct AtlasReference {
    std::vector<std::uint64_t> residues;
    std::vector<std::string> basis;
};

/// Published degree-12 table (m mod 72). The fifth group lists 33 where the
/// source prints 3; 3 already belongs to the power-basis group.
inline std::vector<AtlasReference> degree12_reference()
{
    const std::vector<std::string> head = {"1", "X", "X^2", "X^3", "X^4", "X^5"};
    auto with = [&](std::vector<std::string> tail) {
        std::vector<std::string> out = head;
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    };
    return {
        {{2, 3, 6, 7, 11, 14, 15, 22, 23, 30, 31, 34, 38, 39, 42, 43, 47, 50, 51, 58, 59, 66, 67, 70},
         with({"X^6", "X^7", "X^8", "X^9", "X^10", "X^11"})},
        {{10, 19, 46, 55},
         with({"X^6", "X^7", "(X^8+X^4+1)/3", "(X^9+X^5+X)/3", "(X^10+X^6+X^2)/3", "(X^11+X^7+X^3)/3"})},
        {{26, 35, 62, 71},
         with({"X^6", "X^7", "(X^8+2X^4+1)/3", "(X^9+2X^5+X)/3", "(X^10+2X^6+X^2)/3", "(X^11+2X^7+X^3)/3"})},
        {{5, 13, 21, 29, 61, 69},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+X^2)/2", "(X^9+X^3)/2", "(X^10+X^4)/2", "(X^11+X^5)/2"})},
        {{25, 33, 41, 49, 57, 65},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+X^2)/2", "(X^9+X^6+X^3+1)/4", "(X^10+X^7+X^4+X)/4",
               "(X^11+X^8+X^5+X^2)/4"})},
        {{53},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+2X^4+3X^2+4)/6", "(X^9+2X^5+3X^3+4X)/6", "(X^10+2X^6+3X^4+4X^2)/6",
               "(X^11+2X^7+3X^5+4X^3)/6"})},
        {{17},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+2X^4+3X^2+4)/6", "(X^9+3X^6+8X^5+9X^3+4X+3)/12",
               "(X^10+3X^7+2X^6+9X^4+4X^2+3X+6)/12", "(X^11+X^8+2X^7+9X^5+8X^4+4X^3+9X^2+6X+4)/12"})},
        {{37},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+4X^4+3X^2+4)/6", "(X^9+4X^5+3X^3+4X)/6",
               "(X^10+X^6+3X^4+4X^2+3)/6", "(X^11+X^7+3X^5+4X^3+3X)/6"})},
        {{1},
         with({"(X^6+1)/2", "(X^7+X)/2", "(X^8+4X^4+3X^2+4)/6", "(X^9+3X^6+4X^5+9X^3+4X+3)/12",
               "(X^10+3X^7+4X^6+9X^4+4X^2+3X)/12", "(X^11+X^8+4X^7+9X^5+4X^4+4X^3+9X^2+4)/12"})},
    };
}

}  // namespace testing_support
