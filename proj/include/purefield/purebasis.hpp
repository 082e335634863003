#pragma once

// Integral bases of Q(m^(1/n)) for square-free m.
//
// Prime-power degree p^k: with r = m mod p^(k+1) and s = v_p(m^p - m) - 1,
// the basis is alpha^j * h_t(alpha) / p^t over t = 0..min(s, k), laid out so
// that element i has degree exactly i. Composite degree: bases of the
// coprime parts are merged coefficient-wise by the Chinese remainder theorem.
// Every basis is certified by the oracle before it is returned.

#include <cstdint>
#include <utility>

#include "purefield/field.hpp"
#include "purefield/oracle.hpp"

namespace purefield {

struct BuildOptions {
    oracle::CertifyOptions certify;
};

/// Thrown when a constructed basis fails certification.
class CertificationFailure : public std::logic_error {
public:
    CertificationFailure(const std::string& what, oracle::CertificationReport report)
        : std::logic_error(what), report(std::move(report))
    {}
    oracle::CertificationReport report;
};

/// v_p(m^p - m) - 1. Throws std::domain_error when p | m.
unsigned s_value(std::uint64_t p, const Integer& m);

/// (X^(p^k) - r^(p^t)) / (X^(p^(k-t)) - r), expanded.
QPolynomial h_polynomial(std::uint64_t p, unsigned k, const Integer& r, unsigned t);

/// ind_p of a root of X^(p^k) - m.
std::uint64_t ind_p_closed_form(std::uint64_t p, unsigned k, const Integer& m);

/// Index ledger for the field: per-prime indices from the closed form, the
/// total index via the coprime-degree recursion, both discriminants, and
/// the Ore bound from the Newton polygon of X^n - m for every p | n.
IndexReport index_report(const PureField& field);

/// Basis of Q(m^(1/p^k)) as h-polynomial family (power basis when p | m).
IntegralBasis prime_power_basis(std::uint64_t p, unsigned k, const Integer& m, const BuildOptions& options = {});

/// Basis of Q(m^(1/(n1 n2))) from bases of the coprime-degree subfields.
IntegralBasis compose_bases(const IntegralBasis& first, const IntegralBasis& second,
                            const BuildOptions& options = {});

/// A basis together with its index ledger and the oracle verdict on it.
struct CertifiedBasis {
    IntegralBasis basis;
    IndexReport report;
    oracle::CertificationReport certification;
};

CertifiedBasis certified_integral_basis(const PureField& field, const BuildOptions& options = {});

std::pair<IntegralBasis, IndexReport> integral_basis(const PureField& field, const BuildOptions& options = {});

/// Construction only, no certification. For callers that certify
/// themselves (mutation tests, the atlas) or only need the polynomials.
IntegralBasis construct_basis(const PureField& field);

/// Both bases span the same Z-module.
bool same_module(const IntegralBasis& a, const IntegralBasis& b);

/// Basis polynomials, lowest degree first.
std::vector<QPolynomial> basis_polynomials(const IntegralBasis& basis);

/// Replaces every non-leading numerator coefficient by its residue modulo
/// the element denominator in the symmetric range (-d/2, d/2]. Each element
/// moves by an element of Z[alpha] of lower degree, so for an integral
/// basis the spanned module is unchanged.
std::vector<BasisElement> symmetric_representatives(const std::vector<BasisElement>& elements);

}  // namespace purefield
