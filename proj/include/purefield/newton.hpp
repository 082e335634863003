#pragma once

// phi-adic developments, principal phi-Newton polygons, residual
// polynomials and Ore's index bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "purefield/fppoly.hpp"
#include "purefield/qpoly.hpp"

namespace purefield::newton {

/// f = sum_i coeffs[i] * phi^i with deg coeffs[i] < deg phi.
struct PhiDevelopment {
    QPolynomial f;
    QPolynomial phi;
    std::uint64_t p = 2;
    std::vector<QPolynomial> coeffs;
    /// v_p(coeffs[i]); nullopt stands for +infinity (coeffs[i] == 0).
    std::vector<std::optional<long>> valuations;
};

struct LatticePoint {
    long x = 0;
    long y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Element coefficients live in F_p[X]/(phi_bar); index j multiplies Y^j.
struct FpExtPolynomial {
    std::uint64_t p = 2;
    FpPolynomial phi_bar;
    std::vector<FpPolynomial> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    std::string to_string() const;
};

struct Side {
    LatticePoint start;
    LatticePoint end;
    long h = 0;       // slope is -h/e, gcd(h, e) = 1
    long e = 1;
    long length = 0;  // projection onto the abscissa
    long degree = 0;  // length / e
    FpExtPolynomial residual;
    bool separable = true;

    std::string slope_string() const { return "-" + std::to_string(h) + "/" + std::to_string(e); }
};

struct NewtonPolygon {
    std::vector<LatticePoint> points;    // (i, u_i) for finite u_i
    std::vector<LatticePoint> vertices;  // principal part, ascending abscissa
    std::vector<Side> sides;
};

/// Repeated division with remainder by phi. Requires integer coefficients
/// and monic phi of positive degree (std::invalid_argument otherwise).
PhiDevelopment phi_development(const QPolynomial& f, const QPolynomial& phi, std::uint64_t p);

/// Negative-slope part of the lower convex hull of the development points,
/// with residual polynomials attached to every side.
NewtonPolygon principal_polygon(const PhiDevelopment& dev);

/// deg_phi times the number of lattice points (x, y) with x >= 1, y >= 1 on
/// or below the principal polygon, abscissa bounded by its projection.
std::uint64_t phi_index(const NewtonPolygon& polygon, std::uint64_t degphi);

FpExtPolynomial residual_polynomial(const PhiDevelopment& dev, const Side& side);
bool is_separable(const FpExtPolynomial& r);
/// All residual polynomials of the principal polygon are separable.
bool is_regular(const PhiDevelopment& dev);

struct FactorContribution {
    QPolynomial phi;  // monic lift, coefficients in [0, p)
    NewtonPolygon polygon;
    std::uint64_t index = 0;
    bool regular = true;
};

struct IndexBound {
    std::uint64_t bound = 0;
    bool exact = true;  // every development is regular
    std::vector<FactorContribution> factors;
};

/// Ore's bound on ind_p for a root of f: sum of phi-indices over the
/// distinct irreducible factors of f mod p, exact iff f is phi-regular for
/// each. f must be monic with integer coefficients.
IndexBound index_lower_bound(const QPolynomial& f, std::uint64_t p);

/// ASCII rendering of the points and the principal polygon.
std::string render_ascii(const NewtonPolygon& polygon);

}  // namespace purefield::newton
