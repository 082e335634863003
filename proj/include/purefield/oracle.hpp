#pragma once

// Independent checks for claimed integral bases. Nothing here uses the
// closed-form index formulas or the h-polynomial construction; every
// verdict comes from characteristic polynomials, traces and enumeration.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "purefield/field.hpp"

namespace purefield::oracle {

/// Element of Q(alpha) in the power basis 1, alpha, ..., alpha^(n-1).
struct FieldElement {
    PureField field;
    std::vector<Rational> coords;

    static FieldElement from_polynomial(const PureField& field, const QPolynomial& poly);
    QPolynomial polynomial() const;
};

/// Product reduced with alpha^n = m. Throws InvalidInput on field mismatch.
FieldElement mul(const FieldElement& a, const FieldElement& b);
/// n * (constant coordinate)
Rational trace(const FieldElement& e);
/// Tr(e * alpha^i), i = 0..n-1.
std::vector<Rational> dual_basis_coords(const FieldElement& e);
/// Matrix of x -> e*x in the power basis (column j = e * alpha^j).
RatMatrix multiplication_matrix(const FieldElement& e);
/// Characteristic polynomial of multiplication by e has integer coefficients.
bool is_algebraic_integer(const FieldElement& e);

/// Discriminant of the basis. For triangular bases it is D(alpha) over the
/// squared product of the diagonal of the transition matrix, cross-checked
/// against det[Tr(b_i b_j)]; otherwise the Gram determinant alone.
Rational basis_discriminant(const IntegralBasis& basis);

/// Coordinates of b_i * b_j in the basis, when all are integers.
struct StructureConstants {
    bool closed = false;
    /// table[i][j][k]: coefficient of b_k in b_i * b_j.
    std::vector<std::vector<std::vector<Integer>>> table;
};
StructureConstants structure_constants(const IntegralBasis& basis);

struct MaximalityResult {
    enum class Status { Proved, CounterexampleFound, Skipped };
    Status status = Status::Skipped;
    std::optional<FieldElement> counterexample;
    std::string reason;
    std::uint64_t candidates = 0;       // size of the candidate space, p^n - 1
    std::uint64_t exact_checks = 0;     // nonzero vectors of the filtered subspace tested
};

inline constexpr std::uint64_t default_enum_budget = std::uint64_t{1} << 24;

/// Decides whether some (sum c_i b_i)/p with c_i in [0, p), not all zero, is
/// an algebraic integer. Linear necessary conditions mod p cut the candidates
/// down to a subspace whose p^d elements are tested exactly. Proved iff none
/// is integral. Skipped when p^d exceeds the budget or the basis is not a ring.
MaximalityResult p_maximality_enum(const IntegralBasis& basis, std::uint64_t p,
                                   std::uint64_t budget = default_enum_budget, unsigned threads = 0);

struct CertifyOptions {
    bool check_maximality = true;
    std::uint64_t enum_budget = default_enum_budget;
    unsigned threads = 0;  // 0 = hardware concurrency
};

struct CertificationReport {
    std::vector<bool> integrality;
    bool ring_closed = false;
    bool disc_match = false;
    Rational discriminant;
    std::map<std::uint64_t, MaximalityResult> maximality;

    bool all_integral() const;
    /// Every check passed or was explicitly skipped.
    bool certified() const;
    bool any_skipped() const;
};

CertificationReport certify(const IntegralBasis& basis, const IndexReport& report,
                            const CertifyOptions& options = {});

std::string to_string(MaximalityResult::Status s);

}  // namespace purefield::oracle
