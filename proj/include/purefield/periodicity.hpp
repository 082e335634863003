#pragma once

// Parametric bases per residue class of m modulo n0 = prod p^(k+1).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "purefield/purebasis.hpp"

namespace purefield::periodicity {

std::uint64_t period_modulus(std::uint64_t n);

/// True when every m = r (mod n0) is divisible by p^2 for some p | n.
bool class_has_no_square_free(std::uint64_t n, std::uint64_t r);

/// Square-free m = r (mod n0), m not in {0, 1, -1}, |m| <= bound, ordered by
/// |m| with the positive one first on ties.
std::vector<Integer> witnesses(std::uint64_t n, std::uint64_t r, std::uint64_t bound, std::size_t limit);

struct AtlasRow {
    enum class Kind { Skip, Unknown, Param };
    Kind kind = Kind::Unknown;
    std::string reason;                  // Skip / Unknown
    std::optional<Integer> witness;      // Param
    std::optional<Integer> second_witness;
    std::vector<QPolynomial> polynomials;
    /// the second witness produced identical polynomials (true when absent)
    bool periodic = true;
};

struct PeriodAtlas {
    std::uint64_t n = 0;
    std::uint64_t n0 = 0;
    std::map<std::uint64_t, AtlasRow> rows;
};

struct AtlasOptions {
    std::uint64_t scan_bound = 0;  // 0 = 10 * n0
    unsigned threads = 0;          // 0 = hardware concurrency
    /// certify each witness basis with the oracle
    bool certify = true;
    oracle::CertifyOptions certify_options;
};

PeriodAtlas atlas(std::uint64_t n, const AtlasOptions& options = {});

/// Literal equality of the basis polynomial lists for two square-free
/// witnesses of the class r. Throws InvalidInput when m1, m2 are not both
/// square-free and congruent to r modulo n0.
bool verify_periodicity(std::uint64_t n, std::uint64_t r, const Integer& m1, const Integer& m2);

/// Plain-text table of an atlas. Residues with
/// identical rows are grouped.
std::string render_table(const PeriodAtlas& atlas);

/// Fraction-style rendering "(X^8+4X^4+3X^2+4)/6" of a basis polynomial.
std::string render_fraction(const QPolynomial& poly);

}  // namespace purefield::periodicity
