#pragma once

// Exact scalars: arbitrary-precision integers and rationals, p-adic
// valuations, and the small number-theoretic helpers shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace purefield {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator); gmpxx keeps
/// results of arithmetic canonical, make_rational handles construction.
using Rational = mpq_class;

/// Bad user input: non-square-free m, degree < 2, mismatched moduli...
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource bound (trial-division bound, enumeration budget,
/// witness scan bound) was hit before an answer was reached.
class ResourceBound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(const Integer& num, const Integer& den);
inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Largest e with p^e | a. Throws std::domain_error for a == 0.
unsigned vp_int(const Integer& p, const Integer& a);
/// v_p(a/b) = v_p(a) - v_p(b). Throws std::domain_error for zero.
long vp_rational(const Integer& p, const Rational& q);

Integer ipow(const Integer& base, unsigned long exp);
std::uint64_t ipow_u64(std::uint64_t base, unsigned exp);
Integer isqrt(const Integer& a);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Least non-negative residue of a modulo mod (mod > 0).
Integer mod_floor(const Integer& a, const Integer& mod);
std::uint64_t mod_floor_u64(const Integer& a, std::uint64_t mod);

bool is_prime_u64(std::uint64_t n);
/// Prime factorization of n >= 1 by trial division, ascending primes.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);
/// Primes up to and including limit.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

enum class SquareFreeStatus { SquareFree, NotSquareFree, Unknown };

struct SquareFreeResult {
    SquareFreeStatus status = SquareFreeStatus::Unknown;
    std::uint64_t witness = 0;  // prime p with p^2 | m when NotSquareFree
    Integer cofactor;           // unfactored part when Unknown
};

inline constexpr std::uint64_t default_square_free_bound = 10'000'000;

/// Trial division by primes up to min(bound, isqrt|m|). Throws InvalidInput
/// for m in {0, 1, -1}.
SquareFreeResult square_free_check(const Integer& m,
                                   std::uint64_t bound = default_square_free_bound);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);
/// Parses a decimal integer; throws InvalidInput on malformed text.
Integer parse_integer(const std::string& text);

}  // namespace purefield
