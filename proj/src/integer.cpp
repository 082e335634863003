#include "purefield/integer.hpp"

#include <cctype>

namespace purefield {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

unsigned vp_int(const Integer& p, const Integer& a)
{
    if (a == 0)
        throw std::domain_error("valuation of zero undefined");
    if (p < 2)
        throw std::invalid_argument("valuation base must be a prime");
    Integer rest = abs(a);
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++e;
    }
    return e;
}

long vp_rational(const Integer& p, const Rational& q)
{
    return static_cast<long>(vp_int(p, q.get_num())) - static_cast<long>(vp_int(p, q.get_den()));
}

Integer ipow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

std::uint64_t ipow_u64(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw std::overflow_error("ipow_u64 overflow");
        r *= base;
    }
    return r;
}

Integer isqrt(const Integer& a)
{
    if (a < 0)
        throw std::domain_error("isqrt of negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer mod_floor(const Integer& a, const Integer& mod)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    return r;
}

std::uint64_t mod_floor_u64(const Integer& a, std::uint64_t mod)
{
    Integer r = mod_floor(a, Integer(static_cast<unsigned long>(mod)));
    return r.get_ui();
}

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n)
{
    if (n == 0)
        throw std::domain_error("cannot factor zero");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> primes;
    if (limit < 2)
        return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

SquareFreeResult square_free_check(const Integer& m, std::uint64_t bound)
{
    if (m == 0 || m == 1 || m == -1)
        throw InvalidInput("m must not be 0, 1 or -1");
    Integer rest = abs(m);
    SquareFreeResult result;
    // Trial division by 2 and the odd numbers; composite divisors never
    // divide because their prime factors are already removed.
    std::uint64_t d = 2;
    while (d <= bound && Integer(static_cast<unsigned long>(d)) * d <= rest) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
            if (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
                result.status = SquareFreeStatus::NotSquareFree;
                result.witness = d;
                return result;
            }
        }
        d += (d == 2 ? 1 : 2);
    }
    if (Integer(static_cast<unsigned long>(d)) * d > rest) {
        // rest is 1 or a prime
        result.status = SquareFreeStatus::SquareFree;
        return result;
    }
    result.status = SquareFreeStatus::Unknown;
    result.cofactor = rest;
    return result;
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size())
        throw InvalidInput("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidInput("not an integer: '" + text + "'");
    Integer r;
    r.set_str(text[0] == '+' ? text.substr(1) : text, 10);
    return r;
}

}  // namespace purefield
