#include "purefield/fppoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace purefield {

namespace {

void require_same_field(const FpPolynomial& a, const FpPolynomial& b)
{
    if (a.modulus() != b.modulus())
        throw InvalidInput("polynomials over different prime fields");
}

}  // namespace

FpPolynomial::FpPolynomial(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs))
{
    if (p < 2 || p >= (std::uint64_t{1} << 32))
        throw std::invalid_argument("FpPolynomial modulus must be a prime below 2^32");
    for (auto& c : c_)
        c %= p_;
    normalize();
}

FpPolynomial FpPolynomial::from_integers(std::uint64_t p, const std::vector<Integer>& coeffs)
{
    std::vector<std::uint64_t> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.push_back(mod_floor_u64(c, p));
    return FpPolynomial(p, std::move(v));
}

FpPolynomial FpPolynomial::from_qpoly(std::uint64_t p, const QPolynomial& f)
{
    std::vector<std::uint64_t> v;
    for (const auto& c : f.coefficients()) {
        std::uint64_t den = mod_floor_u64(c.get_den(), p);
        if (den == 0)
            throw std::domain_error("coefficient denominator divisible by p");
        v.push_back(mod_floor_u64(c.get_num(), p) * fp_inverse(den, p) % p);
    }
    return FpPolynomial(p, std::move(v));
}

FpPolynomial FpPolynomial::x(std::uint64_t p) { return FpPolynomial(p, {0, 1}); }
FpPolynomial FpPolynomial::one(std::uint64_t p) { return FpPolynomial(p, {1}); }

void FpPolynomial::normalize()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

FpPolynomial FpPolynomial::monic() const
{
    if (c_.empty())
        return *this;
    return *this * fp_inverse(c_.back(), p_);
}

FpPolynomial FpPolynomial::derivative() const
{
    std::vector<std::uint64_t> v;
    for (std::size_t i = 1; i < c_.size(); ++i)
        v.push_back(c_[i] * (i % p_) % p_);
    return FpPolynomial(p_, std::move(v));
}

QPolynomial FpPolynomial::lift() const
{
    std::vector<Rational> v;
    for (auto c : c_)
        v.emplace_back(static_cast<unsigned long>(c));
    return QPolynomial(std::move(v));
}

FpPolynomial operator+(const FpPolynomial& a, const FpPolynomial& b)
{
    require_same_field(a, b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return FpPolynomial(a.p_, std::move(v));
}

FpPolynomial operator-(const FpPolynomial& a, const FpPolynomial& b)
{
    require_same_field(a, b);
    std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
    return FpPolynomial(a.p_, std::move(v));
}

FpPolynomial operator*(const FpPolynomial& a, const FpPolynomial& b)
{
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero())
        return FpPolynomial(a.p_, {});
    std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    }
    return FpPolynomial(a.p_, std::move(v));
}

FpPolynomial operator*(const FpPolynomial& a, std::uint64_t c)
{
    std::vector<std::uint64_t> v = a.c_;
    c %= a.p_;
    for (auto& x : v)
        x = x * c % a.p_;
    return FpPolynomial(a.p_, std::move(v));
}

bool operator<(const FpPolynomial& a, const FpPolynomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FpPolynomial::to_string(const char* var) const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (k == 0 || c_[k] != 1)
            out += std::to_string(c_[k]);
        if (k > 0) {
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p)
{
    a %= p;
    if (a == 0)
        throw std::domain_error("zero has no inverse mod p");
    // extended Euclid on signed values
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::domain_error("element not invertible mod p");
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::pair<FpPolynomial, FpPolynomial> divmod(const FpPolynomial& a, const FpPolynomial& b)
{
    require_same_field(a, b);
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    const std::uint64_t p = a.modulus();
    std::vector<std::uint64_t> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (rem.size() < bc.size())
        return {FpPolynomial(p, {}), a};
    std::vector<std::uint64_t> quo(rem.size() - db, 0);
    const std::uint64_t inv = fp_inverse(bc.back(), p);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        std::uint64_t q = rem[k] * inv % p;
        quo[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] = (rem[k - db + j] + p - q * bc[j] % p) % p;
    }
    rem.resize(db);
    return {FpPolynomial(p, std::move(quo)), FpPolynomial(p, std::move(rem))};
}

FpPolynomial operator%(const FpPolynomial& a, const FpPolynomial& b) { return divmod(a, b).second; }

FpPolynomial powmod(const FpPolynomial& base, const Integer& exp, const FpPolynomial& modulus)
{
    if (exp < 0)
        throw std::domain_error("negative exponent");
    FpPolynomial result = FpPolynomial::one(base.modulus()) % modulus;
    FpPolynomial b = base % modulus;
    const std::size_t bits = exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(exp.get_mpz_t(), i))
            result = (result * b) % modulus;
    }
    return result;
}

FpPolynomial fp_gcd(const FpPolynomial& a, const FpPolynomial& b)
{
    require_same_field(a, b);
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("gcd of two zero polynomials");
    FpPolynomial x = a, y = b;
    while (!y.is_zero()) {
        FpPolynomial r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

bool is_separable(const FpPolynomial& f)
{
    if (f.degree() < 1)
        return true;
    return fp_gcd(f, f.derivative()).degree() == 0;
}

namespace {

// f with f' = 0 is g(X^p); over F_p its p-th root is g(X).
FpPolynomial pth_root(const FpPolynomial& f)
{
    const std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < f.coefficients().size(); i += p)
        v.push_back(f.coefficients()[i]);
    return FpPolynomial(p, std::move(v));
}

FpPolynomial exact_div(const FpPolynomial& a, const FpPolynomial& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("inexact polynomial division");
    return q;
}

// g is squarefree, monic, product of irreducibles of degree d.
void equal_degree_split(const FpPolynomial& g, long d, std::mt19937_64& rng, std::vector<FpPolynomial>& out)
{
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const std::uint64_t p = g.modulus();
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    const Integer exponent = (ipow(Integer(static_cast<unsigned long>(p)), d) - 1) / 2;
    for (;;) {
        std::vector<std::uint64_t> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc)
            c = coin(rng);
        FpPolynomial a(p, std::move(rc));
        if (a.degree() < 1)
            continue;
        FpPolynomial b(p, {});
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            FpPolynomial term = a % g;
            b = term;
            for (long i = 1; i < d; ++i) {
                term = (term * term) % g;
                b = b + term;
            }
        } else {
            b = powmod(a, exponent, g) - FpPolynomial::one(p);
        }
        if (b.is_zero())
            continue;
        FpPolynomial h = fp_gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split(exact_div(g, h), d, rng, out);
            return;
        }
    }
}

// Squarefree monic w: distinct-degree then equal-degree splitting.
void split_squarefree(FpPolynomial w, std::mt19937_64& rng, std::vector<FpPolynomial>& out)
{
    const std::uint64_t p = w.modulus();
    const FpPolynomial x = FpPolynomial::x(p);
    FpPolynomial h = x % w;
    for (long d = 1; w.degree() >= 2 * d; ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), w);
        FpPolynomial g = fp_gcd(h - x, w);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            w = exact_div(w, g);
            h = h % w;
        }
    }
    if (w.degree() > 0)
        out.push_back(w.monic());
}

void collect_factors(const FpPolynomial& f, std::mt19937_64& rng, std::vector<FpPolynomial>& out)
{
    if (f.degree() < 1)
        return;
    FpPolynomial df = f.derivative();
    if (df.is_zero()) {
        collect_factors(pth_root(f), rng, out);
        return;
    }
    FpPolynomial g = fp_gcd(f, df);
    FpPolynomial w = exact_div(f, g).monic();
    split_squarefree(w, rng, out);
    // what is left of g only holds factors of multiplicity divisible by p
    for (FpPolynomial c = fp_gcd(g, w); c.degree() > 0; c = fp_gcd(g, w))
        g = exact_div(g, c);
    if (g.degree() > 0)
        collect_factors(pth_root(g.monic()), rng, out);
}

}  // namespace

std::vector<FpPolynomial> distinct_irreducible_factors(const FpPolynomial& f)
{
    if (f.is_zero())
        throw std::domain_error("cannot factor the zero polynomial");
    std::mt19937_64 rng(0x5eed);
    std::vector<FpPolynomial> out;
    collect_factors(f.monic(), rng, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FpExtField::FpExtField(FpPolynomial modulus) : mod_(modulus.monic())
{
    if (mod_.degree() < 1)
        throw std::invalid_argument("extension modulus must have positive degree");
}

FpPolynomial FpExtField::inverse(const FpPolynomial& a) const
{
    const std::uint64_t p = characteristic();
    FpPolynomial r0 = mod_, r1 = reduce(a);
    if (r1.is_zero())
        throw std::domain_error("zero has no inverse");
    FpPolynomial t0(p, {}), t1 = FpPolynomial::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = purefield::divmod(r0, r1);
        FpPolynomial t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.degree() != 0)
        throw std::domain_error("element not invertible: modulus is reducible");
    return reduce(t0 * fp_inverse(r0.leading(), p));
}

FpExtField::Poly FpExtField::normalize(Poly a) const
{
    for (auto& c : a)
        c = reduce(c);
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
    return a;
}

FpExtField::Poly FpExtField::derivative(const Poly& a) const
{
    Poly d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(a[i] * static_cast<std::uint64_t>(i % characteristic()));
    return normalize(std::move(d));
}

std::pair<FpExtField::Poly, FpExtField::Poly> FpExtField::divmod(const Poly& a, const Poly& b) const
{
    Poly rem = normalize(a);
    Poly div = normalize(b);
    if (div.empty())
        throw std::domain_error("polynomial division by zero");
    const std::uint64_t p = characteristic();
    const std::size_t db = div.size() - 1;
    if (rem.size() < div.size())
        return {Poly{}, rem};
    Poly quo(rem.size() - db, FpPolynomial(p, {}));
    const FpPolynomial inv = inverse(div.back());
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero())
            continue;
        FpPolynomial q = mul(rem[k], inv);
        quo[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] = reduce(rem[k - db + j] - mul(q, div[j]));
    }
    rem.resize(db);
    return {normalize(std::move(quo)), normalize(std::move(rem))};
}

FpExtField::Poly FpExtField::gcd(Poly a, Poly b) const
{
    a = normalize(std::move(a));
    b = normalize(std::move(b));
    if (a.empty() && b.empty())
        throw std::domain_error("gcd of two zero polynomials");
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    const FpPolynomial inv = inverse(a.back());
    for (auto& c : a)
        c = mul(c, inv);
    return a;
}

bool FpExtField::is_separable(const Poly& a) const
{
    Poly f = normalize(a);
    if (f.size() <= 2)
        return true;
    return gcd(f, derivative(f)).size() == 1;
}

}  // namespace purefield
