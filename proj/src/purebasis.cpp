#include "purefield/purebasis.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "purefield/newton.hpp"

namespace purefield {

// ---- field value types ----

PureField::PureField(std::uint64_t n, Integer m) : n_(n), m_(std::move(m))
{
    for (const auto& [p, k] : factor_u64(n))
        factors_.push_back({p, k});
}

PureField PureField::create(std::uint64_t n, const Integer& m, std::uint64_t square_free_bound, bool allow_unknown)
{
    if (n < 2)
        throw InvalidInput("degree n must be at least 2, got " + std::to_string(n));
    const SquareFreeResult sf = square_free_check(m, square_free_bound);
    switch (sf.status) {
    case SquareFreeStatus::SquareFree:
        break;
    case SquareFreeStatus::NotSquareFree:
        throw InvalidInput("m = " + to_string(m) + " is not square-free (" + std::to_string(sf.witness) +
                           "^2 divides it)");
    case SquareFreeStatus::Unknown:
        if (!allow_unknown)
            throw ResourceBound("cannot decide square-freeness of m = " + to_string(m) +
                                " by trial division up to " + std::to_string(square_free_bound) +
                                "; unfactored cofactor " + to_string(sf.cofactor));
        break;
    }
    return PureField(n, m);
}

BasisElement BasisElement::from_polynomial(const QPolynomial& poly)
{
    BasisElement e;
    e.denominator = poly.denominator();
    e.numerator = QPolynomial::from_integers(poly.scaled_numerator());
    return e;
}

QPolynomial BasisElement::polynomial() const { return numerator * make_rational(1, denominator); }

CanonicalForm canonical_form(std::uint64_t n, const std::vector<QPolynomial>& generators)
{
    if (generators.size() != n)
        throw std::invalid_argument("canonical form needs exactly n generators");
    CanonicalForm cf;
    for (const auto& g : generators) {
        if (g.degree() >= static_cast<long>(n))
            throw std::invalid_argument("generator degree must be below n");
        cf.den = lcm(cf.den, g.denominator());
    }
    IntMatrix rows(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational v = generators[i].coeff(j) * cf.den;
            rows(i, j) = v.get_num();
        }
    cf.hnf = hnf(rows);
    return cf;
}

CanonicalForm canonical_form(std::uint64_t n, const std::vector<BasisElement>& elements)
{
    std::vector<QPolynomial> polys;
    for (const auto& e : elements)
        polys.push_back(e.polynomial());
    return canonical_form(n, polys);
}

Integer poly_discriminant(std::uint64_t n, const Integer& m)
{
    // (-1)^(n(n-1)/2) n^n (-m)^(n-1)
    Integer d = ipow(Integer(static_cast<unsigned long>(n)), static_cast<unsigned long>(n)) *
                ipow(Integer(-m), static_cast<unsigned long>(n - 1));
    if ((n * (n - 1) / 2) % 2 == 1)
        d = -d;
    return d;
}

std::string to_string(IndexSource s)
{
    return s == IndexSource::Eisenstein ? "eisenstein" : "closed-form";
}

// ---- closed forms ----

unsigned s_value(std::uint64_t p, const Integer& m)
{
    const Integer prime(static_cast<unsigned long>(p));
    if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t()))
        throw std::domain_error("s undefined; Eisenstein branch applies");
    const Integer v = ipow(m, static_cast<unsigned long>(p)) - m;
    return vp_int(prime, v) - 1;
}

QPolynomial h_polynomial(std::uint64_t p, unsigned k, const Integer& r, unsigned t)
{
    if (t > k)
        throw std::invalid_argument("h_polynomial needs t <= k");
    const Integer prime(static_cast<unsigned long>(p));
    if (mpz_divisible_p(r.get_mpz_t(), prime.get_mpz_t()))
        throw std::invalid_argument("h_polynomial needs p not dividing r");
    const std::uint64_t pk = ipow_u64(p, k);
    const std::uint64_t step = ipow_u64(p, k - t);
    const std::uint64_t terms = ipow_u64(p, t);
    std::vector<Rational> c(pk - step + 1);
    Integer rp = 1;
    for (std::uint64_t i = 0; i < terms; ++i) {
        c[pk - (i + 1) * step] = rp;
        rp *= r;
    }
    return QPolynomial(std::move(c));
}

std::uint64_t ind_p_closed_form(std::uint64_t p, unsigned k, const Integer& m)
{
    const Integer prime(static_cast<unsigned long>(p));
    if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t()))
        return 0;
    const unsigned s = s_value(p, m);
    const std::uint64_t pk = ipow_u64(p, k);
    if (s <= k)
        return (pk - ipow_u64(p, k - s)) / (p - 1);
    return (pk - 1) / (p - 1);
}

IndexReport index_report(const PureField& field)
{
    IndexReport rep;
    const std::uint64_t n = field.n();
    const Integer& m = field.m();
    Integer total = 1;
    std::uint64_t done = 1;
    for (const auto& [p, k] : field.factorization()) {
        const std::uint64_t pk = ipow_u64(p, k);
        const Integer prime(static_cast<unsigned long>(p));
        const bool eisenstein = mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t()) != 0;
        const std::uint64_t local = ind_p_closed_form(p, k, m);
        rep.per_prime[p] = local * (n / pk);
        rep.source[p] = eisenstein ? IndexSource::Eisenstein : IndexSource::ClosedForm;
        // ind(n1 n2) = ind(n1)^n2 * ind(n2)^n1 for the folded part n1 = done
        const Integer part = ipow(prime, static_cast<unsigned long>(local));
        total = ipow(total, static_cast<unsigned long>(pk)) * ipow(part, static_cast<unsigned long>(done));
        done *= pk;
    }
    Integer product = 1;
    for (const auto& [p, e] : rep.per_prime)
        product *= ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(e));
    if (product != total)
        throw std::logic_error("index recursion disagrees with the per-prime product");
    rep.total_index = total;
    rep.poly_discriminant = poly_discriminant(n, m);
    const Integer sq = total * total;
    if (!mpz_divisible_p(rep.poly_discriminant.get_mpz_t(), sq.get_mpz_t()))
        throw std::logic_error("squared index does not divide the polynomial discriminant");
    rep.field_discriminant = rep.poly_discriminant / sq;

    std::vector<Rational> f(n + 1);
    f[0] = -m;
    f[n] = 1;
    const QPolynomial minpoly(std::move(f));
    for (const auto& [p, k] : field.factorization()) {
        (void)k;
        const newton::IndexBound b = newton::index_lower_bound(minpoly, p);
        rep.polygon[p] = {b.bound, b.exact};
        const std::uint64_t ind = rep.per_prime[p];
        if (b.exact ? b.bound != ind : b.bound > ind)
            throw std::logic_error("Newton polygon bound contradicts the closed-form index at p = " +
                                   std::to_string(p));
    }
    return rep;
}

// ---- construction ----

namespace {

IntegralBasis make_basis(const PureField& field, std::vector<QPolynomial> polys)
{
    IntegralBasis b{field, {}, {}};
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].degree() != static_cast<long>(i))
            throw std::logic_error("basis element " + std::to_string(i) + " has the wrong degree");
        b.elements.push_back(BasisElement::from_polynomial(polys[i]));
    }
    b.canonical = canonical_form(field.n(), polys);
    return b;
}

IntegralBasis build_prime_power(const PureField& field, std::uint64_t p, unsigned k)
{
    const Integer& m = field.m();
    const std::uint64_t pk = ipow_u64(p, k);
    std::vector<QPolynomial> polys;
    const Integer prime(static_cast<unsigned long>(p));
    if (mpz_divisible_p(m.get_mpz_t(), prime.get_mpz_t())) {
        for (std::uint64_t j = 0; j < pk; ++j)
            polys.push_back(QPolynomial::monomial(1, j));
        return make_basis(field, std::move(polys));
    }
    const Integer r = mod_floor(m, ipow(prime, k + 1));
    const unsigned tmax = std::min(s_value(p, m), k);
    for (unsigned t = 0; t <= tmax; ++t) {
        const QPolynomial h = h_polynomial(p, k, r, t) * make_rational(1, ipow(prime, t));
        const std::uint64_t count = t < tmax ? ipow_u64(p, k - t) - ipow_u64(p, k - t - 1) : ipow_u64(p, k - t);
        for (std::uint64_t j = 0; j < count; ++j)
            polys.push_back(h.shift(j));
    }
    return make_basis(field, std::move(polys));
}

IntegralBasis build_composite(const IntegralBasis& first, const IntegralBasis& second)
{
    const std::uint64_t n1 = first.field.n();
    const std::uint64_t n2 = second.field.n();
    if (!(first.field.m() == second.field.m()))
        throw std::invalid_argument("compose_bases needs the same m on both sides");
    if (std::gcd(n1, n2) != 1)
        throw std::invalid_argument("compose_bases needs coprime degrees");
    for (const auto* b : {&first, &second})
        for (std::size_t i = 0; i < b->elements.size(); ++i)
            if (b->elements[i].degree() != static_cast<long>(i))
                throw std::invalid_argument("compose_bases needs element i of degree i");
    const std::uint64_t n = n1 * n2;
    const PureField field = PureField::create(n, first.field.m(), 1, true);

    std::vector<QPolynomial> polys;
    for (std::uint64_t k = 0; k < n; ++k) {
        const QPolynomial psi = first.elements[k / n2].polynomial().substitute_power(n2).shift(k % n2);
        const QPolynomial omega = second.elements[k / n1].polynomial().substitute_power(n1).shift(k % n1);
        const Integer u = psi.denominator();
        const Integer v = omega.denominator();
        const std::vector<Integer> a = psi.scaled_numerator();
        const std::vector<Integer> b = omega.scaled_numerator();
        const Integer uv = u * v;
        // C = A (mod u), C = B (mod v): C = A + u * ((B - A) * u^-1 mod v)
        Integer u_inv;
        mpz_invert(u_inv.get_mpz_t(), Integer(u % v).get_mpz_t(), v.get_mpz_t());
        if (v == 1)
            u_inv = 0;
        std::vector<Rational> c(k + 1);
        for (std::uint64_t i = 0; i <= k; ++i) {
            const Integer ai = i < a.size() ? a[i] : Integer(0);
            const Integer bi = i < b.size() ? b[i] : Integer(0);
            Integer ci = mod_floor(ai + u * mod_floor((bi - ai) * u_inv, v), uv);
            if (i == k && ci == 0)
                ci = uv;
            c[i] = make_rational(ci, uv);
        }
        polys.emplace_back(std::move(c));
    }
    return make_basis(field, std::move(polys));
}

void require_certified(const IntegralBasis& basis, const IndexReport& report, const BuildOptions& options,
                       oracle::CertificationReport* out = nullptr)
{
    oracle::CertificationReport cert = oracle::certify(basis, report, options.certify);
    if (!cert.certified())
        throw CertificationFailure("constructed basis for n = " + std::to_string(basis.field.n()) +
                                       ", m = " + to_string(basis.field.m()) + " failed certification",
                                   std::move(cert));
    if (out)
        *out = std::move(cert);
}

}  // namespace

IntegralBasis prime_power_basis(std::uint64_t p, unsigned k, const Integer& m, const BuildOptions& options)
{
    if (!is_prime_u64(p) || k == 0)
        throw InvalidInput("prime_power_basis needs a prime p and k >= 1");
    const PureField field = PureField::create(ipow_u64(p, k), m);
    IntegralBasis b = build_prime_power(field, p, k);
    require_certified(b, index_report(field), options);
    return b;
}

IntegralBasis compose_bases(const IntegralBasis& first, const IntegralBasis& second, const BuildOptions& options)
{
    IntegralBasis b = build_composite(first, second);
    require_certified(b, index_report(b.field), options);
    return b;
}

IntegralBasis construct_basis(const PureField& field)
{
    std::optional<IntegralBasis> acc;
    for (const auto& [p, k] : field.factorization()) {
        const PureField part = PureField::create(ipow_u64(p, k), field.m(), 1, true);
        IntegralBasis b = build_prime_power(part, p, k);
        acc = acc ? build_composite(*acc, b) : std::move(b);
    }
    acc->field = field;
    return std::move(*acc);
}

CertifiedBasis certified_integral_basis(const PureField& field, const BuildOptions& options)
{
    CertifiedBasis out{construct_basis(field), index_report(field), {}};
    require_certified(out.basis, out.report, options, &out.certification);
    return out;
}

std::pair<IntegralBasis, IndexReport> integral_basis(const PureField& field, const BuildOptions& options)
{
    CertifiedBasis c = certified_integral_basis(field, options);
    return {std::move(c.basis), std::move(c.report)};
}

bool same_module(const IntegralBasis& a, const IntegralBasis& b)
{
    return a.field.n() == b.field.n() && a.canonical == b.canonical;
}

std::vector<QPolynomial> basis_polynomials(const IntegralBasis& basis)
{
    std::vector<QPolynomial> out;
    for (const auto& e : basis.elements)
        out.push_back(e.polynomial());
    return out;
}

std::vector<BasisElement> symmetric_representatives(const std::vector<BasisElement>& elements)
{
    std::vector<BasisElement> out;
    for (const auto& e : elements) {
        if (e.denominator == 1 || e.numerator.is_zero()) {
            out.push_back(e);
            continue;
        }
        const Integer& d = e.denominator;
        std::vector<Integer> c;
        const auto& coeffs = e.numerator.coefficients();
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Integer v = coeffs[i].get_num();
            if (i + 1 < coeffs.size()) {
                v = mod_floor(v, d);
                if (2 * v > d)
                    v -= d;
            }
            c.push_back(v);
        }
        out.push_back(BasisElement::from_polynomial(QPolynomial::from_integers(c) * make_rational(1, d)));
    }
    return out;
}

}  // namespace purefield
