#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "purefield/purebasis.hpp"
#include "support.hpp"

using namespace purefield;
using testing_support::parse_list;

namespace {

PureField field(std::uint64_t n, long m) { return PureField::create(n, Integer(m)); }

std::vector<QPolynomial> basis_of(std::uint64_t n, long m) { return basis_polynomials(integral_basis(field(n, m)).first); }

// det[Tr(b_i b_j)] with traces read off the reduced constant coordinate.
Rational gram_discriminant(const std::vector<QPolynomial>& basis, std::size_t n, const Integer& m)
{
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g(i, j) = testing_support::reduce_mod(basis[i] * basis[j], n, m)[0] * static_cast<unsigned long>(n);
    return testing_support::gauss_det(g);
}

const std::vector<std::string> family_9 = {"1",   "X",   "X^2", "X^3", "X^4", "X^5", "(X^6+X^3+1)/3",
                                         "(X^7+X^4+X)/3", "(X^8+X^7+X^6+X^5+X^4+X^3+X^2+X+1)/9"};

}  // namespace

TEST_CASE("s_value")
{
    CHECK(s_value(3, 28) == 2);
    CHECK(s_value(3, 10) == 1);
    for (long m = -99; m <= 99; m += 4)  // m = 1 mod 4
        if (m != 1)
            CHECK(s_value(2, m) >= 1);
    CHECK_THROWS_WITH_AS(s_value(3, 6), "s undefined; Eisenstein branch applies", std::domain_error);
}

TEST_CASE("h_polynomial")
{
    CHECK(h_polynomial(3, 2, 1, 1) == QPolynomial{1, 0, 0, 1, 0, 0, 1});
    CHECK(h_polynomial(3, 2, 1, 2) == QPolynomial{1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(h_polynomial(5, 2, 7, 0) == QPolynomial{1});
    CHECK(h_polynomial(2, 2, 5, 1) == QPolynomial{5, 0, 1});
    CHECK_THROWS(h_polynomial(3, 2, 1, 3));
    // (X^(p^k) - r^(p^t)) / (X^(p^(k-t)) - r) expanded
    for (unsigned t = 0; t <= 3; ++t) {
        const Integer r = 7;
        const QPolynomial h = h_polynomial(2, 3, r, t);
        std::vector<Rational> num(9), den(ipow_u64(2, 3 - t) + 1);
        num[8] = 1;
        num[0] = -ipow(r, ipow_u64(2, t));
        den.back() = 1;
        den[0] = -r;
        auto [q, rem] = divmod(QPolynomial(num), QPolynomial(den));
        CHECK(rem.is_zero());
        CHECK(h == q);
        CHECK(h.degree() == static_cast<long>(8 - ipow_u64(2, 3 - t)));
    }
}

TEST_CASE("ind_p closed form")
{
    CHECK(ind_p_closed_form(3, 2, 28) == 4);
    CHECK(ind_p_closed_form(3, 2, 10) == 3);
    CHECK(ind_p_closed_form(3, 2, 6) == 0);
    CHECK(ind_p_closed_form(5, 3, 10) == 0);
    CHECK(ind_p_closed_form(2, 1, 5) == 1);
    CHECK(ind_p_closed_form(2, 1, 7) == 0);
}

TEST_CASE("classical small bases")
{
    CHECK(basis_of(2, 5) == parse_list({"1", "(X+1)/2"}));
    CHECK(basis_of(2, -3) == parse_list({"1", "(X+1)/2"}));
    CHECK(basis_of(2, 7) == parse_list({"1", "X"}));
    CHECK(basis_of(3, 10) == parse_list({"1", "X", "(X^2+X+1)/3"}));
    CHECK(basis_of(3, 19) == parse_list({"1", "X", "(X^2+X+1)/3"}));
}

TEST_CASE("degree 9 family basis")
{
    for (long m : {55L, -26L, 109L, -53L})
        CHECK(basis_of(9, m) == parse_list(family_9));
    const auto b = prime_power_basis(3, 2, Integer(-26));
    CHECK(basis_polynomials(b) == parse_list(family_9));
}

TEST_CASE("integral_basis examples")
{
    auto [b2, r2] = integral_basis(field(2, 7));
    CHECK(basis_polynomials(b2) == parse_list({"1", "X"}));
    CHECK(r2.total_index == 1);
    CHECK(r2.field_discriminant == 28);
    CHECK(r2.poly_discriminant == 28);

    auto [b9, r9] = integral_basis(field(9, 55));
    CHECK(r9.total_index == 81);
    CHECK(r9.per_prime.at(3) == 4);

    const auto b53 = basis_of(12, 53);
    CHECK(b53 == parse_list({"1", "X", "X^2", "X^3", "X^4", "X^5", "(X^6+1)/2", "(X^7+X)/2", "(X^8+2X^4+3X^2+4)/6",
                             "(X^9+2X^5+3X^3+4X)/6", "(X^10+2X^6+3X^4+4X^2)/6", "(X^11+2X^7+3X^5+4X^3)/6"}));
    CHECK_THROWS_AS(field(9, 28), InvalidInput);
    CHECK_THROWS_AS(field(1, 5), InvalidInput);
}

TEST_CASE("compose_bases")
{
    const BuildOptions opts;
    // m = 73 = 1 mod 72: the published r = 1 row up to span
    const auto b4 = prime_power_basis(2, 2, Integer(73), opts);
    const auto b3 = prime_power_basis(3, 1, Integer(73), opts);
    const auto c = compose_bases(b4, b3, opts);
    const auto published = parse_list({"1", "X", "X^2", "X^3", "X^4", "X^5", "(X^6+1)/2", "(X^7+X)/2",
                                        "(X^8+4X^4+3X^2+4)/6", "(X^9+3X^6+4X^5+9X^3+4X+3)/12",
                                        "(X^10+3X^7+4X^6+9X^4+4X^2+3X)/12",
                                        "(X^11+X^8+4X^7+9X^5+4X^4+4X^3+9X^2+4)/12"});
    CHECK(c.canonical == canonical_form(12, published));
    CHECK(testing_support::same_span(basis_polynomials(c), published, 12));

    // swapping the roles of the two inputs gives the same module
    const auto swapped = compose_bases(b3, b4, opts);
    CHECK(same_module(c, swapped));

    // two power bases compose to the power basis
    const auto p2 = prime_power_basis(2, 1, Integer(7), opts);
    const auto p3 = prime_power_basis(3, 1, Integer(7), opts);
    CHECK(basis_polynomials(compose_bases(p2, p3, opts)) == parse_list({"1", "X", "X^2", "X^3", "X^4", "X^5"}));

    // n = 6, m = 5: certified by the oracle inside compose_bases
    const auto q = compose_bases(prime_power_basis(2, 1, Integer(5)), prime_power_basis(3, 1, Integer(5)));
    CHECK(q.elements.size() == 6);

    CHECK_THROWS(compose_bases(b4, prime_power_basis(2, 1, Integer(73))));
    CHECK_THROWS(compose_bases(b4, prime_power_basis(3, 1, Integer(77))));
}

TEST_CASE("basis invariants over many fields")
{
    for (std::uint64_t n = 2; n <= 12; ++n) {
        for (long m : testing_support::square_free_values(40)) {
            const PureField f = field(n, m);
            const IntegralBasis b = construct_basis(f);
            const IndexReport rep = index_report(f);
            const auto polys = basis_polynomials(b);
            const Integer mm(m);
            const std::uint64_t bound = n / std::gcd(n, static_cast<std::uint64_t>(std::labs(m)));
            Integer prod = 1;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& e = b.elements[i];
                CHECK(e.degree() == static_cast<long>(i));
                CHECK(e.numerator.leading() == 1);
                CHECK(bound % e.denominator.get_ui() == 0);
                CHECK(gcd(e.denominator, mm) == 1);
                Integer content = e.denominator;
                for (const auto& c : e.numerator.coefficients())
                    content = gcd(content, c.get_num());
                CHECK(content == 1);
                prod *= e.denominator;
            }
            // transition matrix is triangular with diagonal 1/d_i
            CHECK(prod == rep.total_index);
            const Integer disc = rep.poly_discriminant / (prod * prod);
            CHECK(disc == rep.field_discriminant);
            CHECK(rep.field_discriminant * rep.total_index * rep.total_index == rep.poly_discriminant);
            if (n <= 8)
                CHECK(gram_discriminant(polys, n, mm) == Rational(rep.field_discriminant));
            // per-prime ledger: total index = prod p^ind_p
            Integer total = 1;
            for (const auto& [p, e] : rep.per_prime)
                total *= ipow(Integer(static_cast<unsigned long>(p)), e);
            CHECK(total == rep.total_index);
        }
    }
}

TEST_CASE("prime power denominator ledger")
{
    for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
        for (long m : testing_support::square_free_values(120)) {
            const auto b = construct_basis(field(ipow_u64(p, k), m));
            Integer prod = 1;
            for (const auto& e : b.elements)
                prod *= e.denominator;
            CHECK(prod == ipow(Integer(static_cast<unsigned long>(p)), ind_p_closed_form(p, k, m)));
        }
    }
}

TEST_CASE("ring closure checked test-side")
{
    for (std::uint64_t n : {4ULL, 6ULL, 8ULL, 9ULL, 12ULL}) {
        for (long m : {17L, -19L, 73L, 53L, -71L, 10L, 5L}) {
            const auto polys = basis_of(n, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    const auto coords = testing_support::reduce_mod(polys[i] * polys[j], n, Integer(m));
                    CHECK(testing_support::triangular_contains(polys, QPolynomial(coords), n));
                }
        }
    }
}

TEST_CASE("index multiplicativity")
{
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> splits{{2, 3}, {4, 3}, {2, 5}, {3, 5}, {2, 9}, {8, 3}, {4, 9}};
    for (const auto& [n1, n2] : splits)
        for (long m : testing_support::square_free_values(60)) {
            const Integer i1 = index_report(field(n1, m)).total_index;
            const Integer i2 = index_report(field(n2, m)).total_index;
            CHECK(index_report(field(n1 * n2, m)).total_index == ipow(i1, n2) * ipow(i2, n1));
        }
}

TEST_CASE("symmetric representatives keep the module")
{
    const auto b = construct_basis(field(3, 17));
    CHECK(basis_polynomials(b) == parse_list({"1", "X", "(X^2+8X+64)/3"}));
    const auto sym = symmetric_representatives(b.elements);
    std::vector<QPolynomial> polys;
    for (const auto& e : sym)
        polys.push_back(e.polynomial());
    CHECK(polys == parse_list({"1", "X", "(X^2-X+1)/3"}));
    CHECK(canonical_form(3, sym) == b.canonical);
}

TEST_CASE("canonical form detects different modules")
{
    const auto b = construct_basis(field(2, 5));
    CHECK_FALSE(b.canonical == canonical_form(2, parse_list({"1", "X"})));
    CHECK(b.canonical == canonical_form(2, parse_list({"1", "(X-1)/2"})));
}
