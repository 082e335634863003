#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "purefield/oracle.hpp"
#include "purefield/purebasis.hpp"
#include "support.hpp"

using namespace purefield;
using namespace purefield::oracle;
using testing_support::parse_list;
using Status = MaximalityResult::Status;

namespace {

PureField field(std::uint64_t n, long m) { return PureField::create(n, Integer(m)); }

IntegralBasis make(const PureField& f, const std::vector<QPolynomial>& polys)
{
    IntegralBasis b{f, {}, {}};
    for (const auto& q : polys)
        b.elements.push_back(BasisElement::from_polynomial(q));
    b.canonical = canonical_form(f.n(), b.elements);
    return b;
}

IntegralBasis power_basis(const PureField& f)
{
    std::vector<QPolynomial> polys;
    for (std::size_t i = 0; i < f.n(); ++i)
        polys.push_back(QPolynomial{1}.shift(i));
    return make(f, polys);
}

CertifyOptions serial()
{
    CertifyOptions o;
    o.threads = 1;
    return o;
}

// Test-side maximality at p: some (sum c_i b_i)/p with c not all zero is integral.
bool brute_force_not_maximal(const std::vector<QPolynomial>& basis, std::uint64_t p, std::size_t n, const Integer& m)
{
    std::vector<std::uint64_t> c(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && ++c[i] == p)
            c[i++] = 0;
        if (i == n)
            return false;
        QPolynomial x;
        for (std::size_t j = 0; j < n; ++j)
            x += basis[j] * QPolynomial::constant(make_rational(static_cast<long>(c[j]), static_cast<long>(p)));
        if (testing_support::integral_element(x, n, m))
            return true;
    }
}

}  // namespace

TEST_CASE("field element arithmetic")
{
    const PureField f = field(3, 2);
    const auto a = FieldElement::from_polynomial(f, QPolynomial{0, 1});
    const auto a2 = mul(a, a);
    CHECK(a2.coords == std::vector<Rational>{0, 0, 1});
    CHECK(mul(a2, a).coords == std::vector<Rational>{2, 0, 0});
    // reduction of X^4 happens on construction
    CHECK(FieldElement::from_polynomial(f, QPolynomial{0, 0, 0, 0, 1}).coords == std::vector<Rational>{0, 2, 0});
    CHECK(trace(FieldElement::from_polynomial(f, QPolynomial{5, 1, 1})) == 15);
    CHECK(dual_basis_coords(a) == std::vector<Rational>{0, 0, 6});
    CHECK_THROWS_AS(mul(a, FieldElement::from_polynomial(field(3, 3), QPolynomial{1})), InvalidInput);
    CHECK(charpoly(multiplication_matrix(a)) == QPolynomial{-2, 0, 0, 1});
}

TEST_CASE("charpoly of alpha is X^n - m")
{
    for (std::uint64_t n = 2; n <= 9; ++n)
        for (long m : {2L, -3L, 10L, 55L}) {
            const auto a = FieldElement::from_polynomial(field(n, m), QPolynomial{0, 1});
            std::vector<Rational> expect(n + 1);
            expect[0] = -m;
            expect[n] = 1;
            CHECK(charpoly(multiplication_matrix(a)) == QPolynomial(expect));
        }
}

TEST_CASE("is_algebraic_integer examples")
{
    const PureField q2 = field(3, 2);
    CHECK_FALSE(is_algebraic_integer(FieldElement::from_polynomial(q2, parse_list({"(X+1)/3"})[0])));
    CHECK(is_algebraic_integer(FieldElement::from_polynomial(field(3, 10), parse_list({"(X^2+X+1)/3"})[0])));
    CHECK(is_algebraic_integer(FieldElement::from_polynomial(field(2, 5), parse_list({"(X+1)/2"})[0])));
    CHECK_FALSE(is_algebraic_integer(FieldElement::from_polynomial(field(2, 7), parse_list({"(X+1)/2"})[0])));
    CHECK(is_algebraic_integer(FieldElement::from_polynomial(field(12, 53), parse_list({"(X^8+2X^4+3X^2+4)/6"})[0])));
}

TEST_CASE("is_algebraic_integer agrees with Leverrier on random elements")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const std::uint64_t n = 2 + rng() % 6;
        const long ms[] = {2, -2, 3, 5, -7, 10, 17, 19, -26};
        const long m = ms[rng() % 9];
        const long den = 1 + static_cast<long>(rng() % 6);
        std::vector<Rational> c(n);
        for (auto& v : c)
            v = make_rational(static_cast<long>(rng() % 13) - 6, den);
        const QPolynomial poly(c);
        const auto e = FieldElement::from_polynomial(field(n, m), poly);
        const bool integral = testing_support::integral_element(poly, n, Integer(m));
        CHECK(is_algebraic_integer(e) == integral);
        CHECK(charpoly(multiplication_matrix(e)) == testing_support::element_charpoly(poly, n, Integer(m)));
        // integral elements pair integrally with the order Z[alpha]
        if (integral)
            for (const auto& t : dual_basis_coords(e))
                CHECK(t.get_den() == 1);
    }
}

TEST_CASE("basis discriminant")
{
    CHECK(basis_discriminant(power_basis(field(2, 7))) == 28);
    CHECK(basis_discriminant(power_basis(field(2, 5))) == 20);
    CHECK(basis_discriminant(power_basis(field(3, 10))) == -2700);
    CHECK(basis_discriminant(construct_basis(field(3, 10))) == -300);
    CHECK(basis_discriminant(construct_basis(field(2, 5))) == 5);
    // non-triangular basis: Gram determinant only
    const PureField f = field(2, 5);
    CHECK(basis_discriminant(make(f, {QPolynomial{1, 1}, QPolynomial{0, 1}})) == 20);
}

TEST_CASE("structure constants")
{
    const auto sc = structure_constants(construct_basis(field(2, 5)));
    REQUIRE(sc.closed);
    // ((1+X)/2)^2 = 1 + (1+X)/2 when X^2 = 5
    CHECK(sc.table[1][1] == std::vector<Integer>{1, 1});
    CHECK_FALSE(structure_constants(make(field(2, 7), parse_list({"1", "X/2"}))).closed);
}

TEST_CASE("maximality counterexamples")
{
    const auto r5 = p_maximality_enum(power_basis(field(2, 5)), 2);
    CHECK(r5.status == Status::CounterexampleFound);
    REQUIRE(r5.counterexample.has_value());
    CHECK(testing_support::integral_element(r5.counterexample->polynomial(), 2, Integer(5)));

    const auto r10 = p_maximality_enum(power_basis(field(3, 10)), 3);
    CHECK(r10.status == Status::CounterexampleFound);
    CHECK(testing_support::integral_element(r10.counterexample->polynomial(), 3, Integer(10)));

    CHECK(p_maximality_enum(power_basis(field(2, 7)), 2).status == Status::Proved);
    CHECK(p_maximality_enum(construct_basis(field(3, 10)), 3).status == Status::Proved);

    const auto big = p_maximality_enum(power_basis(field(9, 55)), 3, 1);
    CHECK(big.status == Status::Skipped);
    CHECK(big.reason.find("budget") != std::string::npos);
    // 11^11 candidates, handled through the filtered subspace
    const auto wide = p_maximality_enum(construct_basis(field(11, 13)), 11, 1000);
    CHECK(wide.status == Status::Proved);
    CHECK(wide.candidates == 285311670610ULL);
    CHECK(wide.exact_checks < 1000);
    const auto open = p_maximality_enum(make(field(2, 7), parse_list({"1", "X/2"})), 2);
    CHECK(open.status == Status::Skipped);
}

TEST_CASE("enumeration agrees with test-side brute force")
{
    for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 6ULL})
        for (long m : {2L, 5L, -3L, 10L, 17L, -26L, 19L, 73L})
            for (std::uint64_t p : {2ULL, 3ULL}) {
                if (n % p != 0 || !testing_support::naive_square_free(m))
                    continue;
                const PureField f = field(n, m);
                for (const auto& b : {power_basis(f), construct_basis(f)}) {
                    const bool brute = brute_force_not_maximal(basis_polynomials(b), p, n, Integer(m));
                    const auto r = p_maximality_enum(b, p, default_enum_budget, 1);
                    CHECK(r.status == (brute ? Status::CounterexampleFound : Status::Proved));
                }
            }
}

TEST_CASE("threaded and serial enumeration agree")
{
    const auto b = power_basis(field(9, 55));
    const auto s = p_maximality_enum(b, 3, default_enum_budget, 1);
    const auto t = p_maximality_enum(b, 3, default_enum_budget, 4);
    CHECK(s.status == Status::CounterexampleFound);
    CHECK(t.status == s.status);
    REQUIRE(s.counterexample.has_value());
    REQUIRE(t.counterexample.has_value());
    CHECK(s.counterexample->coords == t.counterexample->coords);
}

TEST_CASE("certify on constructed bases")
{
    for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 6ULL, 8ULL, 9ULL, 12ULL})
        for (long m : {5L, -3L, 17L, 53L, 55L, -26L}) {
            const PureField f = field(n, m);
            const auto rep = certify(construct_basis(f), index_report(f), serial());
            CHECK(rep.certified());
            CHECK_FALSE(rep.any_skipped());
            CHECK(rep.disc_match);
            CHECK(rep.discriminant == Rational(index_report(f).field_discriminant));
        }
}

TEST_CASE("certify failure modes")
{
    const PureField f = field(2, 5);
    const IndexReport rep = index_report(f);

    const auto weak = certify(power_basis(f), rep, serial());
    CHECK(weak.all_integral());
    CHECK(weak.ring_closed);
    CHECK_FALSE(weak.disc_match);
    CHECK(weak.maximality.at(2).status == Status::CounterexampleFound);
    CHECK_FALSE(weak.certified());

    const auto bad = certify(make(f, parse_list({"1", "X/2"})), rep, serial());
    CHECK_FALSE(bad.all_integral());
    CHECK_FALSE(bad.certified());

    CertifyOptions off = serial();
    off.check_maximality = false;
    const auto skipped = certify(construct_basis(f), rep, off);
    CHECK(skipped.any_skipped());
    CHECK(skipped.certified());
    CHECK(to_string(Status::Skipped) == "skipped");
    CHECK(to_string(Status::Proved) == "proved");
    CHECK(to_string(Status::CounterexampleFound) == "counterexample");
}

TEST_CASE("certify rejects single-coefficient mutations")
{
    for (const auto& [n, m] : std::vector<std::pair<std::uint64_t, long>>{{2, 5}, {3, 10}, {4, 17}, {6, 7}, {9, 55}}) {
        const PureField f = field(n, m);
        const IndexReport rep = index_report(f);
        const IntegralBasis good = construct_basis(f);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& e = good.elements[i];
            if (e.denominator == 1)
                continue;
            for (std::size_t j = 0; j < i; ++j) {
                IntegralBasis mutated = good;
                std::vector<Rational> c = e.polynomial().coefficients();
                c[j] += Rational(1, e.denominator);
                mutated.elements[i] = BasisElement::from_polynomial(QPolynomial(c));
                mutated.canonical = canonical_form(n, mutated.elements);
                CHECK_FALSE(certify(mutated, rep, serial()).certified());
            }
            // dropping a factor of the denominator loses maximality
            IntegralBasis coarse = good;
            const long q = e.denominator % 2 == 0 ? 2 : 3;
            coarse.elements[i] = BasisElement::from_polynomial(e.polynomial() * QPolynomial::constant(Rational(q)));
            coarse.canonical = canonical_form(n, coarse.elements);
            CHECK_FALSE(certify(coarse, rep, serial()).certified());
        }
    }
}
