#include "purefield/qpoly.hpp"

#include <algorithm>
#include <limits>

namespace purefield {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

QPolynomial::QPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::from_integers(const std::vector<Integer>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.emplace_back(c);
    return QPolynomial(std::move(v));
}

void QPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational QPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& QPolynomial::leading() const
{
    if (coeffs_.empty())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

bool QPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool QPolynomial::has_integer_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integral(c); });
}

Integer QPolynomial::denominator() const
{
    Integer d = 1;
    for (const auto& c : coeffs_)
        d = lcm(d, c.get_den());
    return d;
}

std::vector<Integer> QPolynomial::scaled_numerator() const
{
    Integer d = denominator();
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(c.get_num() * (d / c.get_den()));
    return out;
}

QPolynomial QPolynomial::derivative() const
{
    std::vector<Rational> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::substitute_power(std::size_t e) const
{
    if (e == 0)
        throw std::invalid_argument("substitute_power needs e >= 1");
    if (coeffs_.empty())
        return {};
    std::vector<Rational> v((coeffs_.size() - 1) * e + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i * e] = coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::shift(std::size_t j) const
{
    if (coeffs_.empty())
        return {};
    std::vector<Rational> v(j);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return QPolynomial(std::move(v));
}

Rational QPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string(const char* var) const
{
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? " - " : " + ");
        bool unit = (mag == 1);
        if (k == 0 || !unit)
            out += purefield::to_string(mag);
        if (k > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t db = bc.size() - 1;
    if (rem.size() < bc.size())
        return {QPolynomial{}, a};
    std::vector<Rational> quo(rem.size() - db);
    const Rational inv_lead = 1 / bc.back();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k] == 0)
            continue;
        Rational q = rem[k] * inv_lead;
        quo[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j)
            rem[k - db + j] -= q * bc[j];
    }
    rem.resize(db);
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

long vp_poly(const Integer& p, const QPolynomial& f)
{
    if (f.is_zero())
        throw std::domain_error("valuation of the zero polynomial undefined");
    long best = std::numeric_limits<long>::max();
    for (const auto& c : f.coefficients())
        if (c != 0)
            best = std::min(best, vp_rational(p, c));
    return best;
}

}  // namespace purefield
