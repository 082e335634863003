#include "purefield/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace purefield::newton {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

void require_prime(std::uint64_t p)
{
    if (!is_prime_u64(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

}  // namespace

std::string FpExtPolynomial::to_string() const
{
    if (coeffs.empty())
        return "0";
    const bool prime_field = phi_bar.degree() <= 1;
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const FpPolynomial& c = coeffs[k];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += "+";
        const bool constant = c.degree() == 0;
        if (constant) {
            if (k == 0 || c.coeff(0) != 1)
                out += std::to_string(c.coeff(0));
        } else {
            out += "(" + c.to_string("x") + ")";
        }
        if (k > 0) {
            out += "Y";
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    if (!prime_field)
        out += " over F_" + std::to_string(p) + "[x]/(" + phi_bar.to_string("x") + ")";
    return out;
}

PhiDevelopment phi_development(const QPolynomial& f, const QPolynomial& phi, std::uint64_t p)
{
    require_prime(p);
    if (!f.has_integer_coefficients() || !phi.has_integer_coefficients())
        throw std::invalid_argument("phi-adic development needs integer coefficients");
    if (!phi.is_monic())
        throw std::invalid_argument("phi must be monic");
    if (phi.degree() < 1)
        throw std::invalid_argument("phi must have positive degree");
    PhiDevelopment dev{f, phi, p, {}, {}};
    const Integer prime(static_cast<unsigned long>(p));
    QPolynomial rest = f;
    while (!rest.is_zero()) {
        auto [quo, rem] = divmod(rest, phi);
        dev.valuations.push_back(rem.is_zero() ? std::nullopt : std::optional<long>(vp_poly(prime, rem)));
        dev.coeffs.push_back(std::move(rem));
        rest = std::move(quo);
    }
    return dev;
}

FpExtPolynomial residual_polynomial(const PhiDevelopment& dev, const Side& side)
{
    const std::uint64_t p = dev.p;
    FpExtPolynomial r;
    r.p = p;
    r.phi_bar = FpPolynomial::from_qpoly(p, dev.phi);
    const Integer prime(static_cast<unsigned long>(p));
    for (long j = 0; j <= side.degree; ++j) {
        const long i = side.start.x + j * side.e;
        const long on_side = side.start.y - j * side.h;
        const auto idx = static_cast<std::size_t>(i);
        FpPolynomial c(p, {});
        if (idx < dev.coeffs.size() && dev.valuations[idx] && *dev.valuations[idx] == on_side) {
            const Integer scale = ipow(prime, static_cast<unsigned long>(on_side));
            std::vector<Integer> reduced;
            for (const auto& a : dev.coeffs[idx].coefficients())
                reduced.push_back(a.get_num() / scale);
            c = FpPolynomial::from_integers(p, reduced) % r.phi_bar;
        }
        r.coeffs.push_back(std::move(c));
    }
    return r;
}

bool is_separable(const FpExtPolynomial& r)
{
    FpExtField field(r.phi_bar);
    return field.is_separable(r.coeffs);
}

NewtonPolygon principal_polygon(const PhiDevelopment& dev)
{
    NewtonPolygon poly;
    for (std::size_t i = 0; i < dev.valuations.size(); ++i)
        if (dev.valuations[i])
            poly.points.push_back({static_cast<long>(i), *dev.valuations[i]});

    std::vector<LatticePoint> hull;
    for (const auto& pt : poly.points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    std::size_t last = 0;
    while (last + 1 < hull.size() && hull[last + 1].y < hull[last].y)
        ++last;
    if (last == 0)
        return poly;
    poly.vertices.assign(hull.begin(), hull.begin() + static_cast<long>(last) + 1);
    for (std::size_t k = 0; k < last; ++k) {
        Side s;
        s.start = poly.vertices[k];
        s.end = poly.vertices[k + 1];
        s.length = s.end.x - s.start.x;
        const long drop = s.start.y - s.end.y;
        const long g = std::gcd(s.length, drop);
        s.h = drop / g;
        s.e = s.length / g;
        s.degree = g;
        s.residual = residual_polynomial(dev, s);
        s.separable = is_separable(s.residual);
        poly.sides.push_back(std::move(s));
    }
    return poly;
}

std::uint64_t phi_index(const NewtonPolygon& polygon, std::uint64_t degphi)
{
    std::uint64_t count = 0;
    for (const auto& s : polygon.sides) {
        // abscissae in (start.x, end.x]; the first side also owns start.x
        long from = (&s == &polygon.sides.front()) ? s.start.x : s.start.x + 1;
        from = std::max(from, 1L);
        for (long x = from; x <= s.end.x; ++x) {
            // floor of the side's ordinate at x
            const long num = s.start.y * s.e - (x - s.start.x) * s.h;
            const long y = num >= 0 ? num / s.e : -((-num + s.e - 1) / s.e);
            if (y > 0)
                count += static_cast<std::uint64_t>(y);
        }
    }
    return count * degphi;
}

bool is_regular(const PhiDevelopment& dev)
{
    const NewtonPolygon poly = principal_polygon(dev);
    return std::all_of(poly.sides.begin(), poly.sides.end(), [](const Side& s) { return s.separable; });
}

IndexBound index_lower_bound(const QPolynomial& f, std::uint64_t p)
{
    require_prime(p);
    if (!f.is_monic() || !f.has_integer_coefficients())
        throw std::invalid_argument("index_lower_bound needs a monic integer polynomial");
    IndexBound out;
    const FpPolynomial reduced = FpPolynomial::from_qpoly(p, f);
    for (const auto& factor : distinct_irreducible_factors(reduced)) {
        FactorContribution fc;
        fc.phi = factor.lift();
        const PhiDevelopment dev = phi_development(f, fc.phi, p);
        fc.polygon = principal_polygon(dev);
        fc.index = phi_index(fc.polygon, static_cast<std::uint64_t>(fc.phi.degree()));
        fc.regular = std::all_of(fc.polygon.sides.begin(), fc.polygon.sides.end(),
                                 [](const Side& s) { return s.separable; });
        out.bound += fc.index;
        out.exact = out.exact && fc.regular;
        out.factors.push_back(std::move(fc));
    }
    return out;
}

std::string render_ascii(const NewtonPolygon& polygon)
{
    if (polygon.points.empty())
        return "(no points)\n";
    long max_x = 0, max_y = 0;
    for (const auto& pt : polygon.points) {
        max_x = std::max(max_x, pt.x);
        max_y = std::max(max_y, pt.y);
    }
    if (max_x > 160 || max_y > 60)
        return "(polygon too large to draw)\n";

    auto under_polygon = [&](long x, long y) {
        for (const auto& s : polygon.sides)
            if (x >= s.start.x && x <= s.end.x)
                return y * s.e <= s.start.y * s.e - (x - s.start.x) * s.h;
        return false;
    };
    auto is_vertex = [&](long x, long y) {
        return std::find(polygon.vertices.begin(), polygon.vertices.end(), LatticePoint{x, y}) !=
               polygon.vertices.end();
    };
    auto is_point = [&](long x, long y) {
        return std::find(polygon.points.begin(), polygon.points.end(), LatticePoint{x, y}) !=
               polygon.points.end();
    };

    std::ostringstream os;
    for (long y = max_y; y >= 0; --y) {
        os.width(3);
        os << y << " |";
        for (long x = 0; x <= max_x; ++x) {
            char ch = ' ';
            if (is_vertex(x, y))
                ch = 'O';
            else if (is_point(x, y))
                ch = '*';
            else if (x >= 1 && y >= 1 && under_polygon(x, y))
                ch = '.';
            os << ch;
        }
        os << '\n';
    }
    os << "    +" << std::string(static_cast<std::size_t>(max_x + 1), '-') << '\n';
    os << "     O vertex  * point  . counted lattice point\n";
    return os.str();
}

}  // namespace purefield::newton
