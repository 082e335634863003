#include "purefield/serialize.hpp"

#include <sstream>

namespace purefield::serialize {

Json integer_json(const Integer& a)
{
    if (a.fits_slong_p())
        return static_cast<std::int64_t>(a.get_si());
    return to_string(a);
}

namespace {

Json index_map(const IndexReport& report)
{
    Json j = Json::object();
    for (const auto& [p, e] : report.per_prime)
        j[std::to_string(p)] = e;
    return j;
}

Json point_json(const newton::LatticePoint& pt) { return Json::array({pt.x, pt.y}); }

Json factor_json(const newton::FactorContribution& fc)
{
    Json j;
    j["phi"] = fc.phi.to_string();
    j["points"] = Json::array();
    for (const auto& pt : fc.polygon.points)
        j["points"].push_back(point_json(pt));
    j["vertices"] = Json::array();
    for (const auto& pt : fc.polygon.vertices)
        j["vertices"].push_back(point_json(pt));
    j["sides"] = Json::array();
    for (const auto& s : fc.polygon.sides) {
        Json side;
        side["slope"] = s.slope_string();
        side["residual"] = s.residual.to_string();
        side["separable"] = s.separable;
        side["degree"] = s.degree;
        j["sides"].push_back(std::move(side));
    }
    j["phi_index"] = fc.index;
    j["regular"] = fc.regular;
    return j;
}

std::string join_fractions(const std::vector<QPolynomial>& polys)
{
    std::string s;
    for (std::size_t i = 0; i < polys.size(); ++i)
        s += (i ? ", " : "") + periodicity::render_fraction(polys[i]);
    return s;
}

}  // namespace

Json basis_json(const IntegralBasis& basis, const IndexReport& report)
{
    Json j;
    j["n"] = basis.field.n();
    j["m"] = integer_json(basis.field.m());
    j["elements"] = Json::array();
    for (const auto& e : basis.elements) {
        Json el;
        el["num"] = Json::array();
        for (const auto& c : e.numerator.coefficients())
            el["num"].push_back(integer_json(c.get_num()));
        el["den"] = integer_json(e.denominator);
        j["elements"].push_back(std::move(el));
    }
    Json hnf;
    hnf["den"] = integer_json(basis.canonical.den);
    hnf["matrix"] = Json::array();
    for (std::size_t i = 0; i < basis.canonical.hnf.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < basis.canonical.hnf.cols(); ++k)
            row.push_back(integer_json(basis.canonical.hnf(i, k)));
        hnf["matrix"].push_back(std::move(row));
    }
    j["hnf"] = std::move(hnf);
    j["index"] = index_map(report);
    j["total_index"] = integer_json(report.total_index);
    j["disc_field"] = integer_json(report.field_discriminant);
    j["disc_poly"] = integer_json(report.poly_discriminant);
    return j;
}

Json index_json(const PureField& field, const IndexReport& report)
{
    Json j;
    j["n"] = field.n();
    j["m"] = integer_json(field.m());
    j["index"] = index_map(report);
    j["total_index"] = integer_json(report.total_index);
    j["disc_field"] = integer_json(report.field_discriminant);
    j["disc_poly"] = integer_json(report.poly_discriminant);
    Json source = Json::object(), polygon = Json::object();
    for (const auto& [p, s] : report.source)
        source[std::to_string(p)] = to_string(s);
    for (const auto& [p, b] : report.polygon)
        polygon[std::to_string(p)] = Json{{"bound", b.first}, {"exact", b.second}};
    j["source"] = std::move(source);
    j["polygon"] = std::move(polygon);
    return j;
}

Json polygon_json(const newton::IndexBound& bound, const QPolynomial& f, std::uint64_t p)
{
    Json j;
    j["f"] = f.to_string();
    j["p"] = p;
    j["exact"] = bound.exact;
    j["index_bound"] = bound.bound;
    if (bound.factors.size() == 1) {
        const Json single = factor_json(bound.factors.front());
        for (const auto& [key, value] : single.items())
            j[key] = value;
    } else {
        j["factors"] = Json::array();
        for (const auto& fc : bound.factors)
            j["factors"].push_back(factor_json(fc));
    }
    return j;
}

Json atlas_json(const periodicity::PeriodAtlas& atlas)
{
    using Kind = periodicity::AtlasRow::Kind;
    Json j;
    j["n"] = atlas.n;
    j["n0"] = atlas.n0;
    Json rows = Json::object();
    for (const auto& [r, row] : atlas.rows) {
        Json jr;
        switch (row.kind) {
        case Kind::Skip:
            jr["skip"] = row.reason;
            break;
        case Kind::Unknown:
            jr["unknown"] = row.reason;
            break;
        case Kind::Param:
            jr["witness"] = integer_json(*row.witness);
            if (row.second_witness)
                jr["second_witness"] = integer_json(*row.second_witness);
            jr["periodic"] = row.periodic;
            jr["basis"] = Json::array();
            for (const auto& poly : row.polynomials) {
                Json coeffs = Json::array();
                for (const auto& c : poly.coefficients())
                    coeffs.push_back(to_string(c));
                jr["basis"].push_back(std::move(coeffs));
            }
            break;
        }
        rows[std::to_string(r)] = std::move(jr);
    }
    j["rows"] = std::move(rows);
    return j;
}

Json certification_json(const oracle::CertificationReport& report)
{
    Json j;
    j["integrality"] = report.integrality;
    j["ring_closed"] = report.ring_closed;
    j["disc_match"] = report.disc_match;
    j["discriminant"] = to_string(report.discriminant);
    Json max = Json::object();
    for (const auto& [p, r] : report.maximality) {
        Json jr;
        jr["status"] = oracle::to_string(r.status);
        if (!r.reason.empty())
            jr["reason"] = r.reason;
        jr["candidates"] = r.candidates;
        jr["exact_checks"] = r.exact_checks;
        if (r.counterexample) {
            Json coords = Json::array();
            for (const auto& c : r.counterexample->coords)
                coords.push_back(to_string(c));
            jr["counterexample"] = std::move(coords);
        }
        max[std::to_string(p)] = std::move(jr);
    }
    j["maximality"] = std::move(max);
    j["certified"] = report.certified();
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string basis_pretty(const IntegralBasis& basis, const IndexReport& report)
{
    std::ostringstream os;
    os << "Integral basis of Q(m^(1/" << basis.field.n() << ")), m = " << to_string(basis.field.m()) << "\n";
    os << "(" << join_fractions(basis_polynomials(basis)) << ")\n";
    os << index_pretty(basis.field, report);
    return os.str();
}

std::string index_pretty(const PureField& field, const IndexReport& report)
{
    std::ostringstream os;
    for (const auto& [p, e] : report.per_prime) {
        const auto& [bound, exact] = report.polygon.at(p);
        os << "ind_" << p << " = " << e << " (" << to_string(report.source.at(p)) << "; polygon bound " << bound
           << (exact ? ", exact" : "") << ")\n";
    }
    os << "index = " << to_string(report.total_index) << "\n";
    os << "D(alpha) = " << to_string(report.poly_discriminant) << "\n";
    os << "D_K = " << to_string(report.field_discriminant) << "\n";
    (void)field;
    return os.str();
}

std::string polygon_pretty(const newton::IndexBound& bound, const QPolynomial& f, std::uint64_t p)
{
    std::ostringstream os;
    os << "f = " << f.to_string() << ", p = " << p << "\n";
    for (const auto& fc : bound.factors) {
        os << "phi = " << fc.phi.to_string() << "\n";
        os << newton::render_ascii(fc.polygon);
        for (const auto& s : fc.polygon.sides)
            os << "side (" << s.start.x << "," << s.start.y << ")-(" << s.end.x << "," << s.end.y
               << ") slope " << s.slope_string() << ", residual " << s.residual.to_string()
               << (s.separable ? ", separable" : ", not separable") << "\n";
        os << "phi-index = " << fc.index << (fc.regular ? " (regular)" : " (not regular)") << "\n";
    }
    os << "ind_p " << (bound.exact ? "= " : ">= ") << bound.bound << "\n";
    return os.str();
}

std::string certification_pretty(const oracle::CertificationReport& report)
{
    std::ostringstream os;
    std::size_t good = 0;
    for (bool b : report.integrality)
        good += b;
    os << "integrality: " << good << "/" << report.integrality.size() << " elements integral\n";
    os << "ring closed: " << (report.ring_closed ? "yes" : "no") << "\n";
    os << "discriminant: " << to_string(report.discriminant) << (report.disc_match ? " (matches)" : " (MISMATCH)")
       << "\n";
    for (const auto& [p, r] : report.maximality) {
        os << p << "-maximality: " << oracle::to_string(r.status);
        if (!r.reason.empty())
            os << " (" << r.reason << ")";
        if (r.status != oracle::MaximalityResult::Status::Skipped)
            os << ", " << r.candidates << " candidates, " << r.exact_checks << " exact checks";
        os << "\n";
    }
    os << (report.certified() ? "CERTIFIED" : "NOT CERTIFIED") << "\n";
    return os.str();
}

}  // namespace purefield::serialize
