#include "purefield/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "purefield/serialize.hpp"

namespace purefield::cli {

namespace {

struct Settings {
    std::uint64_t n = 0;
    std::string m;
    std::uint64_t p = 0;
    unsigned k = 0;
    std::string format = "json";
    bool allow_unknown = false;
    bool allow_skipped = false;
    std::uint64_t enum_budget = oracle::default_enum_budget;
    std::uint64_t scan_bound = 0;
    std::uint64_t square_free_bound = default_square_free_bound;
    unsigned threads = 0;
    std::string output_path;
};

bool verbose()
{
    const char* v = std::getenv("PUREFIELD_VERBOSE");
    return v && *v && std::string(v) != "0";
}

class Emitter {
public:
    Emitter(const Settings& s, std::ostream& out) : s_(s), out_(out) {}

    void emit(const serialize::Json& json, const std::string& pretty)
    {
        const std::string text = serialize::dump(json);
        if (!s_.output_path.empty()) {
            std::ofstream f(s_.output_path, std::ios::binary);
            if (!f)
                throw InvalidInput("cannot open output path " + s_.output_path);
            f << text;
        }
        out_ << (s_.format == "pretty" ? pretty : text);
    }

private:
    const Settings& s_;
    std::ostream& out_;
};

PureField make_field(const Settings& s)
{
    return PureField::create(s.n, parse_integer(s.m), s.square_free_bound, s.allow_unknown);
}

oracle::CertifyOptions certify_options(const Settings& s)
{
    oracle::CertifyOptions o;
    o.enum_budget = s.enum_budget;
    o.threads = s.threads;
    return o;
}

int run_basis(const Settings& s, Emitter& em, std::ostream& err)
{
    const PureField field = make_field(s);
    BuildOptions opts;
    opts.certify = certify_options(s);
    const CertifiedBasis cb = certified_integral_basis(field, opts);
    if (verbose())
        err << serialize::certification_pretty(cb.certification);
    serialize::Json j = serialize::basis_json(cb.basis, cb.report);
    j["certified"] = cb.certification.certified();
    j["maximality_skipped"] = cb.certification.any_skipped();
    em.emit(j, serialize::basis_pretty(cb.basis, cb.report));
    if (cb.certification.any_skipped() && !s.allow_skipped) {
        err << "maximality enumeration skipped for some prime (raise --enum-budget or pass --allow-skipped)\n";
        return ResourceLimit;
    }
    return Success;
}

int run_index(const Settings& s, Emitter& em)
{
    const PureField field = make_field(s);
    const IndexReport rep = index_report(field);
    em.emit(serialize::index_json(field, rep), serialize::index_pretty(field, rep));
    return Success;
}

int run_polygon(const Settings& s, Emitter& em)
{
    if (!is_prime_u64(s.p))
        throw InvalidInput("--p must be prime");
    if (s.k < 1)
        throw InvalidInput("--k must be at least 1");
    const std::uint64_t n = ipow_u64(s.p, s.k);
    const Integer m = parse_integer(s.m);
    if (m == 0)
        throw InvalidInput("m must be nonzero");
    std::vector<Rational> c(n + 1);
    c[0] = -m;
    c[n] = 1;
    const QPolynomial f(std::move(c));
    const newton::IndexBound b = newton::index_lower_bound(f, s.p);
    serialize::Json j = serialize::polygon_json(b, f, s.p);
    j["k"] = s.k;
    j["m"] = serialize::integer_json(m);
    em.emit(j, serialize::polygon_pretty(b, f, s.p));
    return Success;
}

int run_atlas(const Settings& s, Emitter& em, std::ostream& err)
{
    if (s.n < 2)
        throw InvalidInput("degree n must be at least 2");
    periodicity::AtlasOptions opts;
    opts.scan_bound = s.scan_bound;
    opts.threads = s.threads;
    opts.certify_options = certify_options(s);
    const periodicity::PeriodAtlas a = periodicity::atlas(s.n, opts);
    em.emit(serialize::atlas_json(a), periodicity::render_table(a));
    bool unknown = false, broken = false;
    for (const auto& [r, row] : a.rows) {
        unknown = unknown || row.kind == periodicity::AtlasRow::Kind::Unknown;
        broken = broken || !row.periodic;
        if (!row.periodic)
            err << "row " << r << ": witnesses disagree\n";
    }
    if (broken)
        return VerifyFailed;
    if (unknown) {
        err << "some residue classes have no witness within the scan bound\n";
        return ResourceLimit;
    }
    return Success;
}

int run_verify(const Settings& s, Emitter& em, std::ostream& err)
{
    const PureField field = make_field(s);
    const IntegralBasis basis = construct_basis(field);
    const IndexReport rep = index_report(field);
    const oracle::CertificationReport cert = oracle::certify(basis, rep, certify_options(s));
    em.emit(serialize::certification_json(cert), serialize::certification_pretty(cert));
    if (!cert.certified())
        return VerifyFailed;
    if (cert.any_skipped() && !s.allow_skipped) {
        err << "maximality enumeration skipped for some prime (raise --enum-budget or pass --allow-skipped)\n";
        return ResourceLimit;
    }
    return Success;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Settings s;
    CLI::App app{"Integral bases of pure number fields Q(m^(1/n))", "purefield"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
        sub->add_option("--output-path", s.output_path, "Also write the JSON result to this file");
        sub->add_option("--threads", s.threads, "Worker threads (0 = all cores)");
    };
    auto add_field = [&](CLI::App* sub) {
        sub->add_option("--n", s.n, "Degree n >= 2")->required();
        sub->add_option("--m", s.m, "Square-free integer m")->required();
        sub->add_flag("--allow-unknown-squarefree", s.allow_unknown,
                      "Proceed when square-freeness of m cannot be decided");
        sub->add_option("--squarefree-bound", s.square_free_bound, "Trial division bound for square-freeness");
    };
    auto add_certify = [&](CLI::App* sub) {
        sub->add_option("--enum-budget", s.enum_budget, "Maximum p^n candidates for the maximality enumeration");
        sub->add_flag("--allow-skipped", s.allow_skipped, "Exit 0 even when an enumeration was skipped");
    };

    CLI::App* basis = app.add_subcommand("basis", "Certified integral basis and index report");
    add_field(basis);
    add_certify(basis);
    add_common(basis);
    CLI::App* index = app.add_subcommand("index", "Index report only");
    add_field(index);
    add_common(index);
    CLI::App* polygon = app.add_subcommand("polygon", "Newton polygon of X^(p^k) - m at p");
    polygon->add_option("--p", s.p, "Prime p")->required();
    polygon->add_option("--k", s.k, "Exponent k >= 1")->required();
    polygon->add_option("--m", s.m, "Integer m")->required();
    add_common(polygon);
    CLI::App* atlas = app.add_subcommand("atlas", "Parametric bases for every residue class modulo n0");
    atlas->add_option("--n", s.n, "Degree n >= 2")->required();
    atlas->add_option("--scan-bound", s.scan_bound, "Largest |m| scanned for witnesses (default 10 n0)");
    atlas->add_option("--enum-budget", s.enum_budget, "Maximum p^n candidates for the maximality enumeration");
    add_common(atlas);
    CLI::App* verify = app.add_subcommand("verify", "Oracle certification of the constructed basis");
    add_field(verify);
    add_certify(verify);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    }

    try {
        Emitter em(s, out);
        if (*basis)
            return run_basis(s, em, err);
        if (*index)
            return run_index(s, em);
        if (*polygon)
            return run_polygon(s, em);
        if (*atlas)
            return run_atlas(s, em, err);
        return run_verify(s, em, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const ResourceBound& e) {
        err << "error: " << e.what() << "\n";
        return ResourceLimit;
    } catch (const CertificationFailure& e) {
        err << "error: " << e.what() << "\n" << serialize::certification_pretty(e.report);
        return VerifyFailed;
    }
}

}  // namespace purefield::cli
