#include "purefield/periodicity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace purefield::periodicity {

std::uint64_t period_modulus(std::uint64_t n)
{
    if (n < 2)
        throw InvalidInput("degree n must be at least 2");
    std::uint64_t n0 = 1;
    for (const auto& [p, k] : factor_u64(n))
        n0 *= ipow_u64(p, k + 1);
    return n0;
}

bool class_has_no_square_free(std::uint64_t n, std::uint64_t r)
{
    for (const auto& [p, k] : factor_u64(n)) {
        (void)k;
        if (r % (p * p) == 0)
            return true;
    }
    return false;
}

std::vector<Integer> witnesses(std::uint64_t n, std::uint64_t r, std::uint64_t bound, std::size_t limit)
{
    const std::uint64_t n0 = period_modulus(n);
    std::vector<Integer> out;
    if (class_has_no_square_free(n, r % n0))
        return out;
    const Integer mod(static_cast<unsigned long>(n0));
    const Integer rr(static_cast<unsigned long>(r % n0));
    const Integer b(static_cast<unsigned long>(bound));
    // walk |m| upward: positive members r + j n0 and negative members r - j n0
    Integer pos = rr, neg = rr - mod;
    while ((pos <= b || -neg <= b) && out.size() < limit) {
        const bool take_pos = pos <= b && (pos <= -neg);
        Integer m = take_pos ? pos : neg;
        if (take_pos)
            pos += mod;
        else
            neg -= mod;
        if (m == 0 || m == 1 || m == -1)
            continue;
        if (square_free_check(m).status == SquareFreeStatus::SquareFree)
            out.push_back(m);
    }
    return out;
}

namespace {

std::vector<QPolynomial> basis_for(std::uint64_t n, const Integer& m, const AtlasOptions& options)
{
    const PureField field = PureField::create(n, m);
    if (!options.certify)
        return basis_polynomials(construct_basis(field));
    BuildOptions build;
    build.certify = options.certify_options;
    return basis_polynomials(certified_integral_basis(field, build).basis);
}

AtlasRow compute_row(std::uint64_t n, std::uint64_t r, std::uint64_t bound, const AtlasOptions& options)
{
    AtlasRow row;
    if (class_has_no_square_free(n, r)) {
        row.kind = AtlasRow::Kind::Skip;
        row.reason = "class has no square-free members";
        return row;
    }
    const std::vector<Integer> w = witnesses(n, r, bound, 2);
    if (w.empty()) {
        row.kind = AtlasRow::Kind::Unknown;
        row.reason = "no square-free witness with |m| <= " + std::to_string(bound);
        return row;
    }
    row.kind = AtlasRow::Kind::Param;
    row.witness = w[0];
    row.polynomials = basis_for(n, w[0], options);
    if (w.size() > 1) {
        row.second_witness = w[1];
        row.periodic = basis_for(n, w[1], options) == row.polynomials;
    }
    return row;
}

}  // namespace

PeriodAtlas atlas(std::uint64_t n, const AtlasOptions& options)
{
    PeriodAtlas out;
    out.n = n;
    out.n0 = period_modulus(n);
    const std::uint64_t bound = options.scan_bound ? options.scan_bound : 10 * out.n0;
    std::vector<AtlasRow> rows(out.n0);
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    AtlasOptions inner = options;
    inner.certify_options.threads = 1;  // rows already run in parallel
    auto worker = [&]() {
        for (std::uint64_t r; (r = next.fetch_add(1)) < out.n0;) {
            try {
                rows[r] = compute_row(n, r, bound, inner);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, out.n0));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);
    for (std::uint64_t r = 0; r < out.n0; ++r)
        out.rows.emplace(r, std::move(rows[r]));
    return out;
}

bool verify_periodicity(std::uint64_t n, std::uint64_t r, const Integer& m1, const Integer& m2)
{
    const std::uint64_t n0 = period_modulus(n);
    const Integer mod(static_cast<unsigned long>(n0));
    const Integer rr(static_cast<unsigned long>(r));
    if (r >= n0)
        throw InvalidInput("residue must lie in [0, n0)");
    for (const Integer* m : {&m1, &m2}) {
        if (mod_floor(*m, mod) != rr)
            throw InvalidInput("m = " + to_string(*m) + " is not congruent to " + std::to_string(r) + " mod " +
                               std::to_string(n0));
    }
    const PureField f1 = PureField::create(n, m1);
    const PureField f2 = PureField::create(n, m2);
    return basis_polynomials(integral_basis(f1).first) == basis_polynomials(integral_basis(f2).first);
}

std::string render_fraction(const QPolynomial& poly)
{
    const BasisElement e = BasisElement::from_polynomial(poly);
    const auto& c = e.numerator.coefficients();
    std::string num;
    std::size_t terms = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const Integer v = c[i].get_num();
        if (v == 0)
            continue;
        ++terms;
        if (v < 0)
            num += "-";
        else if (!num.empty())
            num += "+";
        const Integer a = abs(v);
        if (a != 1 || i == 0)
            num += to_string(a);
        if (i >= 1)
            num += "X";
        if (i >= 2)
            num += "^" + std::to_string(i);
    }
    if (num.empty())
        num = "0";
    if (e.denominator == 1)
        return num;
    return (terms > 1 ? "(" + num + ")" : num) + "/" + to_string(e.denominator);
}

std::string render_table(const PeriodAtlas& atlas)
{
    // group residues sharing a row
    std::vector<std::pair<std::vector<std::uint64_t>, const AtlasRow*>> groups;
    std::vector<std::uint64_t> skipped, unknown;
    for (const auto& [r, row] : atlas.rows) {
        if (row.kind == AtlasRow::Kind::Skip) {
            skipped.push_back(r);
            continue;
        }
        if (row.kind == AtlasRow::Kind::Unknown) {
            unknown.push_back(r);
            continue;
        }
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.second->polynomials == row.polynomials; });
        if (it == groups.end())
            groups.push_back({{r}, &row});
        else
            it->first.push_back(r);
    }
    auto list = [](const std::vector<std::uint64_t>& v) {
        std::string s;
        for (auto r : v)
            s += (s.empty() ? "" : ",") + std::to_string(r);
        return s;
    };
    std::ostringstream os;
    os << "n = " << atlas.n << ", m = " << atlas.n0 << "t + r\n";
    for (const auto& [residues, row] : groups) {
        os << "r in {" << list(residues) << "}:\n  B_r = (";
        for (std::size_t i = 0; i < row->polynomials.size(); ++i)
            os << (i ? ", " : "") << render_fraction(row->polynomials[i]);
        os << ")\n";
        if (!row->periodic)
            os << "  WARNING: second witness " << to_string(*row->second_witness) << " gave a different basis\n";
    }
    if (!skipped.empty())
        os << "no square-free members: r in {" << list(skipped) << "}\n";
    if (!unknown.empty())
        os << "no witness within the scan bound: r in {" << list(unknown) << "}\n";
    return os.str();
}

}  // namespace purefield::periodicity
