#include "purefield/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace purefield::oracle {

FieldElement FieldElement::from_polynomial(const PureField& field, const QPolynomial& poly)
{
    const std::uint64_t n = field.n();
    FieldElement e{field, std::vector<Rational>(n)};
    Rational m_power = 1;
    const auto& c = poly.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0 && i % n == 0)
            m_power *= field.m();
        e.coords[i % n] += c[i] * m_power;
    }
    return e;
}

QPolynomial FieldElement::polynomial() const { return QPolynomial(coords); }

FieldElement mul(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field == b.field))
        throw InvalidInput("field elements from different fields");
    const std::size_t n = a.coords.size();
    const Rational m(a.field.m());
    FieldElement out{a.field, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords[j] == 0)
                continue;
            Rational t = a.coords[i] * b.coords[j];
            if (i + j >= n)
                out.coords[i + j - n] += t * m;
            else
                out.coords[i + j] += t;
        }
    }
    return out;
}

Rational trace(const FieldElement& e)
{
    return e.coords[0] * static_cast<unsigned long>(e.coords.size());
}

std::vector<Rational> dual_basis_coords(const FieldElement& e)
{
    const std::size_t n = e.coords.size();
    std::vector<Rational> out;
    out.reserve(n);
    FieldElement power = FieldElement::from_polynomial(e.field, QPolynomial{1});
    const FieldElement alpha = FieldElement::from_polynomial(e.field, QPolynomial{0, 1});
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(trace(mul(e, power)));
        power = mul(power, alpha);
    }
    return out;
}

RatMatrix multiplication_matrix(const FieldElement& e)
{
    const std::size_t n = e.coords.size();
    const Rational m(e.field.m());
    RatMatrix mat(n, n);
    std::vector<Rational> col = e.coords;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            mat(i, j) = col[i];
        // multiply by alpha: shift up, wrapping alpha^n to m
        Rational top = col[n - 1];
        for (std::size_t i = n - 1; i > 0; --i)
            col[i] = col[i - 1];
        col[0] = top * m;
    }
    return mat;
}

bool is_algebraic_integer(const FieldElement& e)
{
    return charpoly(multiplication_matrix(e)).has_integer_coefficients();
}

namespace {

FieldElement element_of(const IntegralBasis& basis, std::size_t i)
{
    return FieldElement::from_polynomial(basis.field, basis.elements[i].polynomial());
}

bool is_triangular(const IntegralBasis& basis)
{
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        if (basis.elements[i].degree() != static_cast<long>(i))
            return false;
    return basis.elements.size() == basis.field.n();
}

RatMatrix gram_matrix(const std::vector<FieldElement>& b)
{
    const std::size_t n = b.size();
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g(i, j) = trace(mul(b[i], b[j]));
            g(j, i) = g(i, j);
        }
    return g;
}

// Residues modulo a fixed q <= 2^63; the modulus is per thread so that
// the generic Berkowitz routine can use plain value semantics.
thread_local std::uint64_t mod_q = 1;

struct ModQ {
    std::uint64_t v = 0;
    ModQ() = default;
    explicit ModQ(long x) { v = static_cast<std::uint64_t>(x < 0 ? -x : x) % mod_q; if (x < 0 && v) v = mod_q - v; }
    static ModQ raw(std::uint64_t x) { ModQ r; r.v = x % mod_q; return r; }
    ModQ& operator+=(const ModQ& o) { v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) + o.v) % mod_q); return *this; }
    ModQ& operator-=(const ModQ& o) { v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) + mod_q - o.v) % mod_q); return *this; }
    friend ModQ operator*(const ModQ& a, const ModQ& b)
    {
        ModQ r;
        r.v = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.v) * b.v % mod_q);
        return r;
    }
    friend bool operator==(const ModQ& a, long b) { return a.v == ModQ(b).v; }
    friend bool operator==(const ModQ& a, const ModQ& b) { return a.v == b.v; }
};

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::uint64_t n, std::uint64_t cap)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (r > cap / p)
            return std::nullopt;
        r *= p;
    }
    return r;
}

std::uint64_t inverse_mod_p(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % p);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
        e >>= 1;
    }
    return result;
}

// Reduced row echelon form over F_p, zero rows dropped.
std::vector<std::vector<std::uint64_t>> row_reduce_mod_p(std::vector<std::vector<std::uint64_t>> rows,
                                                         std::uint64_t p)
{
    if (rows.empty())
        return rows;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const std::uint64_t inv = inverse_mod_p(rows[rank][c], p);
        for (auto& v : rows[rank])
            v = v * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

// Basis of the null space of a matrix in reduced row echelon form.
std::vector<std::vector<std::uint64_t>> kernel_mod_p(const std::vector<std::vector<std::uint64_t>>& rref,
                                                     std::size_t cols, std::uint64_t p)
{
    std::vector<long> pivot_of(cols, -1);
    for (std::size_t r = 0; r < rref.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rref[r][c]) {
                pivot_of[c] = static_cast<long>(r);
                break;
            }
    std::vector<std::vector<std::uint64_t>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_of[f] >= 0)
            continue;
        std::vector<std::uint64_t> v(cols, 0);
        v[f] = 1;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of[c] >= 0)
                v[c] = (p - rref[static_cast<std::size_t>(pivot_of[c])][f]) % p;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Rational basis_discriminant(const IntegralBasis& basis)
{
    std::vector<FieldElement> b;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        b.push_back(element_of(basis, i));
    const Rational gram = determinant(gram_matrix(b));
    if (!is_triangular(basis))
        return gram;
    Rational diag = 1;
    for (const auto& e : basis.elements)
        diag *= e.numerator.leading() / Rational(e.denominator);
    const Rational by_transition = Rational(poly_discriminant(basis.field.n(), basis.field.m())) * diag * diag;
    if (by_transition != gram)
        throw std::logic_error("discriminant mismatch between transition and Gram routes");
    return by_transition;
}

StructureConstants structure_constants(const IntegralBasis& basis)
{
    StructureConstants sc;
    if (!is_triangular(basis))
        return sc;
    const std::size_t n = basis.elements.size();
    std::vector<FieldElement> b;
    for (std::size_t i = 0; i < n; ++i)
        b.push_back(element_of(basis, i));
    sc.table.assign(n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            FieldElement prod = mul(b[i], b[j]);
            // back substitution against the lower-triangular basis rows
            std::vector<Rational> x(n);
            for (std::size_t k = n; k-- > 0;) {
                Rational rest = prod.coords[k];
                for (std::size_t l = k + 1; l < n; ++l)
                    rest -= x[l] * b[l].coords[k];
                x[k] = rest / b[k].coords[k];
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (!is_integral(x[k]))
                    return StructureConstants{};
                sc.table[i][j][k] = x[k].get_num();
                sc.table[j][i][k] = x[k].get_num();
            }
        }
    sc.closed = true;
    return sc;
}

MaximalityResult p_maximality_enum(const IntegralBasis& basis, std::uint64_t p, std::uint64_t budget,
                                   unsigned threads)
{
    MaximalityResult result;
    const std::size_t n = basis.elements.size();
    if (!is_prime_u64(p))
        throw std::invalid_argument("p_maximality_enum needs a prime");
    const auto modulus = checked_power(p, n, std::numeric_limits<std::uint64_t>::max() / 2);
    if (!modulus) {
        result.reason = "p^n does not fit the modular arithmetic";
        return result;
    }
    const StructureConstants sc = structure_constants(basis);
    if (!sc.closed) {
        result.reason = "basis is not closed under multiplication";
        return result;
    }

    std::vector<FieldElement> b;
    for (std::size_t i = 0; i < n; ++i)
        b.push_back(element_of(basis, i));
    // Gram matrix mod p; integral because the module is a ring
    const RatMatrix gram = gram_matrix(b);
    std::vector<std::vector<std::uint64_t>> gram_p(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram_p[i][j] = mod_floor_u64(gram(i, j).get_num(), p);

    auto mul_mod_p = [&](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
        std::vector<std::uint64_t> z(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i])
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!y[j])
                    continue;
                const std::uint64_t xy = x[i] * y[j] % p;
                for (std::size_t k = 0; k < n; ++k)
                    z[k] = (z[k] + xy * mod_floor_u64(sc.table[i][j][k], p)) % p;
            }
        }
        return z;
    };

    // Linear necessary conditions for (y/p) integral, y = sum c_i b_i:
    // Tr(y^(p^e) b_j) = 0 mod p for all e, j, and y -> y^(p^e) is F_p-linear
    // on O/pO. Row (e, j) of `filter` holds the functional on c.
    // [O_max : O]^2 divides disc(O), so p^(v/2) kills the p-part of O_max/O;
    // once p^e - 1 reaches that, y in pO_max forces y^(p^e) in pO.
    const Integer disc = determinant(gram).get_num();
    const std::uint64_t killer = vp_int(Integer(static_cast<unsigned long>(p)), disc) / 2;
    unsigned rounds = 0;
    for (std::uint64_t pe = 1; pe < n || pe - 1 < killer; pe *= p)
        ++rounds;
    std::vector<std::vector<std::uint64_t>> filter;  // rows x n
    std::vector<std::vector<std::uint64_t>> frob(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        frob[i][i] = 1;
    for (unsigned e = 0; e < rounds; ++e) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::uint64_t> row(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    acc = (acc + frob[i][k] * gram_p[k][j]) % p;
                row[i] = acc;
            }
            filter.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::uint64_t> power = frob[i];
            std::vector<std::uint64_t> acc = power;
            for (std::uint64_t t = 1; t < p; ++t)
                acc = mul_mod_p(acc, power);
            frob[i] = std::move(acc);
        }
    }
    // y^(p^e) itself lies in pO once p^e >= n, which is much sharper when p | n
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::uint64_t> row(n);
        for (std::size_t i = 0; i < n; ++i)
            row[i] = frob[i][k];
        filter.push_back(std::move(row));
    }
    // Counterexamples y (mod pO) form an ideal S inside the radical R. R is
    // nilpotent, so S != 0 forces a nonzero element of S killed by R: it is
    // enough to search R intersected with Ann(R), which is linear again.
    for (const auto& r : kernel_mod_p(row_reduce_mod_p(filter, p), n, p)) {
        std::vector<std::vector<std::uint64_t>> by_r(n, std::vector<std::uint64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!r[j])
                    continue;
                for (std::size_t k = 0; k < n; ++k)
                    by_r[k][i] = (by_r[k][i] + r[j] * mod_floor_u64(sc.table[i][j][k], p)) % p;
            }
        for (auto& row : by_r)
            filter.push_back(std::move(row));
    }
    // Every counterexample lies in the common kernel K of the filters, so
    // walking the nonzero vectors of K covers all candidates that matter.
    const auto kernel = kernel_mod_p(row_reduce_mod_p(filter, p), n, p);
    const std::size_t dim = kernel.size();
    if (!checked_power(p, dim, budget)) {
        result.reason = std::to_string(p) + "^" + std::to_string(dim) + " filtered candidates exceed the budget of " +
                        std::to_string(budget);
        return result;
    }

    const std::uint64_t q = *modulus;
    // multiplication matrices of the basis elements mod p^n (column j = b_i b_j)
    std::vector<std::vector<std::uint64_t>> mult(n, std::vector<std::uint64_t>(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                mult[i][k * n + j] = mod_floor_u64(sc.table[i][j][k], q);

    // split on the top kernel coordinates so workers get independent ranges
    std::size_t split = 0;
    std::uint64_t chunks = 1;
    while (split + 1 < dim && chunks < 64) {
        chunks *= p;
        ++split;
    }
    const std::size_t inner = dim - split;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));

    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best_chunk{std::numeric_limits<std::uint64_t>::max()};
    std::atomic<std::uint64_t> total_exact{0};
    std::mutex found_mutex;
    std::map<std::uint64_t, std::vector<std::uint64_t>> found;  // chunk -> coefficients

    auto worker = [&]() {
        mod_q = q;
        std::vector<std::uint64_t> t(dim), c(n);
        Matrix<ModQ> my(n, n);
        for (;;) {
            const std::uint64_t chunk = next_chunk.fetch_add(1);
            if (chunk >= chunks || chunk > best_chunk.load())
                return;
            std::fill(t.begin(), t.end(), 0);
            std::uint64_t rest = chunk;
            for (std::size_t i = inner; i < dim; ++i) {
                t[i] = rest % p;
                rest /= p;
            }
            std::uint64_t local_exact = 0;
            for (;;) {
                const bool zero = std::all_of(t.begin(), t.end(), [](std::uint64_t v) { return v == 0; });
                if (!zero) {
                    ++local_exact;
                    std::fill(c.begin(), c.end(), 0);
                    for (std::size_t k = 0; k < dim; ++k)
                        if (t[k])
                            for (std::size_t i = 0; i < n; ++i)
                                c[i] = (c[i] + t[k] * kernel[k][i]) % p;
                    for (std::size_t k = 0; k < n * n; ++k) {
                        unsigned __int128 s = 0;
                        for (std::size_t i = 0; i < n; ++i)
                            if (c[i])
                                s += static_cast<unsigned __int128>(c[i]) * mult[i][k];
                        my(k / n, k % n) = ModQ::raw(static_cast<std::uint64_t>(s % q));
                    }
                    const std::vector<ModQ> cp = berkowitz(my);
                    bool integral = true;
                    std::uint64_t pi = 1;
                    for (std::size_t i = 1; i <= n && integral; ++i) {
                        pi *= p;
                        integral = cp[i].v % pi == 0;
                    }
                    if (integral) {
                        std::lock_guard lock(found_mutex);
                        found.emplace(chunk, c);
                        std::uint64_t cur = best_chunk.load();
                        while (chunk < cur && !best_chunk.compare_exchange_weak(cur, chunk)) {
                        }
                        break;
                    }
                }
                // odometer over the inner kernel coordinates
                std::size_t i = 0;
                for (; i < inner; ++i) {
                    t[i] = (t[i] + 1) % p;
                    if (t[i] != 0)
                        break;
                }
                if (i == inner)
                    break;
            }
            total_exact += local_exact;
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    result.candidates = q - 1;
    result.exact_checks = total_exact.load();
    if (found.empty()) {
        result.status = MaximalityResult::Status::Proved;
        return result;
    }
    const auto& coeffs = found.begin()->second;
    FieldElement x{basis.field, std::vector<Rational>(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            x.coords[k] += b[i].coords[k] * static_cast<unsigned long>(coeffs[i]);
    for (auto& v : x.coords)
        v /= static_cast<unsigned long>(p);
    if (!is_algebraic_integer(x))
        throw std::logic_error("modular integrality test disagrees with the exact one");
    result.status = MaximalityResult::Status::CounterexampleFound;
    result.counterexample = std::move(x);
    return result;
}

bool CertificationReport::all_integral() const
{
    return std::all_of(integrality.begin(), integrality.end(), [](bool b) { return b; });
}

bool CertificationReport::certified() const
{
    if (!all_integral() || !ring_closed || !disc_match)
        return false;
    return std::none_of(maximality.begin(), maximality.end(), [](const auto& kv) {
        return kv.second.status == MaximalityResult::Status::CounterexampleFound;
    });
}

bool CertificationReport::any_skipped() const
{
    return std::any_of(maximality.begin(), maximality.end(), [](const auto& kv) {
        return kv.second.status == MaximalityResult::Status::Skipped;
    });
}

CertificationReport certify(const IntegralBasis& basis, const IndexReport& report, const CertifyOptions& options)
{
    CertificationReport out;
    for (std::size_t i = 0; i < basis.elements.size(); ++i)
        out.integrality.push_back(is_algebraic_integer(element_of(basis, i)));
    out.ring_closed = structure_constants(basis).closed;
    out.discriminant = basis_discriminant(basis);
    out.disc_match = out.discriminant == Rational(report.field_discriminant);
    for (const auto& [p, k] : basis.field.factorization()) {
        (void)k;
        if (!options.check_maximality) {
            MaximalityResult skipped;
            skipped.reason = "maximality enumeration disabled";
            out.maximality.emplace(p, std::move(skipped));
            continue;
        }
        out.maximality.emplace(p, p_maximality_enum(basis, p, options.enum_budget, options.threads));
    }
    return out;
}

std::string to_string(MaximalityResult::Status s)
{
    switch (s) {
    case MaximalityResult::Status::Proved:
        return "proved";
    case MaximalityResult::Status::CounterexampleFound:
        return "counterexample";
    case MaximalityResult::Status::Skipped:
        return "skipped";
    }
    return "unknown";
}

}  // namespace purefield::oracle
