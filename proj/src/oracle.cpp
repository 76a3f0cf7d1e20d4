#include "splitq/oracle.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>
#include <utility>

#include <omp.h>

#include "splitq/errors.hpp"
#include "splitq/polymat.hpp"

namespace splitq {

namespace {

mpz_class z_pow(std::uint32_t q, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

void check_budget(const mpz_class& total, const BruteOptions& opts, const char* what) {
    if (total > mpz_class(static_cast<unsigned long>(opts.budget)))
        throw budget_error(std::string(what) + ": " + total.get_str() +
                           " enumerations exceed budget " + std::to_string(opts.budget));
}

unsigned resolve_threads(const BruteOptions& opts) {
    if (opts.threads > 0) return static_cast<unsigned>(opts.threads);
    int n = omp_get_max_threads();
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

// Contiguous split of [0, total) into at most parts chunks.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                 unsigned parts) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (total == 0) return out;
    if (parts == 0) parts = 1;
    const std::uint64_t n = std::min<std::uint64_t>(parts, total);
    const std::uint64_t base = total / n, extra = total % n;
    std::uint64_t lo = 0;
    for (std::uint64_t c = 0; c < n; ++c) {
        std::uint64_t len = base + (c < extra ? 1 : 0);
        out.emplace_back(lo, lo + len);
        lo += len;
    }
    return out;
}

// Runs body(lo, hi) over fixed chunks of [0, total) in parallel; partial
// results land in index order, so the merge the caller performs never depends
// on the schedule.
template <typename Acc, typename Body>
std::vector<Acc> run_chunked(std::uint64_t total, const BruteOptions& opts, Body body) {
    const unsigned nt = resolve_threads(opts);
    auto chunks = split_range(total, nt * 8);
    std::vector<Acc> parts(chunks.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(chunks.size()); ++i) {
        bool skip;
#pragma omp critical(splitq_oracle_err)
        skip = static_cast<bool>(err);
        if (skip) continue;
        try {
            parts[i] = body(chunks[i].first, chunks[i].second);
        } catch (...) {
#pragma omp critical(splitq_oracle_err)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return parts;
}

// Canonical RREF shape: pivot columns plus the coordinates of the free
// entries, row-major.
struct RrefProfile {
    std::vector<unsigned> pivots;
    std::vector<std::pair<unsigned, unsigned>> free_pos;
    std::uint64_t count = 1;  // q^{#free_pos}
};

bool next_combination(std::vector<unsigned>& c, unsigned N) {
    const unsigned m = static_cast<unsigned>(c.size());
    for (unsigned i = m; i-- > 0;) {
        if (c[i] + (m - i) < N) {
            ++c[i];
            for (unsigned j = i + 1; j < m; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<RrefProfile> rref_profiles(std::uint32_t q, unsigned N, unsigned m) {
    if (m == 0 || m > N) throw std::invalid_argument("subspace dimension out of range");
    std::vector<RrefProfile> out;
    std::vector<unsigned> piv(m);
    for (unsigned i = 0; i < m; ++i) piv[i] = i;
    do {
        RrefProfile pr;
        pr.pivots = piv;
        std::vector<bool> is_piv(N, false);
        for (unsigned c : piv) is_piv[c] = true;
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = piv[i] + 1; j < N; ++j)
                if (!is_piv[j]) pr.free_pos.emplace_back(i, j);
        for (std::size_t t = 0; t < pr.free_pos.size(); ++t) {
            if (pr.count > std::numeric_limits<std::uint64_t>::max() / q)
                throw std::invalid_argument("subspace enumeration too large");
            pr.count *= q;
        }
        out.push_back(std::move(pr));
    } while (next_combination(piv, N));
    return out;
}

FqMat basis_from_profile(const Fq& f, unsigned N, const RrefProfile& pr,
                         std::uint64_t rank) {
    FqMat b(f, pr.pivots.size(), N);
    for (std::size_t i = 0; i < pr.pivots.size(); ++i) b.set(i, pr.pivots[i], 1);
    for (const auto& [i, j] : pr.free_pos) {
        b.set(i, j, static_cast<elem>(rank % f.q()));
        rank /= f.q();
    }
    return b;
}

// Rows T^j v for the given vectors, j = 0..depth-1, grouped by j.
FqMat iterate_rows(const FqMat& t, const FqMat& w, unsigned depth) {
    const std::size_t m = w.rows(), N = w.cols();
    FqMat s(t.field(), m * depth, N);
    std::vector<std::vector<elem>> cur(m, std::vector<elem>(N));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < N; ++j) cur[i][j] = w.at(i, j);
    for (unsigned jj = 0; jj < depth; ++jj) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < N; ++j) s.set(jj * m + i, j, cur[i][j]);
        if (jj + 1 < depth)
            for (std::size_t i = 0; i < m; ++i) cur[i] = t.mul_vec(cur[i]);
    }
    return s;
}

void require_operator(const FqMat& t, unsigned m, unsigned d) {
    if (t.rows() != t.cols()) throw std::invalid_argument("operator matrix must be square");
    if (m == 0 || d == 0) throw std::invalid_argument("m and d must be positive");
    if (t.rows() != static_cast<std::size_t>(m) * d)
        throw std::invalid_argument("operator dimension must equal m*d");
}

std::uint64_t to_u64(const mpz_class& v) { return mpz_get_ui(v.get_mpz_t()); }

}  // namespace

void for_each_subspace(const Fq& f, unsigned N, unsigned m,
                       const std::function<void(const FqMat&)>& fn) {
    for (const auto& pr : rref_profiles(f.q(), N, m))
        for (std::uint64_t r = 0; r < pr.count; ++r) fn(basis_from_profile(f, N, pr, r));
}

bool is_splitting(const FqMat& t, const FqMat& w, unsigned d) {
    require_operator(t, static_cast<unsigned>(w.rows()), d);
    if (w.cols() != t.rows()) throw std::invalid_argument("subspace basis width mismatch");
    return iterate_rows(t, w, d).rank() == t.rows();
}

bool is_anti_invariant(const FqMat& t, const FqMat& w, unsigned ell) {
    if (t.rows() != t.cols()) throw std::invalid_argument("operator matrix must be square");
    if (w.cols() != t.rows()) throw std::invalid_argument("subspace basis width mismatch");
    const FqMat s = iterate_rows(t, w, ell + 1);
    return s.rank() == s.rows();
}

std::vector<std::vector<elem>> krylov_span(const FqMat& t,
                                           const std::vector<std::vector<elem>>& vs,
                                           unsigned d) {
    if (t.rows() != t.cols()) throw std::invalid_argument("operator matrix must be square");
    if (d == 0 || vs.empty()) return {};
    FqMat w = FqMat::from_rows(t.field(), vs);
    if (w.cols() != t.rows()) throw std::invalid_argument("vector length mismatch");
    const FqMat r = iterate_rows(t, w, d).rref();
    std::vector<std::vector<elem>> out;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::vector<elem> row(r.cols());
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols(); ++j) {
            row[j] = r.at(i, j);
            nonzero = nonzero || row[j] != 0;
        }
        if (!nonzero) break;  // RREF sorts zero rows last
        out.push_back(std::move(row));
    }
    return out;
}

mpz_class sigma_brute_serial(unsigned m, unsigned d, const FqMat& t,
                             const BruteOptions& opts) {
    require_operator(t, m, d);
    const unsigned N = static_cast<unsigned>(t.rows());
    check_budget(q_binomial(N, m, t.field().q()), opts, "sigma_brute");
    mpz_class count = 0;
    for_each_subspace(t.field(), N, m, [&](const FqMat& w) {
        if (is_splitting(t, w, d)) ++count;
    });
    return count;
}

mpz_class sigma_brute(unsigned m, unsigned d, const FqMat& t, const BruteOptions& opts) {
    require_operator(t, m, d);
    const unsigned N = static_cast<unsigned>(t.rows());
    const Fq& f = t.field();
    check_budget(q_binomial(N, m, f.q()), opts, "sigma_brute");
    const auto profiles = rref_profiles(f.q(), N, m);
    mpz_class count = 0;
    for (const auto& pr : profiles) {
        auto parts = run_chunked<std::uint64_t>(
            pr.count, opts, [&](std::uint64_t lo, std::uint64_t hi) {
                std::uint64_t c = 0;
                for (std::uint64_t r = lo; r < hi; ++r)
                    if (is_splitting(t, basis_from_profile(f, N, pr, r), d)) ++c;
                return c;
            });
        for (std::uint64_t c : parts) count += static_cast<unsigned long>(c);
    }
    return count;
}

namespace {

using MuPartial = std::map<InvariantFactors, std::uint64_t>;

InvariantFactors mu_key(const Fq& f, unsigned n, unsigned k, unsigned d,
                        std::uint64_t rank) {
    // The constructor re-checks the divisibility chain, cross-validating the
    // Smith form computed for each sample.
    return InvariantFactors(invariant_factors(element_from_rank(f, n, k, d, rank)));
}

}  // namespace

PolyMatrix element_from_rank(const Fq& f, unsigned n, unsigned k, unsigned d,
                             std::uint64_t rank) {
    std::uint64_t step = 1;
    for (unsigned t = 0; t < n * k; ++t) step *= f.q();
    std::vector<FqMat> coeffs;
    coeffs.reserve(d);
    for (unsigned t = 0; t < d; ++t) {
        coeffs.push_back(FqMat::from_rank(f, n, k, rank % step));
        rank /= step;
    }
    return PolyMatrix::degree_shaped(f, n, k, coeffs);
}

MuHistogram mu_brute_serial(const Fq& f, unsigned n, unsigned k, unsigned d,
                            const BruteOptions& opts) {
    if (k == 0 || k > n) throw std::invalid_argument("mu_brute: need 1 <= k <= n");
    if (d == 0) throw std::invalid_argument("mu_brute: d must be positive");
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(n) * k * d);
    check_budget(total, opts, "mu_brute");
    MuHistogram hist;
    for (std::uint64_t r = 0, e = to_u64(total); r < e; ++r) hist[mu_key(f, n, k, d, r)] += 1;
    return hist;
}

MuHistogram mu_brute(const Fq& f, unsigned n, unsigned k, unsigned d,
                     const BruteOptions& opts) {
    if (k == 0 || k > n) throw std::invalid_argument("mu_brute: need 1 <= k <= n");
    if (d == 0) throw std::invalid_argument("mu_brute: d must be positive");
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(n) * k * d);
    check_budget(total, opts, "mu_brute");
    auto parts = run_chunked<MuPartial>(
        to_u64(total), opts, [&](std::uint64_t lo, std::uint64_t hi) {
            MuPartial h;
            for (std::uint64_t r = lo; r < hi; ++r) h[mu_key(f, n, k, d, r)] += 1;
            return h;
        });
    MuHistogram hist;
    for (const auto& part : parts)
        for (const auto& [key, c] : part) hist[key] += static_cast<unsigned long>(c);
    return hist;
}

namespace {

// N^2 x N^2 coefficient matrix of XA - AX = 0 in the unknowns X_{rs}.
FqMat commutant_system(const FqMat& a) {
    const Fq& f = a.field();
    const std::size_t N = a.rows();
    FqMat sys(f, N * N, N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t r = 0; r < N; ++r)
                for (std::size_t s = 0; s < N; ++s) {
                    elem v = f.sub(r == i ? a.at(s, j) : 0, s == j ? a.at(i, r) : 0);
                    sys.set(i * N + j, r * N + s, v);
                }
    return sys;
}

FqMat combine_basis(const Fq& f, std::size_t N,
                    const std::vector<std::vector<elem>>& basis, std::uint64_t rank) {
    FqMat x(f, N, N);
    for (const auto& b : basis) {
        const elem c = static_cast<elem>(rank % f.q());
        rank /= f.q();
        if (c == 0) continue;
        for (std::size_t t = 0; t < N * N; ++t)
            x.set(t / N, t % N, f.add(x.at(t / N, t % N), f.mul(c, b[t])));
    }
    return x;
}

}  // namespace

mpz_class centralizer_brute_serial(const FqMat& a, const BruteOptions& opts) {
    if (a.rows() != a.cols()) throw std::invalid_argument("centralizer: matrix must be square");
    const Fq& f = a.field();
    const std::size_t N = a.rows();
    const auto basis = commutant_system(a).nullspace();
    const mpz_class total = z_pow(f.q(), basis.size());
    check_budget(total, opts, "centralizer_brute");
    mpz_class count = 0;
    for (std::uint64_t r = 0, e = to_u64(total); r < e; ++r)
        if (combine_basis(f, N, basis, r).is_invertible()) ++count;
    return count;
}

mpz_class centralizer_brute(const FqMat& a, const BruteOptions& opts) {
    if (a.rows() != a.cols()) throw std::invalid_argument("centralizer: matrix must be square");
    const Fq& f = a.field();
    const std::size_t N = a.rows();
    const auto basis = commutant_system(a).nullspace();
    const mpz_class total = z_pow(f.q(), basis.size());
    check_budget(total, opts, "centralizer_brute");
    auto parts = run_chunked<std::uint64_t>(
        to_u64(total), opts, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t c = 0;
            for (std::uint64_t r = lo; r < hi; ++r)
                if (combine_basis(f, N, basis, r).is_invertible()) ++c;
            return c;
        });
    mpz_class count = 0;
    for (std::uint64_t c : parts) count += static_cast<unsigned long>(c);
    return count;
}

namespace {

FqMat vectors_from_rank(const Fq& f, unsigned m, unsigned N, std::uint64_t rank) {
    FqMat w(f, m, N);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < N; ++j) {
            w.set(i, j, static_cast<elem>(rank % f.q()));
            rank /= f.q();
        }
    return w;
}

}  // namespace

mpq_class kappa_brute_serial(unsigned m, unsigned d, const FqMat& t,
                             const BruteOptions& opts) {
    require_operator(t, m, d);
    const Fq& f = t.field();
    const unsigned N = static_cast<unsigned>(t.rows());
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(N) * m);
    check_budget(total, opts, "kappa_brute");
    mpz_class favorable = 0;
    for (std::uint64_t r = 0, e = to_u64(total); r < e; ++r)
        if (iterate_rows(t, vectors_from_rank(f, m, N, r), d).rank() == N) ++favorable;
    mpq_class out(favorable, total);
    out.canonicalize();
    return out;
}

mpq_class kappa_brute(unsigned m, unsigned d, const FqMat& t, const BruteOptions& opts) {
    require_operator(t, m, d);
    const Fq& f = t.field();
    const unsigned N = static_cast<unsigned>(t.rows());
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(N) * m);
    check_budget(total, opts, "kappa_brute");
    auto parts = run_chunked<std::uint64_t>(
        to_u64(total), opts, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t c = 0;
            for (std::uint64_t r = lo; r < hi; ++r)
                if (iterate_rows(t, vectors_from_rank(f, m, N, r), d).rank() == N) ++c;
            return c;
        });
    mpz_class favorable = 0;
    for (std::uint64_t c : parts) favorable += static_cast<unsigned long>(c);
    mpq_class out(favorable, total);
    out.canonicalize();
    return out;
}

namespace {

bool tuple_coprime(const Fq& f, unsigned n, unsigned d, std::uint64_t rank,
                   std::uint64_t step) {
    Poly g = Poly::monic_from_rank(f, d, rank % step);
    rank /= step;
    for (unsigned i = 1; i < n; ++i) {
        if (g.is_one()) return true;
        g = Poly::gcd(g, Poly::monic_from_rank(f, d, rank % step));
        rank /= step;
    }
    return g.is_one();
}

}  // namespace

mpz_class coprime_brute_serial(const Fq& f, unsigned n, unsigned d,
                               const BruteOptions& opts) {
    if (n == 0 || d == 0) throw std::invalid_argument("coprime_brute: need n, d >= 1");
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(n) * d);
    check_budget(total, opts, "coprime_brute");
    const std::uint64_t step = to_u64(z_pow(f.q(), d));
    mpz_class count = 0;
    for (std::uint64_t r = 0, e = to_u64(total); r < e; ++r)
        if (tuple_coprime(f, n, d, r, step)) ++count;
    return count;
}

mpz_class coprime_brute(const Fq& f, unsigned n, unsigned d, const BruteOptions& opts) {
    if (n == 0 || d == 0) throw std::invalid_argument("coprime_brute: need n, d >= 1");
    const mpz_class total = z_pow(f.q(), static_cast<unsigned long>(n) * d);
    check_budget(total, opts, "coprime_brute");
    const std::uint64_t step = to_u64(z_pow(f.q(), d));
    auto parts = run_chunked<std::uint64_t>(
        to_u64(total), opts, [&](std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t c = 0;
            for (std::uint64_t r = lo; r < hi; ++r)
                if (tuple_coprime(f, n, d, r, step)) ++c;
            return c;
        });
    mpz_class count = 0;
    for (std::uint64_t c : parts) count += static_cast<unsigned long>(c);
    return count;
}

FqMat operator_from_invariants(const InvariantFactors& inv) {
    const InvariantFactors core = inv.trimmed();
    if (core.empty())
        throw std::invalid_argument("operator_from_invariants: degree must be positive");
    const Fq& f = core.entries().front().field();
    const unsigned N = core.degree();
    FqMat a(f, N, N);
    std::size_t off = 0;
    for (const auto& p : core.entries()) {
        const FqMat c = companion(p);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) a.set(off + i, off + j, c.at(i, j));
        off += c.rows();
    }
    return a;
}

}  // namespace splitq
