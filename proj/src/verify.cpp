#include "splitq/verify.hpp"

#include <algorithm>
#include <map>

#include "splitq/formulas.hpp"

namespace splitq {

namespace {

constexpr std::size_t kMismatchCap = 20;

struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed * 0x9e3779b97f4a7c15ull + 1) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};

std::uint64_t u_pow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void report(VerifySuite& suite, bool pass, const std::string& detail) {
    ++suite.checks;
    if (!pass && suite.mismatches.size() < kMismatchCap) suite.mismatches.push_back(detail);
    if (!pass && suite.mismatches.size() == kMismatchCap)
        suite.mismatches.push_back("(further mismatches suppressed)");
}

// SNF self-consistency on one matrix: witness identity, chain shape, and the
// determinantal-divisor route.
bool snf_consistent(const PolyMatrix& p) {
    const SmithForm s = smith_normal_form(p, true);
    const std::size_t r = std::min(p.rows(), p.cols());
    for (std::size_t i = 0; i < r; ++i) {
        const Poly& e = s.diagonal[i];
        if (!e.is_zero() && !e.is_monic()) return false;
        if (i + 1 < r) {
            if (e.is_zero() && !s.diagonal[i + 1].is_zero()) return false;
            if (!e.is_zero() && !e.divides(s.diagonal[i + 1])) return false;
        }
    }
    if ((*s.left) * p * (*s.right) !=
        PolyMatrix::diagonal(p.field(), p.rows(), p.cols(), s.diagonal))
        return false;
    const Poly dl = poly_det(*s.left), dr = poly_det(*s.right);
    if (!dl.is_constant() || dl.is_zero() || !dr.is_constant() || dr.is_zero()) return false;
    Poly prev = Poly::one(p.field());
    for (std::size_t i = 1; i <= r; ++i) {
        const Poly di = determinantal_divisor(p, static_cast<unsigned>(i));
        if (prev.is_zero() || di.is_zero()) {
            if (!s.diagonal[i - 1].is_zero()) return false;
        } else if (Poly::exact_div(di, prev) != s.diagonal[i - 1]) {
            return false;
        }
        prev = di;
    }
    return true;
}

void suite_snf(const Fq& f, unsigned max_md, Rng& rng, VerifySuite& out) {
    const unsigned cap = std::min(3u, std::max(1u, max_md));
    for (unsigned n = 1; n <= cap; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned d = 1; d <= 2; ++d) {
                const unsigned digits = n * k * d;
                std::uint64_t total = 1;
                bool exhaustive = true;
                for (unsigned i = 0; i < digits && exhaustive; ++i) {
                    total *= f.q();
                    if (total > 65536) exhaustive = false;
                }
                const std::string where = "M_q(" + std::to_string(n) + "," +
                                          std::to_string(k) + "," + std::to_string(d) +
                                          ")";
                if (exhaustive) {
                    for (std::uint64_t r = 0; r < total; ++r)
                        report(out, snf_consistent(element_from_rank(f, n, k, d, r)),
                               "snf inconsistency in " + where + " rank " +
                                   std::to_string(r));
                } else {
                    for (unsigned t = 0; t < 1000; ++t) {
                        std::vector<FqMat> coeffs;
                        for (unsigned j = 0; j < d; ++j) {
                            FqMat c(f, n, k);
                            for (unsigned a = 0; a < n; ++a)
                                for (unsigned b = 0; b < k; ++b)
                                    c.set(a, b, rng.next() % f.q());
                            coeffs.push_back(std::move(c));
                        }
                        report(out,
                               snf_consistent(PolyMatrix::degree_shaped(f, n, k, coeffs)),
                               "snf inconsistency in " + where + " sample " +
                                   std::to_string(t));
                    }
                }
            }
}

void suite_lemma31(const Fq& f, unsigned max_md, Rng& rng, VerifySuite& out) {
    const auto check = [&](unsigned m, unsigned d, const std::vector<FqMat>& coeffs,
                           const std::string& label) {
        auto base = invariant_factors(PolyMatrix::degree_shaped(f, m, m, coeffs));
        auto lifted = invariant_factors(PolyMatrix::char_matrix(block_companion(coeffs)));
        bool pass = lifted.size() == static_cast<std::size_t>(m) * d;
        for (std::size_t i = 0; pass && i + m < lifted.size(); ++i)
            pass = lifted[i].is_one();
        for (std::size_t i = 0; pass && i < m; ++i)
            pass = lifted[lifted.size() - m + i] == base[i];
        report(out, pass, "companion lift mismatch at m=" + std::to_string(m) +
                              " d=" + std::to_string(d) + " " + label);
    };
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned d = 1; d <= 2; ++d) {
            if (m * d > max_md) continue;
            const unsigned digits = m * m * d;
            std::uint64_t total = 1;
            bool exhaustive = true;
            for (unsigned i = 0; i < digits && exhaustive; ++i) {
                total *= f.q();
                if (total > 65536) exhaustive = false;
            }
            if (exhaustive) {
                const std::uint64_t step = u_pow(f.q(), m * m);
                for (std::uint64_t r = 0; r < total; ++r) {
                    std::uint64_t rr = r;
                    std::vector<FqMat> coeffs;
                    for (unsigned t = 0; t < d; ++t) {
                        coeffs.push_back(FqMat::from_rank(f, m, m, rr % step));
                        rr /= step;
                    }
                    check(m, d, coeffs, "rank " + std::to_string(r));
                }
            } else {
                for (unsigned t = 0; t < 1000; ++t) {
                    std::vector<FqMat> coeffs;
                    for (unsigned j = 0; j < d; ++j) {
                        FqMat c(f, m, m);
                        for (unsigned a = 0; a < m; ++a)
                            for (unsigned b = 0; b < m; ++b)
                                c.set(a, b, rng.next() % f.q());
                        coeffs.push_back(std::move(c));
                    }
                    check(m, d, coeffs, "sample " + std::to_string(t));
                }
            }
        }
}

void suite_mu_reductions(const Fq& f, const BruteOptions& opts, VerifySuite& lem36,
                         VerifySuite& totals) {
    // Histograms for n,k <= 2, d <= 2, reused across both suites.
    std::map<std::tuple<unsigned, unsigned, unsigned>, MuHistogram> hists;
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned k = 1; k <= n; ++k)
            for (unsigned d = 1; d <= 2; ++d)
                hists[{n, k, d}] = mu_brute(f, n, k, d, opts);

    for (const auto& [key, hist] : hists) {
        const auto [n, k, d] = key;
        mpz_class total = 0;
        for (const auto& [inv, c] : hist) {
            total += c;
            report(totals, inv.degree() <= k * d,
                   "histogram key degree exceeds k*d in M_q(" + std::to_string(n) + "," +
                       std::to_string(k) + "," + std::to_string(d) + "): " +
                       inv.to_string());
        }
        mpz_class expect;
        mpz_ui_pow_ui(expect.get_mpz_t(), f.q(), n * k * d);
        report(totals, total == expect,
               "histogram total mismatch for M_q(" + std::to_string(n) + "," +
                   std::to_string(k) + "," + std::to_string(d) + ")");

        for (const auto& [inv, c] : hist) {
            auto [red, d1] = reduce_invariants(inv);
            if (d1 == 0) continue;
            const unsigned dp = d - d1;
            if (dp == 0) {
                report(lem36, c == 1,
                       "full-degree class count != 1: " + inv.to_string());
                continue;
            }
            const auto& target = hists.at({n, k, dp});
            auto it = target.find(red);
            const mpz_class reduced = it == target.end() ? mpz_class(0) : it->second;
            report(lem36, c == reduced,
                   "strip-p1 count mismatch: " + inv.to_string() + " vs " +
                       red.to_string());
        }
    }
}

void suite_sigma_sweeps(const Fq& f, unsigned max_md, const BruteOptions& opts,
                        Rng& rng, VerifyReport& rep) {
    VerifySuite thm34{"thm3.4-identity", 0, {}};
    VerifySuite closed{"sigma-closed-vs-brute", 0, {}};
    VerifySuite exists{"exists-vs-brute", 0, {}};
    VerifySuite type_inv{"sigma-type-invariance", 0, {}};
    VerifySuite sched{"schedule-independence", 0, {}};
    VerifySuite simil{"similarity-invariance", 0, {}};
    VerifySuite kappa{"kappa-vs-sigma", 0, {}};
    unsigned conj_tick = 0;

    for (unsigned dim = 1; dim <= max_md; ++dim) {
        const auto classes = enumerate_classes(f, dim);
        for (unsigned d = 1; d <= dim; ++d) {
            if (dim % d != 0) continue;
            const unsigned m = dim / d;
            if (m > 2 && d > 1) continue;  // envelope: m <= 2 beyond depth one
            std::map<SimilarityType, std::vector<mpz_class>> by_type;
            for (const auto& cls : classes) {
                const FqMat t = operator_from_invariants(cls);
                const mpz_class brute = sigma_brute(m, d, t, opts);
                report(sched, brute == sigma_brute_serial(m, d, t, opts),
                       "sigma parallel/serial split at m=" + std::to_string(m) +
                           " d=" + std::to_string(d) + " I=" + cls.to_string());
                by_type[type_of(cls)].push_back(brute);

                auto sc = sigma_closed(m, d, cls);
                if (sc.covered())
                    report(closed, *sc.value == brute,
                           "sigma closed " + sc.rule + " != brute at m=" +
                               std::to_string(m) + " d=" + std::to_string(d) +
                               " I=" + cls.to_string());
                auto st = sigma_type_closed(f.q(), m, d, type_of(cls));
                if (st.covered())
                    report(closed, *st.value == brute,
                           "sigma type closed " + st.rule + " != brute at m=" +
                               std::to_string(m) + " d=" + std::to_string(d) +
                               " tau=" + type_of(cls).to_string());
                report(exists, exists_splitting(m, d, cls) == (brute > 0),
                       "existence mismatch at m=" + std::to_string(m) +
                           " d=" + std::to_string(d) + " I=" + cls.to_string());

                // Conjugation leaves the count unchanged; subsampled past dim 3.
                if (dim <= 3 || ++conj_tick % 4 == 0) {
                    FqMat s(f, dim, dim);
                    do {
                        for (unsigned i = 0; i < dim; ++i)
                            for (unsigned j = 0; j < dim; ++j)
                                s.set(i, j, rng.next() % f.q());
                    } while (!s.is_invertible());
                    // Inverse via the augmented RREF of [S | I].
                    FqMat aug(f, dim, 2 * dim);
                    for (unsigned i = 0; i < dim; ++i) {
                        for (unsigned j = 0; j < dim; ++j) aug.set(i, j, s.at(i, j));
                        aug.set(i, dim + i, 1);
                    }
                    FqMat red = aug.rref();
                    FqMat sinv(f, dim, dim);
                    for (unsigned i = 0; i < dim; ++i)
                        for (unsigned j = 0; j < dim; ++j)
                            sinv.set(i, j, red.at(i, dim + j));
                    report(simil, sigma_brute(m, d, s * t * sinv, opts) == brute,
                           "conjugation changed sigma at m=" + std::to_string(m) +
                               " d=" + std::to_string(d) + " I=" + cls.to_string());
                }
            }
            for (const auto& [tau, vals] : by_type)
                report(type_inv,
                       std::all_of(vals.begin(), vals.end(),
                                   [&](const mpz_class& v) { return v == vals.front(); }),
                       "sigma differs within type " + tau.to_string() + " at m=" +
                           std::to_string(m) + " d=" + std::to_string(d));
        }
    }

    // The thm3.4-identity and kappa suites run on the square histograms.
    for (unsigned m = 1; m <= 2; ++m)
        for (unsigned d = 1; d <= 2; ++d) {
            if (m * d > max_md) continue;
            auto hist = mu_brute(f, m, m, d, opts);
            report(sched, hist == mu_brute_serial(f, m, m, d, opts),
                   "mu parallel/serial split at m=" + std::to_string(m) +
                       " d=" + std::to_string(d));
            const mpz_class gamma = gamma_q(f.q(), m);
            unsigned kappa_budget = 8;
            for (const auto& [inv, c] : hist) {
                const FqMat t = operator_from_invariants(inv);
                const mpz_class sb = sigma_brute(m, d, t, opts);
                report(thm34, sb * gamma == centralizer_order(inv) * c,
                       "identity fails at m=" + std::to_string(m) + " d=" +
                           std::to_string(d) + " I=" + inv.to_string());
                if (kappa_budget > 0) {
                    --kappa_budget;
                    report(kappa, kappa_brute(m, d, t, opts) ==
                                      kappa_from_sigma(f.q(), m, d, sb),
                           "kappa mismatch at m=" + std::to_string(m) + " d=" +
                               std::to_string(d) + " I=" + inv.to_string());
                }
            }
        }

    rep.suites.push_back(std::move(thm34));
    rep.suites.push_back(std::move(closed));
    rep.suites.push_back(std::move(exists));
    rep.suites.push_back(std::move(type_inv));
    rep.suites.push_back(std::move(sched));
    rep.suites.push_back(std::move(simil));
    rep.suites.push_back(std::move(kappa));
}

void suite_subspaces(const Fq& f, unsigned max_md, VerifySuite& out) {
    const unsigned cap = std::min(5u, std::max(2u, max_md));
    for (unsigned N = 1; N <= cap; ++N)
        for (unsigned m = 1; m <= N; ++m) {
            mpz_class count = 0;
            for_each_subspace(f, N, m, [&](const FqMat&) { ++count; });
            report(out, count == q_binomial(N, m, f.q()),
                   "subspace stream length mismatch at N=" + std::to_string(N) +
                       " m=" + std::to_string(m));
        }
}

}  // namespace

bool VerifyReport::ok() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

std::uint64_t VerifyReport::total_checks() const {
    std::uint64_t n = 0;
    for (const auto& s : suites) n += s.checks;
    return n;
}

VerifyReport run_verify(const Fq& f, unsigned max_md, const BruteOptions& opts,
                        std::uint64_t seed) {
    if (max_md == 0) throw std::invalid_argument("verify: max-md must be positive");
    Rng rng(seed ^ (f.q() * 0x517cc1b727220a95ull));
    VerifyReport rep;

    VerifySuite snf{"snf-witness-and-ratios", 0, {}};
    suite_snf(f, max_md, rng, snf);
    rep.suites.push_back(std::move(snf));

    VerifySuite lem31{"lemma3.1-lift", 0, {}};
    suite_lemma31(f, max_md, rng, lem31);
    rep.suites.push_back(std::move(lem31));

    VerifySuite lem36{"lemma3.6-strip", 0, {}};
    VerifySuite totals{"histogram-totals", 0, {}};
    suite_mu_reductions(f, opts, lem36, totals);
    rep.suites.push_back(std::move(lem36));
    rep.suites.push_back(std::move(totals));

    suite_sigma_sweeps(f, max_md, opts, rng, rep);

    VerifySuite sub{"subspace-stream", 0, {}};
    suite_subspaces(f, max_md, sub);
    rep.suites.push_back(std::move(sub));

    return rep;
}

}  // namespace splitq
