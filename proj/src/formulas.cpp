#include "splitq/formulas.hpp"

#include <stdexcept>

#include "splitq/factor.hpp"

namespace splitq {

namespace {

mpz_class z_pow(std::uint32_t q, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

void require_integral(const mpq_class& v, const char* what) {
    if (v.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral value");
}

void require_count(const mpz_class& v, const char* what) {
    if (v < 0) throw std::logic_error(std::string(what) + ": negative count");
}

// prod_{i=delta+1}^{k} (q^n - q^i)
mpz_class tail_product(std::uint32_t q, unsigned n, unsigned k, unsigned delta) {
    mpz_class r = 1;
    const mpz_class qn = z_pow(q, n);
    for (unsigned i = delta + 1; i <= k; ++i) r *= qn - z_pow(q, i);
    return r;
}

// The depth-one count behind the Thm4.2 rule; inv must have degree <= k.
mpz_class mu_d1_value(std::uint32_t q, unsigned n, unsigned k, const InvariantFactors& inv) {
    const unsigned delta = inv.degree();
    mpq_class v = mpq_class(q_binomial(k, delta, q)) * mpq_class(gamma_q(q, delta));
    v /= mpq_class(centralizer_order(inv));
    v *= mpq_class(tail_product(q, n, k, delta));
    require_integral(v, "mu d=1");
    mpz_class out = v.get_num();
    require_count(out, "mu d=1");
    return out;
}

mpz_class unimodular_value(std::uint32_t q, unsigned n, unsigned k, unsigned d) {
    return z_pow(q, static_cast<unsigned long>(n) * k * (d - 1)) * tail_product(q, n, k, 0);
}

void cross_check(const mpz_class& a, const mpz_class& b, const char* what) {
    if (a != b) throw std::logic_error(std::string(what) + ": overlapping rules disagree");
}

// prod_{j=1}^{r} (1 - q^(-j*e)) as an exact rational.
mpq_class one_minus_q_pow_product(std::uint32_t q, unsigned e, unsigned r) {
    mpq_class prod = 1;
    for (unsigned j = 1; j <= r; ++j) {
        mpq_class t(1);
        t /= mpq_class(z_pow(q, static_cast<unsigned long>(j) * e));
        prod *= mpq_class(1) - t;
    }
    return prod;
}

}  // namespace

InvariantFactors normalize_sigma_tuple(unsigned m, unsigned d, const InvariantFactors& inv) {
    if (m == 0 || d == 0) throw std::invalid_argument("sigma: m and d must be positive");
    if (inv.empty()) throw std::invalid_argument("sigma: empty invariant factor tuple");
    const std::size_t md = static_cast<std::size_t>(m) * d;
    InvariantFactors canon = inv;
    if (canon.length() < md) {
        canon = canon.padded(md);
    } else if (canon.length() > md) {
        const auto& e = canon.entries();
        std::vector<Poly> kept(e.end() - static_cast<std::ptrdiff_t>(md), e.end());
        for (std::size_t i = 0; i + md < e.size(); ++i)
            if (!e[i].is_constant())
                throw std::invalid_argument("sigma: tuple longer than m*d with nonconstant leading entry");
        canon = InvariantFactors(std::move(kept));
    }
    if (canon.degree() != md)
        throw std::invalid_argument("sigma: invariant factor degree must equal m*d");
    return canon;
}

CountResult mu_closed(unsigned n, unsigned k, unsigned d, const InvariantFactors& inv) {
    if (k == 0 || k > n) throw std::invalid_argument("mu: need 1 <= k <= n");
    if (d == 0) throw std::invalid_argument("mu: d must be positive");
    if (inv.length() != k) throw std::invalid_argument("mu: invariant factor tuple must have length k");
    if (inv.degree() > static_cast<std::size_t>(k) * d)
        throw std::invalid_argument("mu: impossible invariant factors (degree exceeds k*d)");
    const std::uint32_t q = inv.entries().front().field().q();

    auto [red, d1] = reduce_invariants(inv);
    const unsigned dp = d - static_cast<unsigned>(d1);

    CountResult r;
    if (dp == 0) {
        // All entries equal p_1 of degree d; a unique matrix attains them.
        r.value = mpz_class(1);
        r.rule = "Cor3.7";
        return r;
    }
    if (k == 1) {
        mpz_class v = z_pow(q, static_cast<unsigned long>(n) * dp) -
                      z_pow(q, static_cast<unsigned long>(n) * dp + 1 - n);
        require_count(v, "mu k=1");
        if (dp == 1) cross_check(v, mu_d1_value(q, n, 1, red), "mu k=1 vs d=1");
        r.value = v;
        r.rule = "Cor4.8";
        return r;
    }
    bool all_ones = true;
    for (const auto& p : red.entries())
        if (!p.is_one()) { all_ones = false; break; }
    if (all_ones) {
        mpz_class v = unimodular_value(q, n, k, dp);
        if (dp == 1) cross_check(v, mu_d1_value(q, n, k, red), "mu unimodular vs d=1");
        r.value = v;
        r.rule = d1 > 0 ? "Lem3.6+Unimodular" : "Unimodular";
        return r;
    }
    if (dp == 1) {
        r.value = mu_d1_value(q, n, k, red);
        r.rule = d1 > 0 ? "Cor4.3" : "Thm4.2";
        return r;
    }
    r.residual = "mu_q(" + std::to_string(n) + "," + std::to_string(k) + "," +
                 std::to_string(dp) + ";" + red.to_string() + ")";
    return r;
}

CountResult sigma_closed(unsigned m, unsigned d, const InvariantFactors& inv) {
    InvariantFactors canon = normalize_sigma_tuple(m, d, inv);
    const std::uint32_t q = canon.entries().front().field().q();
    const std::size_t head = static_cast<std::size_t>(m) * (d - 1);

    CountResult r;
    for (std::size_t i = 0; i < head; ++i) {
        if (!canon.entries()[i].is_constant()) {
            r.value = mpz_class(0);
            r.rule = "Cor2.3";
            return r;
        }
    }
    std::vector<Poly> tail_entries(canon.entries().end() - m, canon.entries().end());
    InvariantFactors tail(std::move(tail_entries));

    if (d == 1) {
        // Every m-dimensional subspace splits trivially.
        r.value = mpz_class(1);
        r.rule = "d=1";
        return r;
    }
    const unsigned d1 = static_cast<unsigned>(tail.entries().front().degree());
    if (d1 == d) {
        // Degree forcing: all m entries equal p_1.
        const Poly& g = tail.entries().front();
        mpq_class v(z_pow(q, static_cast<unsigned long>(m) * m * d));
        v /= mpq_class(gamma_q(q, m));
        for (const auto& [phi, mult] : factorize(g)) {
            (void)mult;
            v *= one_minus_q_pow_product(q, static_cast<unsigned>(phi.degree()), m);
        }
        require_integral(v, "sigma Thm3.9");
        mpz_class out = v.get_num();
        require_count(out, "sigma Thm3.9");
        r.value = out;
        r.rule = "Thm3.9";
        return r;
    }
    if (d1 + 1 == d) {
        auto [red, shift] = reduce_invariants(tail);
        (void)shift;
        mpq_class v(centralizer_order(tail));
        v /= mpq_class(centralizer_order(red));
        require_integral(v, "sigma Cor4.4");
        mpz_class out = v.get_num();
        require_count(out, "sigma Cor4.4");
        r.value = out;
        r.rule = "Cor4.4";
        return r;
    }
    CountResult mu = mu_closed(m, m, d, tail);
    if (mu.covered()) {
        mpq_class v(centralizer_order(tail));
        v *= mpq_class(*mu.value);
        v /= mpq_class(gamma_q(q, m));
        require_integral(v, "sigma Thm3.4");
        mpz_class out = v.get_num();
        require_count(out, "sigma Thm3.4");
        r.value = out;
        r.rule = "Thm3.4+" + mu.rule;
        return r;
    }
    r.residual = "sigma(" + std::to_string(m) + "," + std::to_string(d) + ";" +
                 tail.to_string() + ") via " + mu.residual;
    return r;
}

CountResult sigma_type_closed(std::uint32_t q, unsigned m, unsigned d,
                              const SimilarityType& tau) {
    if (m == 0 || d == 0) throw std::invalid_argument("sigma: m and d must be positive");
    if (tau.size() != static_cast<std::size_t>(m) * d)
        throw std::invalid_argument("sigma: type size must equal m*d");

    CountResult r;
    for (const auto& [deg, lambda] : tau.components()) {
        (void)deg;
        if (lambda.num_parts() > m) {
            r.value = mpz_class(0);
            r.rule = "Cor2.4";
            return r;
        }
    }
    std::size_t s = 0;
    for (const auto& [deg, lambda] : tau.components())
        s += static_cast<std::size_t>(deg) * lambda.part_or_zero(m);

    if (s == d) {
        mpq_class v(z_pow(q, static_cast<unsigned long>(m) * m * d));
        v /= mpq_class(gamma_q(q, m));
        for (const auto& [deg, lambda] : tau.components()) {
            (void)lambda;
            v *= one_minus_q_pow_product(q, deg, m);
        }
        require_integral(v, "sigma Thm3.10");
        mpz_class out = v.get_num();
        require_count(out, "sigma Thm3.10");
        r.value = out;
        r.rule = "Thm3.10";
        return r;
    }
    if (s + 1 == d) {
        mpq_class v(z_pow(q, static_cast<unsigned long>(m) * m * (d - 1)));
        for (const auto& [deg, lambda] : tau.components()) {
            const unsigned last = lambda.part_or_zero(m);
            const unsigned mi = last == 0 ? 0 : lambda.multiplicity(last);
            v *= one_minus_q_pow_product(q, deg, mi);
        }
        require_integral(v, "sigma Cor4.6");
        mpz_class out = v.get_num();
        require_count(out, "sigma Cor4.6");
        // Independent route: c(tau) / c(reduced tau).
        mpq_class alt(centralizer_order(q, tau));
        alt /= mpq_class(centralizer_order(q, reduce_type(tau, m)));
        require_integral(alt, "sigma Cor4.5");
        cross_check(out, alt.get_num(), "sigma type d-1");
        r.value = out;
        r.rule = "Cor4.6";
        return r;
    }
    r.residual = "sigma(" + std::to_string(m) + "," + std::to_string(d) + ";" +
                 tau.to_string() + ")";
    return r;
}

mpq_class kappa_from_sigma(std::uint32_t q, unsigned m, unsigned d, const mpz_class& sigma) {
    mpq_class v(gamma_q(q, m));
    v *= mpq_class(sigma);
    v /= mpq_class(z_pow(q, static_cast<unsigned long>(m) * m * d));
    if (v < 0 || v > 1) throw std::logic_error("kappa outside [0,1]");
    return v;
}

KappaResult kappa_closed(unsigned m, unsigned d, const InvariantFactors& inv) {
    CountResult s = sigma_closed(m, d, inv);
    KappaResult r;
    if (!s.covered()) {
        r.residual = s.residual;
        return r;
    }
    const std::uint32_t q = inv.entries().front().field().q();
    r.value = kappa_from_sigma(q, m, d, *s.value);
    r.rule = "Prop2.5+" + s.rule;
    return r;
}

KappaResult kappa_type_closed(std::uint32_t q, unsigned m, unsigned d,
                              const SimilarityType& tau) {
    CountResult s = sigma_type_closed(q, m, d, tau);
    KappaResult r;
    if (!s.covered()) {
        r.residual = s.residual;
        return r;
    }
    r.value = kappa_from_sigma(q, m, d, *s.value);
    r.rule = "Prop2.5+" + s.rule;
    return r;
}

bool exists_splitting(unsigned m, unsigned d, const InvariantFactors& inv) {
    InvariantFactors canon = normalize_sigma_tuple(m, d, inv);
    const std::size_t head = static_cast<std::size_t>(m) * (d - 1);
    for (std::size_t i = 0; i < head; ++i)
        if (!canon.entries()[i].is_constant()) return false;
    return true;
}

bool exists_splitting_type(unsigned m, unsigned d, const SimilarityType& tau) {
    if (m == 0 || d == 0) throw std::invalid_argument("sigma: m and d must be positive");
    if (tau.size() != static_cast<std::size_t>(m) * d)
        throw std::invalid_argument("sigma: type size must equal m*d");
    for (const auto& [deg, lambda] : tau.components()) {
        (void)deg;
        if (lambda.num_parts() > m) return false;
    }
    return true;
}

mpz_class coprime_tuple_count(std::uint32_t q, unsigned n, unsigned d) {
    if (n < 2) throw std::invalid_argument("coprime count: need n >= 2");
    if (d == 0) throw std::invalid_argument("coprime count: need d >= 1");
    return z_pow(q, static_cast<unsigned long>(n) * d) -
           z_pow(q, static_cast<unsigned long>(n) * (d - 1) + 1);
}

mpz_class unimodular_count(std::uint32_t q, unsigned n, unsigned k, unsigned d) {
    if (k == 0 || k > n) throw std::invalid_argument("unimodular count: need 1 <= k <= n");
    if (d == 0) throw std::invalid_argument("unimodular count: need d >= 1");
    return unimodular_value(q, n, k, d);
}

}  // namespace splitq
