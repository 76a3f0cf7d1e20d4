#include "splitq/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace splitq {

namespace {

void require_monic_nonconstant(const Poly& f) {
    if (!f.is_monic() || f.degree() < 1)
        throw std::invalid_argument("factorization requires a monic polynomial of degree >= 1");
}

void require_monic(const Poly& f) {
    if (!f.is_monic())
        throw std::invalid_argument("factorization requires a monic polynomial");
}

mpz_class q_pow(std::uint32_t q, unsigned long n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, n);
    return r;
}

// x^(q^m) mod f via m Frobenius steps.
Poly frobenius_power(const Poly& f, unsigned m) {
    const Fq& k = f.field();
    Poly h = Poly::mod(Poly::x(k), f);
    mpz_class q(k.q());
    for (unsigned i = 0; i < m; ++i) h = Poly::powmod(h, q, f);
    return h;
}

// f(x) = g(x^p) -> g, taking p-th roots of the surviving coefficients.
Poly pth_root_poly(const Poly& f) {
    const Fq& k = f.field();
    std::vector<elem> v(static_cast<std::size_t>(f.degree() / k.p()) + 1, 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = k.pth_root(f.coeff(i * k.p()));
    return Poly(k, std::move(v));
}

void merge_term(Factorization& out, const Poly& g, unsigned e) {
    for (auto& [h, m] : out)
        if (h == g) {
            m += e;
            return;
        }
    out.emplace_back(g, e);
}

void sort_canonical(Factorization& fac) {
    std::sort(fac.begin(), fac.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

// Splits a squarefree product of irreducibles all of degree d.
void equal_degree_split(const Poly& f, unsigned d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    const Fq& k = f.field();
    unsigned n = static_cast<unsigned>(f.degree());
    if (n == static_cast<unsigned>(d)) {
        out.push_back(f);
        return;
    }
    std::uniform_int_distribution<std::uint32_t> dist(0, k.q() - 1);
    while (true) {
        std::vector<elem> codes(n, 0);
        for (auto& c : codes) c = dist(rng);
        Poly a(k, std::move(codes));
        if (a.degree() < 1) continue;
        Poly g = Poly::gcd(a, f);
        if (g.degree() == 0) {
            if (k.p() == 2) {
                // trace map over F_{2^e}: a + a^2 + ... + a^(2^(ed-1))
                Poly t = Poly::mod(a, f);
                Poly pw = t;
                mpz_class two(2);
                for (unsigned i = 1; i < k.e() * d; ++i) {
                    pw = Poly::powmod(pw, two, f);
                    t = Poly::mod(t + pw, f);
                }
                g = Poly::gcd(t, f);
            } else {
                mpz_class ex = (q_pow(k.q(), d) - 1) / 2;
                Poly b = Poly::powmod(a, ex, f);
                g = Poly::gcd(b - Poly::one(k), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(Poly::exact_div(f, g), d, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a squarefree monic f.
std::vector<Poly> factor_squarefree(Poly f, std::mt19937_64& rng) {
    const Fq& k = f.field();
    std::vector<Poly> out;
    Poly h = Poly::mod(Poly::x(k), f);
    mpz_class q(k.q());
    for (unsigned d = 1; f.degree() >= 1; ++d) {
        if (2 * d > static_cast<unsigned>(f.degree())) {
            out.push_back(f);
            break;
        }
        h = Poly::powmod(h, q, f);
        Poly g = Poly::gcd(h - Poly::x(k), f);
        if (g.degree() > 0) {
            equal_degree_split(g, d, rng, out);
            f = Poly::exact_div(f, g);
            h = Poly::mod(h, f);
        }
    }
    return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    require_monic_nonconstant(f);
    const Fq& k = f.field();
    unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    if (!(frobenius_power(f, n) - Poly::mod(Poly::x(k), f)).is_zero()) return false;
    unsigned m = n;
    std::vector<unsigned> prime_divs;
    for (unsigned r = 2; r * r <= m; ++r)
        if (m % r == 0) {
            prime_divs.push_back(r);
            while (m % r == 0) m /= r;
        }
    if (m > 1) prime_divs.push_back(m);
    for (unsigned r : prime_divs) {
        Poly g = frobenius_power(f, n / r) - Poly::mod(Poly::x(k), f);
        if (Poly::gcd(g, f).degree() != 0) return false;
    }
    return true;
}

Factorization squarefree_decomposition(const Poly& f) {
    require_monic(f);
    if (f.degree() == 0) return {};
    const Fq& k = f.field();
    Factorization out;
    Poly fd = f.derivative();
    if (fd.is_zero()) {
        for (auto& [g, e] : squarefree_decomposition(pth_root_poly(f)))
            merge_term(out, g, e * k.p());
        sort_canonical(out);
        return out;
    }
    Poly c = Poly::gcd(f, fd);
    Poly w = Poly::exact_div(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        Poly y = Poly::gcd(w, c);
        Poly z = Poly::exact_div(w, y);
        if (z.degree() > 0) merge_term(out, z, i);
        ++i;
        w = std::move(y);
        c = Poly::exact_div(c, w);
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decomposition(pth_root_poly(c)))
            merge_term(out, g, e * k.p());
    }
    sort_canonical(out);
    return out;
}

Factorization factorize(const Poly& f, std::uint64_t seed) {
    require_monic(f);
    if (f.degree() == 0) return {};
    std::mt19937_64 rng(seed);
    Factorization out;
    for (auto& [part, mult] : squarefree_decomposition(f)) {
        for (const Poly& g : factor_squarefree(part, rng)) merge_term(out, g, mult);
    }
    sort_canonical(out);
    return out;
}

Factorization factorize_trial_division(const Poly& f) {
    require_monic(f);
    if (f.degree() == 0) return {};
    const Fq& k = f.field();
    Factorization out;
    Poly rest = f;
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(rest.degree());) {
        bool found = false;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= k.q();
        for (std::uint64_t r = 0; r < total && !found; ++r) {
            // any degree-d divisor is irreducible: smaller factors are gone
            Poly g = Poly::monic_from_rank(k, d, r);
            if (!g.divides(rest)) continue;
            unsigned e = 0;
            while (g.divides(rest)) {
                rest = Poly::exact_div(rest, g);
                ++e;
            }
            merge_term(out, g, e);
            found = true;
        }
        if (!found) ++d;
    }
    if (rest.degree() > 0) merge_term(out, rest, 1);
    sort_canonical(out);
    return out;
}

Poly expand(const Fq& f, const Factorization& fac) {
    Poly r = Poly::one(f);
    for (auto& [g, e] : fac)
        for (unsigned i = 0; i < e; ++i) r = r * g;
    return r;
}

void for_each_irreducible(const Fq& f, unsigned d, const std::function<void(const Poly&)>& fn) {
    if (d == 0) return;
    for_each_monic(f, d, [&](const Poly& p) {
        if (is_irreducible(p)) fn(p);
    });
}

std::vector<Poly> irreducibles(const Fq& f, unsigned d) {
    std::vector<Poly> out;
    for_each_irreducible(f, d, [&](const Poly& p) { out.push_back(p); });
    return out;
}

mpz_class irreducible_count(std::uint32_t q, unsigned d) {
    if (d == 0) return 0;
    auto moebius = [](unsigned n) {
        int m = 1;
        for (unsigned r = 2; r * r <= n; ++r)
            if (n % r == 0) {
                n /= r;
                if (n % r == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    mpz_class sum = 0;
    for (unsigned ell = 1; ell <= d; ++ell) {
        if (d % ell) continue;
        int mu = moebius(ell);
        if (mu == 0) continue;
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), q, d / ell);
        sum += mu * t;
    }
    return sum / d;
}

}  // namespace splitq
