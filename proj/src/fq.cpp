#include "splitq/fq.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitq/text.hpp"

namespace splitq {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t n, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = r * a % m;
        a = a * a % m;
        n >>= 1;
    }
    return r;
}

// Minimal F_p[x] arithmetic on ascending coefficient vectors, used only to
// bootstrap extension fields (modulus check, default modulus search,
// primitive-element search).  General polynomial arithmetic lives in poly.cpp.
using PVec = std::vector<elem>;

void pv_norm(PVec& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PVec pv_mod(PVec f, const PVec& g, std::uint32_t p) {
    // g monic
    while (f.size() >= g.size() && !f.empty()) {
        std::uint64_t c = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t t = f[shift + i] + (p - g[i] % p) * c % p;
            f[shift + i] = static_cast<elem>(t % p);
        }
        pv_norm(f);
    }
    return f;
}

PVec pv_mulmod(const PVec& a, const PVec& b, const PVec& g, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<elem>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    pv_norm(r);
    return pv_mod(std::move(r), g, p);
}

PVec pv_powmod(PVec base, std::uint64_t n, const PVec& g, std::uint32_t p) {
    PVec r{1};
    base = pv_mod(std::move(base), g, p);
    while (n) {
        if (n & 1) r = pv_mulmod(r, base, g, p);
        base = pv_mulmod(base, base, g, p);
        n >>= 1;
    }
    return r;
}

PVec pv_gcd(PVec a, PVec b, std::uint32_t p) {
    while (!b.empty()) {
        // make b monic before using it as a divisor
        std::uint64_t lc = b.back();
        std::uint64_t lcinv = powmod_u64(lc, p - 2, p);
        for (auto& c : b) c = static_cast<elem>(c * lcinv % p);
        PVec r = pv_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility test over F_p for a monic polynomial of degree n >= 1.
bool pv_irreducible(const PVec& f, std::uint32_t p) {
    std::size_t n = f.size() - 1;
    if (n == 0) return false;
    PVec x{0, 1};
    // x^(p^n) == x mod f
    PVec h = x;
    for (std::size_t i = 0; i < n; ++i) h = pv_powmod(h, p, f, p);
    PVec hx = h;
    {
        // h - x
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = static_cast<elem>((hx[1] + p - 1) % p);
        pv_norm(hx);
    }
    if (!hx.empty()) return false;
    // gcd(x^(p^(n/r)) - x, f) == 1 for every prime r | n
    std::size_t m = n;
    for (std::size_t r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        PVec g = x;
        for (std::size_t i = 0; i < n / r; ++i) g = pv_powmod(g, p, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<elem>((g[1] + p - 1) % p);
        pv_norm(g);
        PVec d = pv_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    if (m > 1) {
        PVec g = x;
        for (std::size_t i = 0; i < n / m; ++i) g = pv_powmod(g, p, f, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<elem>((g[1] + p - 1) % p);
        pv_norm(g);
        PVec d = pv_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

// First monic irreducible of degree e over F_p in mixed-radix coefficient
// order (rank = sum c_i p^i over the low-order coefficients).
PVec default_modulus(std::uint32_t p, unsigned e) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < e; ++i) total *= p;
    for (std::uint64_t r = 0; r < total; ++r) {
        PVec f(e + 1, 0);
        std::uint64_t t = r;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = static_cast<elem>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (pv_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::vector<std::uint32_t> prime_factors_u32(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

Fq::Fq(std::uint32_t q) {
    if (q < 2 || q > kMaxQ) throw std::invalid_argument("field size must be in [2, 2^16]");
    std::uint32_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    std::uint32_t t = q;
    unsigned e = 0;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;
    q_ = q;
    if (e_ > 1) {
        modulus_ = default_modulus(p_, e_);
        init_tables();
    }
}

Fq::Fq(std::uint32_t p, unsigned e, std::vector<elem> modulus) {
    if (!is_prime_u32(p)) throw std::invalid_argument("characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field size must be <= 2^16");
    }
    p_ = p;
    e_ = e;
    q_ = static_cast<std::uint32_t>(q);
    if (e_ == 1) {
        if (!modulus.empty() && modulus != std::vector<elem>{0, 1})
            throw std::invalid_argument("prime field takes no modulus");
        return;
    }
    if (modulus.size() != e_ + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (elem c : modulus)
        if (c >= p_) throw std::invalid_argument("modulus coefficients must be codes over F_p");
    if (!pv_irreducible(modulus, p_))
        throw std::invalid_argument("modulus is not irreducible over F_p");
    modulus_ = std::move(modulus);
    init_tables();
}

void Fq::init_tables() {
    // residue-polynomial multiplication, used until the tables exist
    auto code_of = [&](const PVec& f) {
        std::uint64_t c = 0;
        for (std::size_t i = f.size(); i-- > 0;) c = c * p_ + f[i];
        return static_cast<elem>(c);
    };
    auto vec_of = [&](elem a) {
        PVec f;
        while (a) {
            f.push_back(a % p_);
            a /= p_;
        }
        return f;
    };
    const std::uint32_t n = q_ - 1;
    auto order_divides = [&](elem g, std::uint32_t m) {
        PVec r = pv_powmod(vec_of(g), m, modulus_, p_);
        return code_of(r) == 1;
    };
    std::vector<std::uint32_t> pf = prime_factors_u32(n);
    elem gen = 0;
    for (elem g = 2; g < q_; ++g) {
        bool primitive = true;
        for (std::uint32_t r : pf)
            if (order_divides(g, n / r)) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("no primitive element found");
    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    PVec acc{1};
    PVec gv = vec_of(gen);
    for (std::uint32_t i = 0; i < n; ++i) {
        elem code = code_of(acc);
        exp_[i] = code;
        exp_[i + n] = code;
        log_[code] = i;
        acc = pv_mulmod(acc, gv, modulus_, p_);
    }
}

void Fq::check(elem a) const {
    if (a >= q_)
        throw std::invalid_argument("element code " + std::to_string(a) + " out of range for " +
                                    to_string());
}

elem Fq::add(elem a, elem b) const {
    check(a);
    check(b);
    if (e_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    elem r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

elem Fq::neg(elem a) const {
    check(a);
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    elem r = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        elem d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

elem Fq::sub(elem a, elem b) const { return add(a, neg(b)); }

elem Fq::mul(elem a, elem b) const {
    check(a);
    check(b);
    if (e_ == 1) return static_cast<elem>(std::uint64_t(a) * b % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

elem Fq::inv(elem a) const {
    check(a);
    if (a == 0) throw std::invalid_argument("division by zero in " + to_string());
    if (e_ == 1) return static_cast<elem>(powmod_u64(a, p_ - 2, p_));
    return exp_[(q_ - 1) - log_[a]];
}

elem Fq::div(elem a, elem b) const { return mul(a, inv(b)); }

elem Fq::pow(elem a, std::uint64_t n) const {
    check(a);
    if (n == 0) return 1;
    if (a == 0) return 0;
    if (e_ == 1) return static_cast<elem>(powmod_u64(a, n, p_));
    return exp_[static_cast<std::uint32_t>(std::uint64_t(log_[a]) * (n % (q_ - 1)) % (q_ - 1))];
}

elem Fq::pth_root(elem a) const {
    // Frobenius is a field automorphism, so x -> x^(p^(e-1)) inverts x -> x^p.
    std::uint64_t n = 1;
    for (unsigned i = 0; i + 1 < e_; ++i) n *= p_;
    return pow(a, n);
}

std::string Fq::to_string() const {
    if (e_ == 1) return "q=" + std::to_string(q_);
    return "q=" + std::to_string(q_) + ";modulus=" + detail::format_poly_codes(modulus_);
}

Fq Fq::parse(const std::string& spec) {
    std::uint32_t q = 0;
    std::vector<elem> modulus;
    bool have_modulus = false;
    for (const std::string& part : detail::split_trim(spec, ';')) {
        if (part.empty()) continue;
        std::size_t eq = part.find('=');
        if (eq == std::string::npos) {
            q = static_cast<std::uint32_t>(detail::parse_u64(part));
            continue;
        }
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        if (key == "q") {
            q = static_cast<std::uint32_t>(detail::parse_u64(val));
        } else if (key == "modulus") {
            have_modulus = true;
            modulus = detail::parse_poly_codes(val, kMaxQ);  // bound tightened below
        } else {
            throw parse_error("unknown field spec key \"" + key + "\"");
        }
    }
    if (q == 0) throw parse_error("field spec must give q");
    try {
        if (!have_modulus) return Fq(q);
        Fq probe(q);  // determines p, e
        for (elem c : modulus)
            if (c >= probe.p()) throw parse_error("modulus coefficients must be codes over F_p");
        return Fq(probe.p(), probe.e(), modulus);
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

void require_same_field(const Fq& a, const Fq& b) {
    if (a != b)
        throw std::invalid_argument("mixed-field operands: " + a.to_string() + " vs " +
                                    b.to_string());
}

}  // namespace splitq
