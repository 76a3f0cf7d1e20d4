#include "splitq/poly.hpp"

#include <stdexcept>

namespace splitq {

Poly::Poly(const Fq& f, std::vector<elem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
    for (elem c : coeffs_) f.check(c);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Fq& f, elem c) {
    return c == 0 ? Poly(f) : Poly(f, {c});
}

Poly Poly::monomial(const Fq& f, elem c, unsigned k) {
    if (c == 0) return Poly(f);
    std::vector<elem> v(k + 1, 0);
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::monic_from_rank(const Fq& f, unsigned d, std::uint64_t rank) {
    std::vector<elem> v(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        v[i] = static_cast<elem>(rank % f.q());
        rank /= f.q();
    }
    if (rank != 0) throw std::invalid_argument("monic rank out of range");
    v[d] = 1;
    return Poly(f, std::move(v));
}

Poly Poly::parse(const Fq& f, const std::string& s) {
    return Poly(f, detail::parse_poly_codes(s, f.q()));
}

const Fq& Poly::field() const {
    if (!field_) throw std::logic_error("use of detached polynomial");
    return *field_;
}

Poly Poly::operator+(const Poly& o) const {
    const Fq& f = field();
    require_same_field(f, o.field());
    std::vector<elem> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(coeff(i), o.coeff(i));
    return Poly(f, std::move(v));
}

Poly Poly::operator-() const {
    const Fq& f = field();
    std::vector<elem> v(coeffs_);
    for (auto& c : v) c = f.neg(c);
    return Poly(f, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    const Fq& f = field();
    require_same_field(f, o.field());
    if (is_zero() || o.is_zero()) return Poly(f);
    std::vector<elem> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(coeffs_[i], o.coeffs_[j]));
    }
    return Poly(f, std::move(v));
}

Poly Poly::scaled(elem c) const {
    const Fq& f = field();
    if (c == 0) return Poly(f);
    std::vector<elem> v(coeffs_);
    for (auto& a : v) a = f.mul(a, c);
    return Poly(f, std::move(v));
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero()) return *this;
    std::vector<elem> v(coeffs_.size() + k, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return Poly(field(), std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no monic form");
    if (is_monic()) return *this;
    return scaled(field().inv(leading()));
}

Poly Poly::derivative() const {
    const Fq& f = field();
    if (coeffs_.size() <= 1) return Poly(f);
    std::vector<elem> v(coeffs_.size() - 1, 0);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        elem m = static_cast<elem>(i % f.p());
        v[i - 1] = f.mul(coeffs_[i], m);
    }
    return Poly(f, std::move(v));
}

elem Poly::eval(elem a) const {
    const Fq& f = field();
    elem r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = f.add(f.mul(r, a), coeffs_[i]);
    return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& f, const Poly& g) {
    const Fq& k = f.field();
    require_same_field(k, g.field());
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly(k), f};
    std::vector<elem> rem = f.coeffs_;
    std::vector<elem> quo(f.coeffs_.size() - g.coeffs_.size() + 1, 0);
    elem lcinv = k.inv(g.leading());
    for (std::size_t i = rem.size(); i-- >= g.coeffs_.size();) {
        if (rem[i] == 0) continue;
        elem c = k.mul(rem[i], lcinv);
        std::size_t shift = i - (g.coeffs_.size() - 1);
        quo[shift] = c;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
            rem[shift + j] = k.sub(rem[shift + j], k.mul(c, g.coeffs_[j]));
        if (i == 0) break;
    }
    return {Poly(k, std::move(quo)), Poly(k, std::move(rem))};
}

Poly Poly::exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero())
        throw std::invalid_argument(g.to_string() + " does not divide " + f.to_string());
    return q;
}

bool Poly::divides(const Poly& o) const {
    if (is_zero()) return o.is_zero();
    return divrem(o, *this).second.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly Poly::powmod(const Poly& base, const mpz_class& n, const Poly& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("powmod modulus must be nonconstant");
    const Fq& f = base.field();
    Poly r = Poly::one(f);
    Poly b = divrem(base, modulus).second;
    mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    if (n == 0) return r;
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        r = divrem(r * r, modulus).second;
        if (mpz_tstbit(n.get_mpz_t(), i)) r = divrem(r * b, modulus).second;
    }
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

void for_each_monic(const Fq& f, unsigned d, const std::function<void(const Poly&)>& fn) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < d; ++i) total *= f.q();
    for (std::uint64_t r = 0; r < total; ++r) fn(Poly::monic_from_rank(f, d, r));
}

std::vector<Poly> all_monic(const Fq& f, unsigned d) {
    std::vector<Poly> out;
    for_each_monic(f, d, [&](const Poly& p) { out.push_back(p); });
    return out;
}

}  // namespace splitq
