#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "splitq/fq.hpp"
#include "splitq/text.hpp"

namespace splitq {

// Univariate polynomial over F_q, ascending coefficient codes with no stored
// trailing zeros.  The zero polynomial has an empty coefficient vector and
// degree -1.  Immutable value type.
class Poly {
public:
    Poly() = default;  // detached; assign before use
    explicit Poly(const Fq& f) : field_(&f) {}
    Poly(const Fq& f, std::vector<elem> coeffs);

    static Poly zero(const Fq& f) { return Poly(f); }
    static Poly constant(const Fq& f, elem c);
    static Poly one(const Fq& f) { return constant(f, 1); }
    static Poly x(const Fq& f) { return Poly(f, {0, 1}); }
    static Poly monomial(const Fq& f, elem c, unsigned k);

    // Monic polynomial of degree d whose low-order coefficients are the base-q
    // digits of rank (rank in [0, q^d)).
    static Poly monic_from_rank(const Fq& f, unsigned d, std::uint64_t rank);

    static Poly parse(const Fq& f, const std::string& s);

    const Fq& field() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<elem>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(elem c) const;
    Poly shifted(unsigned k) const;  // * x^k
    Poly monic() const;              // throws on zero
    Poly derivative() const;
    elem eval(elem a) const;

    bool divides(const Poly& o) const;  // this | o; zero divides only zero

    // f = q*g + r with deg r < deg g; throws std::invalid_argument when g = 0.
    static std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
    static Poly mod(const Poly& f, const Poly& g) { return divrem(f, g).second; }
    // quotient of an exact division; throws std::invalid_argument if g does
    // not divide f.
    static Poly exact_div(const Poly& f, const Poly& g);
    // monic gcd; gcd(0,0) = 0.
    static Poly gcd(Poly a, Poly b);
    static Poly powmod(const Poly& base, const mpz_class& n, const Poly& modulus);

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    // Total order: by degree, then by coefficient codes from the top down.
    // Restricted to monic polynomials of one degree this is the
    // mixed-radix rank order used by the enumerators.
    bool operator<(const Poly& o) const;

    std::string to_string() const { return detail::format_poly_codes(coeffs_); }

private:
    const Fq* field_ = nullptr;
    std::vector<elem> coeffs_;
};

// Streams all q^d monic polynomials of degree d in rank order.
void for_each_monic(const Fq& f, unsigned d, const std::function<void(const Poly&)>& fn);
std::vector<Poly> all_monic(const Fq& f, unsigned d);

}  // namespace splitq
