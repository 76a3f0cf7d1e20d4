#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitq/errors.hpp"

namespace splitq {

// Element code in [0, q).  For F_{p^e} the code is read base p: digit i is the
// coefficient of x^i in the residue polynomial modulo the field modulus.
using elem = std::uint32_t;

// The finite field F_q, q = p^e <= 2^16.  Prime fields use modular integer
// arithmetic; extension fields use residue polynomials behind log/antilog
// tables built at construction.  Immutable after construction.
class Fq {
public:
    // Prime power q; for e > 1 the modulus is the lexicographically first
    // monic irreducible of degree e over F_p.
    explicit Fq(std::uint32_t q);

    // Extension field with caller-supplied modulus (coefficient codes over
    // F_p, ascending degree, length e + 1, monic).  Irreducibility is checked.
    Fq(std::uint32_t p, unsigned e, std::vector<elem> modulus);

    // "q=7", "7", or "q=9;modulus=x^2+1".
    static Fq parse(const std::string& spec);

    std::uint32_t q() const { return q_; }
    std::uint32_t p() const { return p_; }
    unsigned e() const { return e_; }

    // Ascending coefficient codes of the modulus; empty for prime fields.
    const std::vector<elem>& modulus() const { return modulus_; }

    std::string to_string() const;

    elem add(elem a, elem b) const;
    elem sub(elem a, elem b) const;
    elem neg(elem a) const;
    elem mul(elem a, elem b) const;
    elem inv(elem a) const;  // throws std::invalid_argument on 0
    elem div(elem a, elem b) const;
    elem pow(elem a, std::uint64_t n) const;  // pow(0,0) = 1
    elem pth_root(elem a) const;              // unique in characteristic p

    bool is_valid(elem a) const { return a < q_; }
    void check(elem a) const;

    // Fields compare by value, so equal fields constructed independently
    // interoperate.
    bool operator==(const Fq& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Fq& o) const { return !(*this == o); }

private:
    void init_tables();

    std::uint32_t p_ = 0;
    std::uint32_t q_ = 0;
    unsigned e_ = 1;
    std::vector<elem> modulus_;
    // exp_[i] = g^i for a fixed primitive element g, i in [0, 2(q-1)); built
    // only for e > 1.
    std::vector<elem> exp_;
    std::vector<std::uint32_t> log_;
};

// Requires a.field-compatibility; throws std::invalid_argument otherwise.
void require_same_field(const Fq& a, const Fq& b);

}  // namespace splitq
