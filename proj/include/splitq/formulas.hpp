#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "splitq/simclass.hpp"

namespace splitq {

// Closed-form evaluation result: either an exact count plus the label of the
// rule that produced it, or a not-covered marker naming the reduced residual
// case.
struct CountResult {
    std::optional<mpz_class> value;
    std::string rule;      // e.g. "Thm3.9", "Cor4.4"; empty when not covered
    std::string residual;  // set when not covered
    bool covered() const { return value.has_value(); }
};

// Same shape for the probability kappa, an exact rational in [0,1].
struct KappaResult {
    std::optional<mpq_class> value;
    std::string rule;
    std::string residual;
    bool covered() const { return value.has_value(); }
};

// Number of elements of M_q(n,k,d) with invariant factors inv (a k-tuple).
// Dispatch: strip p_1, then the most specific covered closed form; overlapping
// routes are cross-checked internally.  Throws std::invalid_argument when
// deg inv > kd or the tuple is not a k-tuple with 1 <= k <= n.
CountResult mu_closed(unsigned n, unsigned k, unsigned d, const InvariantFactors& inv);

// Number of m-dimensional splitting subspaces for an operator with invariant
// factors inv on an md-dimensional space.  Accepts any tuple that normalizes
// to an md-tuple of degree md (leading ones padded or trimmed).
CountResult sigma_closed(unsigned m, unsigned d, const InvariantFactors& inv);

// Type-level sigma; size of tau must be md.
CountResult sigma_type_closed(std::uint32_t q, unsigned m, unsigned d,
                              const SimilarityType& tau);

// kappa = gamma_q(m) * sigma / q^(m^2 d).
KappaResult kappa_closed(unsigned m, unsigned d, const InvariantFactors& inv);
KappaResult kappa_type_closed(std::uint32_t q, unsigned m, unsigned d,
                              const SimilarityType& tau);
mpq_class kappa_from_sigma(std::uint32_t q, unsigned m, unsigned d, const mpz_class& sigma);

// Existence of an m-dimensional splitting subspace.
bool exists_splitting(unsigned m, unsigned d, const InvariantFactors& inv);
bool exists_splitting_type(unsigned m, unsigned d, const SimilarityType& tau);

// Number of coprime n-tuples of monic degree-d polynomials: q^(nd) -
// q^(n(d-1)+1); n >= 2, d >= 1.
mpz_class coprime_tuple_count(std::uint32_t q, unsigned n, unsigned d);

// Number of unimodular elements of M_q(n,k,d): q^(nk(d-1)) prod (q^n - q^i).
mpz_class unimodular_count(std::uint32_t q, unsigned n, unsigned k, unsigned d);

// Canonical md-tuple for sigma: pads leading ones, or trims them when the
// tuple is longer than md.  Throws std::invalid_argument if the degree is not
// md or trimming would drop a nonconstant entry.
InvariantFactors normalize_sigma_tuple(unsigned m, unsigned d, const InvariantFactors& inv);

}  // namespace splitq
