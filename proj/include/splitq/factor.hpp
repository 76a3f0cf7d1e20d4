#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "splitq/poly.hpp"

namespace splitq {

// (irreducible monic factor, exponent), sorted by factor.
using Factorization = std::vector<std::pair<Poly, unsigned>>;

// Rabin test; f must be monic of degree >= 1.
bool is_irreducible(const Poly& f);

// Multiplicity-free decomposition f = prod g_i^i with the g_i squarefree and
// pairwise coprime; handles the vanishing-derivative case by p-th roots.
Factorization squarefree_decomposition(const Poly& f);

// Full factorization into monic irreducibles.  Equal-degree splitting draws
// from a generator seeded with `seed`, so results are deterministic per seed
// (the returned factorization is canonical regardless).
Factorization factorize(const Poly& f, std::uint64_t seed = 0x5eed);

// Deterministic reference path: divide by every monic irreducible in rank
// order.  Exponential in degree; test/oracle use only.
Factorization factorize_trial_division(const Poly& f);

// Expands a factorization back into a polynomial.
Poly expand(const Fq& f, const Factorization& fac);

void for_each_irreducible(const Fq& f, unsigned d, const std::function<void(const Poly&)>& fn);
std::vector<Poly> irreducibles(const Fq& f, unsigned d);

// Number of monic irreducibles of degree d over F_q by Moebius inversion of
// q^d = sum over divisors.
mpz_class irreducible_count(std::uint32_t q, unsigned d);

}  // namespace splitq
