#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "splitq/fqmat.hpp"
#include "splitq/polymat.hpp"
#include "splitq/simclass.hpp"

namespace splitq {

// Controls for the brute-force enumerators.  budget bounds the number of
// enumerated objects (budget_error when exceeded); threads <= 0 uses the
// OpenMP default.  The parallel drivers split the index range into fixed
// contiguous chunks and merge partial results in chunk order, so the outcome
// is independent of scheduling.
struct BruteOptions {
    std::uint64_t budget = std::uint64_t(1) << 22;
    int threads = 0;
};

// Streams every m-dimensional subspace of F_q^N exactly once, as its
// canonical m x N reduced-row-echelon basis.  1 <= m <= N.
void for_each_subspace(const Fq& f, unsigned N, unsigned m,
                       const std::function<void(const FqMat&)>& fn);

// w holds basis rows of an m-dimensional subspace of F_q^N with N = m*d;
// true iff W + TW + ... + T^{d-1}W = F_q^N (equivalently the sum is direct).
bool is_splitting(const FqMat& t, const FqMat& w, unsigned d);

// True iff W + TW + ... + T^ell W has dimension (ell+1) * rows(w).
bool is_anti_invariant(const FqMat& t, const FqMat& w, unsigned ell);

// RREF basis of span{T^j v : v in vs, 0 <= j < d}; may be empty.
std::vector<std::vector<elem>> krylov_span(const FqMat& t,
                                           const std::vector<std::vector<elem>>& vs,
                                           unsigned d);

// Number of m-dimensional splitting subspaces for t on F_q^{m d}, by
// exhaustive subspace enumeration.
mpz_class sigma_brute(unsigned m, unsigned d, const FqMat& t,
                      const BruteOptions& opts = {});
mpz_class sigma_brute_serial(unsigned m, unsigned d, const FqMat& t,
                             const BruteOptions& opts = {});

// Invariant-factor histogram of all q^{nkd} elements of M_q(n,k,d).
using MuHistogram = std::map<InvariantFactors, mpz_class>;
MuHistogram mu_brute(const Fq& f, unsigned n, unsigned k, unsigned d,
                     const BruteOptions& opts = {});
MuHistogram mu_brute_serial(const Fq& f, unsigned n, unsigned k, unsigned d,
                            const BruteOptions& opts = {});

// |{X : XA = AX, X invertible}| by enumerating the commutant, whose basis is
// found by solving the linear system first; budget applies to q^{dim}.
mpz_class centralizer_brute(const FqMat& a, const BruteOptions& opts = {});
mpz_class centralizer_brute_serial(const FqMat& a, const BruteOptions& opts = {});

// Probability that m uniform random vectors T-span F_q^{m d} with Krylov
// depth d, by enumerating all q^{m^2 d} vector tuples.
mpq_class kappa_brute(unsigned m, unsigned d, const FqMat& t,
                      const BruteOptions& opts = {});
mpq_class kappa_brute_serial(unsigned m, unsigned d, const FqMat& t,
                             const BruteOptions& opts = {});

// Number of coprime n-tuples of monic degree-d polynomials over F_q.
mpz_class coprime_brute(const Fq& f, unsigned n, unsigned d,
                        const BruteOptions& opts = {});
mpz_class coprime_brute_serial(const Fq& f, unsigned n, unsigned d,
                               const BruteOptions& opts = {});

// Block-diagonal companion operator whose xI - A has the nonconstant part of
// inv as its nontrivial invariant factors; deg inv >= 1 required.
FqMat operator_from_invariants(const InvariantFactors& inv);

// The element of M_q(n,k,d) whose coefficient matrices are decoded from the
// base-q digits of rank, C_0 least significant; rank in [0, q^{nkd}).
PolyMatrix element_from_rank(const Fq& f, unsigned n, unsigned k, unsigned d,
                             std::uint64_t rank);

}  // namespace splitq
