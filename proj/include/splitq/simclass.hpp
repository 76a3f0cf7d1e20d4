#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "splitq/partition.hpp"
#include "splitq/poly.hpp"

namespace splitq {

// Tuple (p_1, ..., p_k) of monic polynomials with p_i | p_{i+1}, checked at
// construction.  The empty tuple is legal (degree 0).
class InvariantFactors {
public:
    InvariantFactors() = default;
    explicit InvariantFactors(std::vector<Poly> entries);

    // Comma-separated polynomials, divisibility order: "1,x^2+x".
    static InvariantFactors parse(const Fq& f, const std::string& s);

    const std::vector<Poly>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    unsigned degree() const;
    bool empty() const { return entries_.empty(); }

    // Pads leading ones to reach length k (k >= length required).
    InvariantFactors padded(std::size_t k) const;
    // Drops leading entries equal to 1.
    InvariantFactors trimmed() const;

    std::string to_string() const;

    bool operator==(const InvariantFactors& o) const { return entries_ == o.entries_; }
    bool operator!=(const InvariantFactors& o) const { return !(*this == o); }
    bool operator<(const InvariantFactors& o) const;

private:
    std::vector<Poly> entries_;
};

// One primary component: irreducible phi with exponent partition lambda.
struct PrimaryComponent {
    Poly phi;
    Partition lambda;
};
// Sorted by phi; the phi are pairwise distinct irreducibles, lambdas nonempty.
using PrimaryDecomposition = std::vector<PrimaryComponent>;

// Multiset {(d_i, lambda_i)} of (irreducible degree, partition), canonically
// sorted.  Forgetting the polynomials of a PrimaryDecomposition.
class SimilarityType {
public:
    SimilarityType() = default;
    explicit SimilarityType(std::vector<std::pair<unsigned, Partition>> comps);

    // "{(1,[2,1]),(2,[1])}"
    static SimilarityType parse(const std::string& s);

    const std::vector<std::pair<unsigned, Partition>>& components() const {
        return comps_;
    }
    unsigned size() const;  // sum of d_i * |lambda_i|

    std::string to_string() const;

    bool operator==(const SimilarityType& o) const { return comps_ == o.comps_; }
    bool operator!=(const SimilarityType& o) const { return !(*this == o); }
    bool operator<(const SimilarityType& o) const { return comps_ < o.comps_; }

private:
    std::vector<std::pair<unsigned, Partition>> comps_;
};

// Exponent extraction: lambda_i collects the exponents of phi_i across the
// entries from the last downward.  Inverse rebuilds the minimal tuple (no
// leading ones).
PrimaryDecomposition invariants_to_primary(const InvariantFactors& inv);
InvariantFactors primary_to_invariants(const Fq& f, const PrimaryDecomposition& pd);
SimilarityType type_of(const PrimaryDecomposition& pd);
SimilarityType type_of(const InvariantFactors& inv);

// |GL_m(F_q)| = prod_{i<m} (q^m - q^i).
mpz_class gamma_q(std::uint32_t q, unsigned m);
// Gaussian binomial; 0 when k > n.
mpz_class q_binomial(unsigned n, unsigned k, std::uint32_t q);
// (q^{-d})_r = prod_{i=1}^r (1 - q^{-di}), exact rational.
mpq_class q_pochhammer(std::uint32_t q, unsigned d, unsigned r);
// c_d(lambda) = q^{d <l',l'>} prod_i (q^{-d})_{m_i(lambda)}; asserted integral.
mpz_class c_local(std::uint32_t q, unsigned d, const Partition& lambda);
// c(tau) = prod c_{d_i}(lambda_i); c of the empty type is 1.
mpz_class centralizer_order(std::uint32_t q, const SimilarityType& tau);
mpz_class centralizer_order(const InvariantFactors& inv);

// (I-tilde, d_1) with I-tilde = (p_i / p_1) and d_1 = deg p_1.
std::pair<InvariantFactors, unsigned> reduce_invariants(const InvariantFactors& inv);
// Cor-style reduction relative to ambient m: mu_{i,j} = lambda_{i,j} -
// lambda_{i,m} over exactly m slots; zero parts and empty partitions drop.
// Requires every lambda_i to have at most m parts.
SimilarityType reduce_type(const SimilarityType& tau, unsigned m);

// All similarity classes of operators on F_q^dim, as minimal invariant-factor
// tuples (no leading ones), deterministic order.
std::vector<InvariantFactors> enumerate_classes(const Fq& f, unsigned dim);

// All abstract similarity types of size n, independent of any field;
// deterministic order.  Realizability over a given q is a separate question.
std::vector<SimilarityType> enumerate_types(unsigned n);

// True iff F_q has enough irreducibles of each degree to realize tau.
bool realizable(std::uint32_t q, const SimilarityType& tau);
// Assigns distinct irreducibles per degree; different variants rotate through
// the available irreducibles.  Empty when not realizable.
std::optional<PrimaryDecomposition> realize_type(const Fq& f, const SimilarityType& tau,
                                                 std::uint64_t variant = 0);

}  // namespace splitq
