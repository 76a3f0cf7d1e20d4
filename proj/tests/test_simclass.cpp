#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "splitq/errors.hpp"
#include "splitq/factor.hpp"
#include "splitq/partition.hpp"
#include "splitq/polymat.hpp"
#include "splitq/simclass.hpp"

using namespace splitq;

TEST_CASE("partition basics") {
    Partition p = Partition::parse("6,5,5,4,2");
    CHECK(p.size() == 22);
    CHECK(p.num_parts() == 5);
    CHECK(p.part_or_zero(1) == 6);
    CHECK(p.part_or_zero(5) == 2);
    CHECK(p.part_or_zero(6) == 0);
    CHECK(p.multiplicity(5) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.to_string() == "6,5,5,4,2");
    CHECK(p.conjugate() == Partition({5, 5, 4, 4, 3, 1}));

    CHECK(Partition().empty());
    CHECK(Partition().size() == 0);
    CHECK(Partition().conjugate() == Partition());

    CHECK_THROWS_AS(Partition::parse(""), parse_error);
    CHECK_THROWS_AS(Partition::parse("0"), parse_error);
    CHECK_THROWS_AS(Partition::parse("1,2"), parse_error);
    CHECK_THROWS_AS(Partition::parse("2,a"), parse_error);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
}

TEST_CASE("partition conjugation and enumeration") {
    const std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (unsigned n = 0; n <= 10; ++n) {
        auto all = partitions_of(n);
        CHECK(all.size() == counts[n]);
        std::set<Partition> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (const auto& lam : all) {
            CHECK(lam.size() == n);
            CHECK(lam.conjugate().conjugate() == lam);
            CHECK(lam.conjugate().size() == n);
            // sum over i of i * m_i recovers the size.
            unsigned s = 0;
            for (unsigned i = 1; i <= n; ++i) s += i * lam.multiplicity(i);
            CHECK(s == n);
            // <lambda', lambda'> = sum of conjugate squared parts.
            const Partition conj = lam.conjugate();
            std::uint64_t ss = 0;
            for (unsigned part : conj.parts()) ss += static_cast<std::uint64_t>(part) * part;
            CHECK(conj.sum_of_squares() == ss);
        }
    }
}

TEST_CASE("invariant factor tuples validate the chain") {
    Fq f(2);
    const Poly one = Poly::one(f);
    const Poly x = Poly::x(f);
    const Poly x2x = Poly::parse(f, "x^2+x");

    InvariantFactors inv({one, x, x2x});
    CHECK(inv.length() == 3);
    CHECK(inv.degree() == 3);
    CHECK(inv.to_string() == "1,x,x^2+x");
    CHECK(InvariantFactors::parse(f, "1,x,x^2+x") == inv);
    CHECK(inv.trimmed() == InvariantFactors({x, x2x}));
    CHECK(inv.trimmed().padded(3) == inv);
    CHECK(InvariantFactors().empty());
    CHECK(InvariantFactors().degree() == 0);

    // Chain violations and malformed entries.
    CHECK_THROWS_AS(InvariantFactors({x2x, x}), std::invalid_argument);
    CHECK_THROWS_AS(InvariantFactors({x, Poly::parse(f, "x+1")}), std::invalid_argument);
    CHECK_THROWS_AS(InvariantFactors({Poly::zero(f)}), std::invalid_argument);
    CHECK_THROWS_AS(InvariantFactors({Poly::constant(Fq(3), 2)}), std::invalid_argument);
    CHECK_THROWS_AS(InvariantFactors::parse(f, "x,x+1"), parse_error);
    CHECK_THROWS_AS(InvariantFactors::parse(f, ""), parse_error);

    Fq f3(3);
    // Non-monic entries are rejected.
    CHECK_THROWS_AS(InvariantFactors({Poly::parse(f3, "2*x")}), std::invalid_argument);
    // Mixed fields are rejected.
    CHECK_THROWS_AS(InvariantFactors({Poly::x(f), Poly::x(f3)}), std::invalid_argument);
}

TEST_CASE("primary decomposition round trip") {
    Fq f(2);
    InvariantFactors inv = InvariantFactors::parse(f, "x,x^3+x^2");

    PrimaryDecomposition pd = invariants_to_primary(inv);
    REQUIRE(pd.size() == 2);
    CHECK(pd[0].phi == Poly::x(f));
    CHECK(pd[0].lambda == Partition({2, 1}));
    CHECK(pd[1].phi == Poly::parse(f, "x+1"));
    CHECK(pd[1].lambda == Partition({1}));

    CHECK(primary_to_invariants(f, pd) == inv);

    SimilarityType tau = type_of(inv);
    CHECK(tau == SimilarityType({{1, Partition({2, 1})}, {1, Partition({1})}}));
    CHECK(tau.size() == 4);

    // Leading ones vanish in the minimal rebuild.
    InvariantFactors padded = inv.padded(4);
    CHECK(primary_to_invariants(f, invariants_to_primary(padded)) == inv);

    CHECK(invariants_to_primary(InvariantFactors()).empty());
    CHECK(primary_to_invariants(f, {}).empty());
}

TEST_CASE("similarity type parse and format") {
    SimilarityType tau = SimilarityType::parse("{(1,[2,1]),(2,[1])}");
    CHECK(tau.size() == 5);
    CHECK(tau.to_string() == "{(1,[2,1]),(2,[1])}");
    CHECK(SimilarityType::parse(tau.to_string()) == tau);

    // Components are sorted canonically regardless of input order.
    CHECK(SimilarityType::parse("{(2,[1]),(1,[2,1])}") == tau);

    SimilarityType empty = SimilarityType::parse("{}");
    CHECK(empty.components().empty());
    CHECK(empty.size() == 0);
    CHECK(empty.to_string() == "{}");

    CHECK_THROWS_AS(SimilarityType::parse(""), parse_error);
    CHECK_THROWS_AS(SimilarityType::parse("{(1,[2,1])"), parse_error);
    CHECK_THROWS_AS(SimilarityType::parse("{(0,[1])}"), parse_error);
    CHECK_THROWS_AS(SimilarityType::parse("{(1,[])}"), parse_error);
    CHECK_THROWS_AS(SimilarityType::parse("{(1,[1,2])}"), parse_error);
    CHECK_THROWS_AS(SimilarityType::parse("{(1,[1])}x"), parse_error);
}

TEST_CASE("class enumeration matches the histogram of characteristic matrices") {
    // Independent oracle: the similarity classes on F_q^N are exactly the
    // distinct Smith keys of xI - A over all N x N matrices A.
    for (std::uint32_t q : {2u, 3u}) {
        Fq f(q);
        for (unsigned N = 1; N <= (q == 2 ? 3u : 2u); ++N) {
            std::set<InvariantFactors> seen;
            std::uint64_t total = 1;
            for (unsigned i = 0; i < N * N; ++i) total *= q;
            for (std::uint64_t r = 0; r < total; ++r) {
                FqMat a = FqMat::from_rank(f, N, N, r);
                auto inv = invariant_factors(PolyMatrix::char_matrix(a));
                seen.insert(InvariantFactors(inv).trimmed());
            }
            auto classes = enumerate_classes(f, N);
            std::set<InvariantFactors> expect(classes.begin(), classes.end());
            CHECK(classes.size() == expect.size());
            CHECK(expect == seen);
        }
    }
    // Known class counts over F_2: q^2 + q for N = 2.
    CHECK(enumerate_classes(Fq(2), 2).size() == 6);
    CHECK(enumerate_classes(Fq(3), 2).size() == 12);
    CHECK(enumerate_classes(Fq(2), 3).size() == 14);
}

TEST_CASE("round trip across all small classes") {
    Fq f(2);
    for (unsigned N = 1; N <= 4; ++N) {
        for (const auto& inv : enumerate_classes(f, N)) {
            CHECK(inv.degree() == N);
            auto pd = invariants_to_primary(inv);
            CHECK(primary_to_invariants(f, pd) == inv);
            // Components are sorted with pairwise distinct irreducibles.
            for (std::size_t i = 0; i < pd.size(); ++i) {
                CHECK(is_irreducible(pd[i].phi));
                CHECK(!pd[i].lambda.empty());
                if (i + 1 < pd.size()) CHECK(pd[i].phi < pd[i + 1].phi);
            }
            CHECK(type_of(inv).size() == N);
        }
    }
}

TEST_CASE("group orders and gaussian binomials") {
    CHECK(gamma_q(2, 0) == 1);
    CHECK(gamma_q(2, 1) == 1);
    CHECK(gamma_q(2, 2) == 6);
    CHECK(gamma_q(2, 3) == 168);
    CHECK(gamma_q(3, 2) == 48);

    CHECK(q_binomial(4, 2, 2) == 35);
    CHECK(q_binomial(2, 1, 3) == 4);
    CHECK(q_binomial(5, 0, 2) == 1);
    CHECK(q_binomial(5, 5, 2) == 1);
    CHECK(q_binomial(2, 3, 2) == 0);
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k, 2) == q_binomial(n, n - k, 2));
            if (k >= 1 && n >= 1) {
                // Pascal recurrence with q-weight.
                mpz_class lhs = q_binomial(n, k, 3);
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), 3, k);
                CHECK(lhs == q_binomial(n - 1, k - 1, 3) + pw * q_binomial(n - 1, k, 3));
            }
        }

    CHECK(q_pochhammer(2, 1, 1) == mpq_class(1, 2));
    CHECK(q_pochhammer(2, 1, 2) == mpq_class(3, 8));
    CHECK(q_pochhammer(2, 2, 1) == mpq_class(3, 4));
    CHECK(q_pochhammer(3, 1, 0) == 1);
}

TEST_CASE("centralizer orders from types") {
    // Hand-checked values over F_2.
    CHECK(c_local(2, 1, Partition({1})) == 1);        // scalar on a line
    CHECK(c_local(2, 1, Partition({1, 1})) == 6);     // scalar on a plane: GL_2
    CHECK(c_local(2, 1, Partition({2})) == 2);        // regular nilpotent block
    CHECK(c_local(2, 2, Partition({1})) == 3);        // F_4 multiplicative group
    CHECK(c_local(3, 1, Partition({1})) == 2);
    CHECK(c_local(3, 1, Partition({2})) == 6);

    Fq f(2);
    CHECK(centralizer_order(InvariantFactors::parse(f, "1,x^2+x")) == 1);
    CHECK(centralizer_order(InvariantFactors::parse(f, "x,x")) == 6);
    CHECK(centralizer_order(InvariantFactors::parse(f, "1,x^2")) == 2);
    CHECK(centralizer_order(InvariantFactors::parse(f, "1,x^2+x+1")) == 3);
    CHECK(centralizer_order(InvariantFactors()) == 1);

    // c depends only on the type, and divides the full group order.
    for (unsigned N = 1; N <= 4; ++N) {
        for (const auto& inv : enumerate_classes(f, N)) {
            mpz_class c = centralizer_order(inv);
            CHECK(c == centralizer_order(2, type_of(inv)));
            CHECK(gamma_q(2, N) % c == 0);
        }
    }
}

TEST_CASE("hall sum over classes") {
    // Orbit-counting: the class sizes gamma/c(I) partition all N x N matrices.
    for (std::uint32_t q : {2u, 3u}) {
        Fq f(q);
        for (unsigned N = 1; N <= 3; ++N) {
            mpz_class sum = 0;
            const mpz_class g = gamma_q(q, N);
            for (const auto& inv : enumerate_classes(f, N)) sum += g / centralizer_order(inv);
            mpz_class expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), q, N * N);
            CHECK(sum == expect);
        }
    }
}

TEST_CASE("reduction by the first invariant factor") {
    Fq f(2);
    auto [r1, d1] = reduce_invariants(InvariantFactors::parse(f, "x,x^2+x"));
    CHECK(d1 == 1);
    CHECK(r1 == InvariantFactors::parse(f, "1,x+1"));

    auto [r2, d2] = reduce_invariants(InvariantFactors::parse(f, "x^2,x^2"));
    CHECK(d2 == 2);
    CHECK(r2 == InvariantFactors::parse(f, "1,1"));

    auto [r3, d3] = reduce_invariants(InvariantFactors::parse(f, "1,x"));
    CHECK(d3 == 0);
    CHECK(r3 == InvariantFactors::parse(f, "1,x"));
}

TEST_CASE("type reduction drops the m-th column") {
    SimilarityType tau({{1, Partition({6, 5, 5, 4, 2})}});
    CHECK(reduce_type(tau, 5) == SimilarityType({{1, Partition({4, 3, 3, 2})}}));

    // Rectangle types reduce to nothing.
    SimilarityType rect({{1, Partition({1, 1})}});
    CHECK(reduce_type(rect, 2) == SimilarityType());

    SimilarityType mixed({{1, Partition({2, 1})}, {1, Partition({1})}});
    // lambda_{1,2} = 1 drops to (1); lambda_{2,2} = 0 keeps (1).
    CHECK(reduce_type(mixed, 2) ==
          SimilarityType({{1, Partition({1})}, {1, Partition({1})}}));

    // More parts than m is rejected.
    CHECK_THROWS_AS(reduce_type(SimilarityType({{1, Partition({1, 1})}}), 1),
                    std::invalid_argument);
}

TEST_CASE("type realizability depends on irreducible supply") {
    // F_2 has two linear and one quadratic irreducible.
    CHECK(realizable(2, SimilarityType({{1, Partition({1})}, {1, Partition({1})}})));
    CHECK(!realizable(2, SimilarityType({{1, Partition({1})},
                                         {1, Partition({1})},
                                         {1, Partition({1})}})));
    CHECK(!realizable(2, SimilarityType({{2, Partition({1})}, {2, Partition({1})}})));
    CHECK(realizable(3, SimilarityType({{2, Partition({1})}, {2, Partition({1})}})));

    Fq f3(3);
    SimilarityType tau({{2, Partition({2})}, {2, Partition({1})}, {1, Partition({1})}});
    for (std::uint64_t variant : {0ull, 1ull, 2ull, 5ull}) {
        auto pd = realize_type(f3, tau, variant);
        REQUIRE(pd.has_value());
        CHECK(type_of(*pd) == tau);
        std::set<Poly> distinct;
        for (const auto& c : *pd) {
            CHECK(is_irreducible(c.phi));
            distinct.insert(c.phi);
        }
        CHECK(distinct.size() == pd->size());
    }
    // Variants rotate through different assignments when room exists.
    auto a = realize_type(f3, tau, 0), b = realize_type(f3, tau, 1);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(type_of(*a) == type_of(*b));

    CHECK(!realize_type(Fq(2), SimilarityType({{2, Partition({1})}, {2, Partition({1})}}))
               .has_value());
}

TEST_CASE("abstract type census") {
    CHECK(enumerate_types(0).size() == 1);  // the empty type
    CHECK(enumerate_types(1).size() == 1);
    CHECK(enumerate_types(2).size() == 4);
    CHECK(enumerate_types(3).size() == 8);

    for (unsigned n = 1; n <= 4; ++n) {
        const auto types = enumerate_types(n);
        for (std::size_t i = 0; i < types.size(); ++i) {
            CHECK(types[i].size() == n);
            if (i > 0) CHECK(types[i - 1] < types[i]);
        }
        // Realizable abstract types are exactly the types of actual classes.
        for (std::uint32_t q : {2u, 3u}) {
            Fq f(q);
            std::set<SimilarityType> seen;
            for (const auto& cls : enumerate_classes(f, n)) seen.insert(type_of(cls));
            std::set<SimilarityType> predicted;
            for (const auto& tau : types)
                if (realizable(q, tau)) predicted.insert(tau);
            CHECK(seen == predicted);
        }
    }
}
