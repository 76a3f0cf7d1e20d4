#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "splitq/errors.hpp"
#include "splitq/formulas.hpp"
#include "splitq/simclass.hpp"

using namespace splitq;

namespace {

mpz_class zp(std::uint32_t q, unsigned e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

}  // namespace

TEST_CASE("mu dispatch hand-checked values") {
    Fq f(2);

    SUBCASE("full-degree tuples are attained once") {
        auto r = mu_closed(2, 1, 1, InvariantFactors::parse(f, "x"));
        CHECK(r.covered());
        CHECK(*r.value == 1);
        CHECK(r.rule == "Cor3.7");
        auto r2 = mu_closed(2, 2, 2, InvariantFactors::parse(f, "x^2+x,x^2+x"));
        CHECK(*r2.value == 1);
        CHECK(r2.rule == "Cor3.7");
    }

    SUBCASE("single column") {
        auto r = mu_closed(2, 1, 1, InvariantFactors::parse(f, "1"));
        CHECK(*r.value == 2);  // q^2 - q
        CHECK(r.rule == "Cor4.8");
        auto r2 = mu_closed(3, 1, 2, InvariantFactors::parse(f, "x"));
        // One strip: q^{3*1}(1 - q^{-2}) = 8 - 2.
        CHECK(*r2.value == 6);
        CHECK(r2.rule == "Cor4.8");
        auto r3 = mu_closed(3, 1, 2, InvariantFactors::parse(f, "1"));
        CHECK(*r3.value == zp(2, 6) - zp(2, 4));
        CHECK(r3.rule == "Cor4.8");
    }

    SUBCASE("unimodular counts") {
        auto r = mu_closed(3, 2, 1, InvariantFactors::parse(f, "1,1"));
        CHECK(*r.value == 24);  // (8-2)(8-4)
        CHECK(r.rule == "Unimodular");
        auto r2 = mu_closed(3, 2, 2, InvariantFactors::parse(f, "x,x"));
        CHECK(*r2.value == 24);
        CHECK(r2.rule == "Lem3.6+Unimodular");
        auto r3 = mu_closed(2, 2, 1, InvariantFactors::parse(f, "1,1"));
        CHECK(*r3.value == 0);  // k = n kills the i = n term
    }

    SUBCASE("degree one dispatch") {
        auto r = mu_closed(2, 2, 1, InvariantFactors::parse(f, "1,x^2+x"));
        CHECK(*r.value == 6);  // orbit of diag(0,1)
        CHECK(r.rule == "Thm4.2");
        auto r2 = mu_closed(2, 2, 1, InvariantFactors::parse(f, "1,x"));
        CHECK(*r2.value == 0);  // degree 1 < 2 is unattainable for square d=1
        CHECK(r2.rule == "Thm4.2");
        auto r3 = mu_closed(3, 2, 1, InvariantFactors::parse(f, "1,x"));
        CHECK(*r3.value == 12);  // [2 1]_2 * (q^3 - q^2)
        CHECK(r3.rule == "Thm4.2");
        auto r4 = mu_closed(2, 2, 2, InvariantFactors::parse(f, "x,x^3+x^2+x"));
        CHECK(*r4.value == 2);  // reduces to (1, x^2+x+1): gamma_2(2)/3
        CHECK(r4.rule == "Cor4.3");
    }

    SUBCASE("uncovered residual") {
        auto r = mu_closed(3, 3, 2, InvariantFactors::parse(f, "1,1,x"));
        CHECK(!r.covered());
        CHECK(r.rule.empty());
        CHECK(r.residual == "mu_q(3,3,2;1,1,x)");
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(mu_closed(2, 1, 1, InvariantFactors::parse(f, "x^2")),
                        std::invalid_argument);
        CHECK_THROWS_AS(mu_closed(1, 2, 1, InvariantFactors::parse(f, "1,1")),
                        std::invalid_argument);
        CHECK_THROWS_AS(mu_closed(2, 2, 1, InvariantFactors::parse(f, "1")),
                        std::invalid_argument);
        CHECK_THROWS_AS(mu_closed(2, 2, 0, InvariantFactors::parse(f, "1,1")),
                        std::invalid_argument);
    }
}

TEST_CASE("sigma normalization") {
    Fq f(2);
    // m-tuple input pads to the md-tuple.
    InvariantFactors canon =
        normalize_sigma_tuple(2, 2, InvariantFactors::parse(f, "x^2,x^2"));
    CHECK(canon == InvariantFactors::parse(f, "1,1,x^2,x^2"));
    // Longer input trims leading ones.
    CHECK(normalize_sigma_tuple(1, 2, InvariantFactors::parse(f, "1,1,1,x^2")) ==
          InvariantFactors::parse(f, "1,x^2"));
    // Degree must match m*d.
    CHECK_THROWS_AS(normalize_sigma_tuple(2, 2, InvariantFactors::parse(f, "x,x")),
                    std::invalid_argument);
    // Nonconstant entries must fit in the last m*d slots.
    CHECK_THROWS_AS(normalize_sigma_tuple(1, 2, InvariantFactors::parse(f, "x,x,x^2,x^2")),
                    std::invalid_argument);
    CHECK_THROWS_AS(normalize_sigma_tuple(2, 2, InvariantFactors()), std::invalid_argument);
}

TEST_CASE("sigma dispatch hand-checked values") {
    Fq f(2);

    SUBCASE("depth one is trivial") {
        auto r = sigma_closed(2, 1, InvariantFactors::parse(f, "x,x"));
        CHECK(*r.value == 1);
        CHECK(r.rule == "d=1");
    }

    SUBCASE("blocked by a nonconstant early factor") {
        auto r = sigma_closed(1, 2, InvariantFactors::parse(f, "x,x"));
        CHECK(*r.value == 0);
        CHECK(r.rule == "Cor2.3");
    }

    SUBCASE("cyclic with full first degree") {
        // m = 1, d = 2: sigma = q^2 prod over distinct factors (1 - q^{-deg}).
        auto irr = sigma_closed(1, 2, InvariantFactors::parse(f, "x^2+x+1"));
        CHECK(*irr.value == 3);
        CHECK(irr.rule == "Thm3.9");
        auto split = sigma_closed(1, 2, InvariantFactors::parse(f, "x^2+x"));
        CHECK(*split.value == 1);
        auto ram = sigma_closed(1, 2, InvariantFactors::parse(f, "x^2"));
        CHECK(*ram.value == 2);
    }

    SUBCASE("repeated block of full degree") {
        auto r = sigma_closed(2, 2, InvariantFactors::parse(f, "x^2,x^2"));
        CHECK(*r.value == 16);
        CHECK(r.rule == "Thm3.9");
        auto r2 = sigma_closed(2, 2, InvariantFactors::parse(f, "x^2+x+1,x^2+x+1"));
        CHECK(*r2.value == 30);
        CHECK(r2.rule == "Thm3.9");
    }

    SUBCASE("first degree one less") {
        auto r = sigma_closed(2, 2, InvariantFactors::parse(f, "x,x^3"));
        CHECK(*r.value == 8);
        CHECK(r.rule == "Cor4.4");
        auto r2 = sigma_closed(2, 2, InvariantFactors::parse(f, "x,x^3+x^2"));
        CHECK(*r2.value == 8);
        CHECK(r2.rule == "Cor4.4");
    }

    SUBCASE("uncovered case reports the reduced residual") {
        auto r = sigma_closed(2, 2, InvariantFactors::parse(f, "1,x^4+x^2"));
        CHECK(!r.covered());
        CHECK(r.residual.find("mu_q(2,2,2;") != std::string::npos);
    }
}

TEST_CASE("sigma by type agrees with sigma by invariants") {
    Fq f(2);
    struct Case {
        const char* inv;
        unsigned m, d;
    };
    const std::vector<Case> cases = {
        {"x^2,x^2", 2, 2},   {"x^2+x+1,x^2+x+1", 2, 2}, {"x,x^3", 2, 2},
        {"x,x^3+x^2", 2, 2}, {"x^2+x+1", 1, 2},         {"x^2", 1, 2},
        {"x^3+x+1", 1, 3},   {"x,x", 2, 1},             {"1,x^2+x", 2, 1},
    };
    for (const auto& c : cases) {
        InvariantFactors inv = InvariantFactors::parse(f, c.inv);
        auto by_inv = sigma_closed(c.m, c.d, inv);
        auto by_type = sigma_type_closed(2, c.m, c.d, type_of(normalize_sigma_tuple(c.m, c.d, inv)));
        REQUIRE(by_inv.covered());
        REQUIRE(by_type.covered());
        CHECK(*by_inv.value == *by_type.value);
    }
}

TEST_CASE("sigma type dispatch") {
    SUBCASE("too many parts") {
        auto r = sigma_type_closed(2, 1, 2, SimilarityType({{1, Partition({1, 1})}}));
        CHECK(*r.value == 0);
        CHECK(r.rule == "Cor2.4");
    }
    SUBCASE("rectangle route") {
        auto r = sigma_type_closed(2, 2, 2, SimilarityType({{1, Partition({2, 2})}}));
        CHECK(*r.value == 16);
        CHECK(r.rule == "Thm3.10");
        auto r2 = sigma_type_closed(2, 2, 2, SimilarityType({{2, Partition({1, 1})}}));
        CHECK(*r2.value == 30);
        CHECK(r2.rule == "Thm3.10");
    }
    SUBCASE("one less route cross-checks the quotient form") {
        auto r = sigma_type_closed(2, 2, 2,
                                   SimilarityType({{1, Partition({2, 1})}, {1, Partition({1})}}));
        CHECK(*r.value == 8);
        CHECK(r.rule == "Cor4.6");
        auto r2 = sigma_type_closed(2, 2, 2, SimilarityType({{1, Partition({3, 1})}}));
        CHECK(*r2.value == 8);
        CHECK(r2.rule == "Cor4.6");
        // Zero last part contributes an empty product.
        auto r3 = sigma_type_closed(2, 2, 1,
                                    SimilarityType({{1, Partition({1})}, {1, Partition({1})}}));
        CHECK(*r3.value == 1);
        CHECK(r3.rule == "Cor4.6");
    }
    SUBCASE("uncovered") {
        auto r = sigma_type_closed(2, 2, 2, SimilarityType({{2, Partition({2})}}));
        CHECK(!r.covered());
        CHECK(!r.residual.empty());
    }
    SUBCASE("size validation") {
        CHECK_THROWS_AS(sigma_type_closed(2, 2, 2, SimilarityType({{1, Partition({1})}})),
                        std::invalid_argument);
    }
}

TEST_CASE("kappa wraps sigma") {
    Fq f(2);
    auto k = kappa_closed(1, 2, InvariantFactors::parse(f, "x^2+x+1"));
    REQUIRE(k.covered());
    CHECK(*k.value == mpq_class(3, 4));
    CHECK(k.rule == "Prop2.5+Thm3.9");

    auto k2 = kappa_closed(2, 2, InvariantFactors::parse(f, "x^2,x^2"));
    CHECK(*k2.value == mpq_class(3, 8));  // gamma * sigma / q^8 = 6*16/256

    auto k3 = kappa_closed(1, 2, InvariantFactors::parse(f, "x,x"));
    CHECK(*k3.value == 0);

    auto k4 = kappa_type_closed(2, 2, 2, SimilarityType({{1, Partition({2, 2})}}));
    CHECK(*k4.value == mpq_class(3, 8));

    auto k5 = kappa_closed(2, 2, InvariantFactors::parse(f, "1,x^4+x^2"));
    CHECK(!k5.covered());

    CHECK(kappa_from_sigma(2, 1, 2, mpz_class(4)) == 1);
    CHECK_THROWS_AS(kappa_from_sigma(2, 1, 2, mpz_class(5)), std::logic_error);
}

TEST_CASE("existence criteria") {
    Fq f(2);
    CHECK(exists_splitting(1, 2, InvariantFactors::parse(f, "x^2+x+1")));
    CHECK(!exists_splitting(1, 2, InvariantFactors::parse(f, "x,x")));
    CHECK(exists_splitting(2, 2, InvariantFactors::parse(f, "x^2,x^2")));
    CHECK(!exists_splitting(2, 2, InvariantFactors::parse(f, "1,x,x,x^2")));

    CHECK(exists_splitting_type(2, 2, SimilarityType({{1, Partition({2, 2})}})));
    CHECK(!exists_splitting_type(1, 2, SimilarityType({{1, Partition({1, 1})}})));
    // Existence matches a nonzero covered sigma.
    for (unsigned m = 1; m <= 2; ++m) {
        for (const auto& inv : enumerate_classes(f, m * 2)) {
            auto s = sigma_closed(m, 2, inv);
            if (!s.covered()) continue;
            CHECK(exists_splitting(m, 2, inv) == (*s.value > 0));
        }
    }
}

TEST_CASE("tuple counting closed forms") {
    CHECK(coprime_tuple_count(2, 2, 1) == 2);
    CHECK(coprime_tuple_count(2, 2, 2) == 8);
    CHECK(coprime_tuple_count(3, 2, 1) == 6);
    CHECK(coprime_tuple_count(2, 3, 2) == zp(2, 6) - zp(2, 4));
    CHECK_THROWS_AS(coprime_tuple_count(2, 1, 1), std::invalid_argument);

    CHECK(unimodular_count(2, 2, 1, 2) == 8);
    CHECK(unimodular_count(2, 3, 2, 1) == 24);
    CHECK(unimodular_count(2, 2, 2, 1) == 0);
    // Cor 4.8 at the trivial tuple equals the unimodular count for k = 1.
    Fq f(2);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            auto r = mu_closed(n, 1, d, InvariantFactors::parse(f, "1"));
            CHECK(*r.value == unimodular_count(2, n, 1, d));
        }
}

TEST_CASE("mu covers every sigma tail for cyclic operators") {
    // m = 1: the dispatch always lands in a covered branch.
    Fq f(2);
    for (unsigned d = 1; d <= 3; ++d) {
        for (const auto& inv : enumerate_classes(f, d)) {
            auto s = sigma_closed(1, d, inv);
            CHECK(s.covered());
        }
    }
}
