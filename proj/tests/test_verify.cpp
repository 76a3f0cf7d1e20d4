#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "splitq/verify.hpp"

using namespace splitq;

namespace {

const VerifySuite* find_suite(const VerifyReport& rep, const std::string& name) {
    for (const auto& s : rep.suites)
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("full sweep over F_2 passes") {
    Fq f = Fq::parse("2");
    VerifyReport rep = run_verify(f, 3);
    CHECK(rep.ok());
    CHECK(rep.total_checks() > 0);
    for (const auto& s : rep.suites) {
        INFO(s.name);
        CHECK(s.ok());
        CHECK(s.checks > 0);
    }
    for (const char* name :
         {"snf-witness-and-ratios", "lemma3.1-lift", "lemma3.6-strip",
          "histogram-totals", "thm3.4-identity", "sigma-closed-vs-brute",
          "exists-vs-brute", "sigma-type-invariance", "schedule-independence",
          "similarity-invariance", "kappa-vs-sigma", "subspace-stream"}) {
        INFO(name);
        CHECK(find_suite(rep, name) != nullptr);
    }
}

TEST_CASE("full sweep over F_3 passes") {
    Fq f = Fq::parse("3");
    VerifyReport rep = run_verify(f, 2);
    CHECK(rep.ok());
    for (const auto& s : rep.suites) {
        INFO(s.name);
        CHECK(s.ok());
    }
}

TEST_CASE("seeded runs are reproducible") {
    Fq f = Fq::parse("2");
    VerifyReport a = run_verify(f, 2, {}, 7);
    VerifyReport b = run_verify(f, 2, {}, 7);
    REQUIRE(a.suites.size() == b.suites.size());
    for (std::size_t i = 0; i < a.suites.size(); ++i) {
        CHECK(a.suites[i].name == b.suites[i].name);
        CHECK(a.suites[i].checks == b.suites[i].checks);
    }
    CHECK(a.total_checks() == b.total_checks());

    VerifyReport c = run_verify(f, 2, {}, 8);
    CHECK(c.ok());
}

TEST_CASE("max-md zero is rejected") {
    Fq f = Fq::parse("2");
    CHECK_THROWS_AS(run_verify(f, 0), std::invalid_argument);
}
