#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitq/oracle.hpp"

namespace splitq {

// One property suite of the verification sweep.
struct VerifySuite {
    std::string name;
    std::uint64_t checks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

struct VerifyReport {
    std::vector<VerifySuite> suites;
    bool ok() const;
    std::uint64_t total_checks() const;
};

// Formula-vs-oracle sweep over F_q with ambient dimensions capped by max_md.
// Exhaustive where the state space is small, seeded sampling above that.
// Throws budget_error only if the fixed small grids themselves exceed the
// budget.
VerifyReport run_verify(const Fq& f, unsigned max_md, const BruteOptions& opts = {},
                        std::uint64_t seed = 0);

}  // namespace splitq
