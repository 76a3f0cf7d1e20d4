#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "splitq/formulas.hpp"
#include "splitq/polymat.hpp"

using namespace splitq;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell, stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SPLITQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

Poly poly_from_codes(const Fq& f, const json& codes) {
    std::vector<elem> c;
    for (const auto& v : codes) c.push_back(v.get<elem>());
    return Poly(f, std::move(c));
}

}  // namespace

TEST_CASE("documented examples") {
    RunResult r = run_cli("sigma --q 2 --m 1 --d 2 --invariants x^2+x+1");
    CHECK(r.code == 0);
    CHECK(r.out == "value 3\nrule Thm3.9\n");

    r = run_cli("exists --q 2 --m 1 --d 2 --invariants x,x");
    CHECK(r.code == 0);
    CHECK(r.out == "value false\nrule Cor2.3\n");

    r = run_cli("verify --q 2 --max-md 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: ok") != std::string::npos);
}

TEST_CASE("exit codes") {
    // 2: malformed input (not a divisibility chain).
    CHECK(run_cli("sigma --q 2 --m 1 --d 2 --invariants x,1").code == 2);
    // 2: degree mismatch.
    CHECK(run_cli("sigma --q 2 --m 1 --d 2 --invariants x").code == 2);
    // 2: flag errors.
    CHECK(run_cli("sigma --q 2 --m 1 --d 2").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("sigma --q 2 --m 1 --d 2 --invariants x^2 --method sideways").code == 2);
    // 3: budget refusal.
    CHECK(run_cli("sigma --q 2 --m 2 --d 2 --invariants 1,1,1,x^4 --method oracle --budget 5")
              .code == 3);
    // 4: closed form not covering.
    RunResult r = run_cli("sigma --q 2 --m 2 --d 2 --invariants 1,1,1,x^4 --method closed");
    CHECK(r.code == 4);
    CHECK(r.out.find("residual") != std::string::npos);
    // auto falls back to the oracle on the same request.
    r = run_cli("sigma --q 2 --m 2 --d 2 --invariants 1,1,1,x^4");
    CHECK(r.code == 0);
    CHECK(r.out.find("rule oracle") != std::string::npos);
    // 0 with value false is not an error.
    CHECK(run_cli("exists --q 2 --m 1 --d 2 --invariants x,x").code == 0);
    // csv is defined for tabular queries only.
    CHECK(run_cli("snf --q 2 --matrix x --output csv").code == 2);
    CHECK(run_cli("verify --q 2 --max-md 1 --output csv").code == 2);
    // unrealizable type has no oracle route.
    r = run_cli("sigma --q 2 --m 2 --d 2 --type '{(2,[1]),(2,[1])}' --method oracle");
    CHECK(r.code == 2);
    CHECK(r.out.find("realizable") != std::string::npos);
}

TEST_CASE("environment variable sets the default budget") {
    const std::string req = "sigma --q 2 --m 2 --d 2 --invariants 1,1,1,x^4 --method oracle";
    CHECK(run_cli(req).code == 0);
    RunResult r = run_cli(req);  // env only applies when the flag is absent
    CHECK(r.code == 0);
    FILE* p = popen(("SPLITQ_BUDGET=5 " + std::string(SPLITQ_CLI_PATH) + " " + req +
                     " 2>&1; echo code=$?")
                        .c_str(),
                    "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    CHECK(out.find("code=3") != std::string::npos);
    CHECK(out.find("budget 5") != std::string::npos);
}

TEST_CASE("identical requests give byte-identical output") {
    for (const char* req :
         {"sigma --q 3 --m 1 --d 2 --invariants x^2+1 --output json",
          "table --q 2 --n 2 --k 2 --d 1 --output csv",
          "table --q 3 --m 2 --d 2 --output json",
          "verify --q 2 --max-md 3 --seed 11 --output json"}) {
        RunResult a = run_cli(req);
        RunResult b = run_cli(req);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("thread count does not change results") {
    const std::string base = "table --q 2 --n 2 --k 1 --d 2 --output csv";
    RunResult one = run_cli(base + " --threads 1");
    RunResult many = run_cli(base + " --threads 3");
    CHECK(one.code == 0);
    CHECK(one.out == many.out);
}

TEST_CASE("json round-trips the invariant tuple bit-exactly") {
    Fq f = Fq::parse("q=4");
    RunResult r = run_cli("sigma --q q=4 --m 1 --d 2 --invariants x^2+2*x+3 --output json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["q"] == 4);
    CHECK(doc["rule"] == "Thm3.9");
    REQUIRE(doc["invariants"].size() == 1);
    Poly back = poly_from_codes(f, doc["invariants"][0]);
    CHECK(back == Poly::parse(f, "x^2+2*x+3"));
    CHECK(back == Poly::parse(f, doc["invariants_str"].get<std::string>()));
    // The emitted value equals the in-process closed form.
    CountResult cr = sigma_closed(1, 2, InvariantFactors({back}));
    REQUIRE(cr.covered());
    CHECK(doc["value"].get<std::string>() == cr.value->get_str());
}

TEST_CASE("snf json round-trips and the witness identity holds") {
    Fq f = Fq::parse("3");
    const std::string mat = "x+1,2;x^2,x";
    RunResult r = run_cli("snf --q 3 --matrix '" + mat + "' --witnesses --output json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    PolyMatrix p = PolyMatrix::parse(f, mat);
    REQUIRE(doc["rows"] == 2);
    REQUIRE(doc["cols"] == 2);

    std::vector<Poly> diag;
    for (const auto& codes : doc["diag"]) diag.push_back(poly_from_codes(f, codes));
    CHECK(diag == invariant_factors(p));

    auto matrix_back = [&](const json& rows) {
        PolyMatrix out(f, rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                out.set(i, j, poly_from_codes(f, rows[i][j]));
        return out;
    };
    PolyMatrix a = matrix_back(doc["A"]), b = matrix_back(doc["B"]);
    CHECK(a * p * b == PolyMatrix::diagonal(f, 2, 2, diag));
    CHECK(is_unimodular(a));
    CHECK(is_unimodular(b));
}

TEST_CASE("closed and oracle methods agree through the front end") {
    for (const char* base :
         {"mu --q 2 --n 2 --k 2 --d 1 --invariants 1,x^2+x",
          "sigma --q 3 --m 1 --d 2 --invariants x^2+1",
          "kappa --q 2 --m 1 --d 2 --invariants x^2+x+1",
          "centralizer --q 2 --invariants x,x"}) {
        RunResult closed = run_cli(std::string(base) + " --method closed");
        RunResult oracle = run_cli(std::string(base) + " --method oracle");
        REQUIRE(closed.code == 0);
        REQUIRE(oracle.code == 0);
        const auto head = [](const std::string& s) { return s.substr(0, s.find('\n')); };
        CHECK(head(closed.out) == head(oracle.out));
        CHECK(oracle.out.find("rule oracle") != std::string::npos);
    }
}

TEST_CASE("kappa reports an exact rational") {
    RunResult r = run_cli("kappa --q 2 --m 1 --d 2 --invariants x^2+x+1");
    CHECK(r.code == 0);
    CHECK(r.out.find("value 3/4") == 0);
}

TEST_CASE("centralizer accepts a scalar matrix") {
    RunResult closed = run_cli("centralizer --q 2 --matrix '0,1;1,1'");
    REQUIRE(closed.code == 0);
    CHECK(closed.out.find("rule c(I)") != std::string::npos);
    RunResult brute = run_cli("centralizer --q 2 --matrix '0,1;1,1' --method oracle");
    REQUIRE(brute.code == 0);
    const auto head = [](const std::string& s) { return s.substr(0, s.find('\n')); };
    CHECK(head(closed.out) == head(brute.out));
    // Companion of x^2+x+1 acts irreducibly; centralizer is F_4^* plus 0.
    CHECK(head(closed.out) == "value 3");
}

TEST_CASE("table histogram rows sum to the space size") {
    RunResult r = run_cli("table --q 2 --n 2 --k 2 --d 1 --output csv");
    REQUIRE(r.code == 0);
    std::size_t pos = r.out.find('\n');
    CHECK(r.out.substr(0, pos) == "q,n,k,m,d,invariants,type,value,rule");
    long total = 0;
    std::string rest = r.out.substr(pos + 1);
    std::size_t start = 0;
    while (start < rest.size()) {
        std::size_t end = rest.find('\n', start);
        if (end == std::string::npos) break;
        std::string line = rest.substr(start, end - start);
        start = end + 1;
        // value is the second-to-last column
        std::size_t last = line.rfind(',');
        std::size_t prev = line.rfind(',', last - 1);
        total += std::stol(line.substr(prev + 1, last - prev - 1));
    }
    CHECK(total == 16);
}

TEST_CASE("table census marks unrealizable and uncovered rows") {
    RunResult r = run_cli("table --q 2 --m 2 --d 2 --output csv");
    REQUIRE(r.code == 0);
    // Two distinct quadratics do not exist over F_2.
    CHECK(r.out.find("\"{(2,[1]),(2,[1])}\",,unrealizable") != std::string::npos);
    // Realizable rows carry a value from some rule.
    CHECK(r.out.find("unrealizable\n") != std::string::npos);
    RunResult closed = run_cli("table --q 2 --m 2 --d 2 --output csv --method closed");
    REQUIRE(closed.code == 0);
    CHECK(closed.out.find("sigma(") != std::string::npos);  // residual labels remain visible
}

TEST_CASE("verify reports mismatch-free sweeps per suite") {
    RunResult r = run_cli("verify --q 3 --max-md 2 --output json");
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["total_checks"].get<long>() > 0);
    for (const auto& s : doc["suites"]) {
        CHECK(s["ok"] == true);
        CHECK(s["mismatches"].empty());
    }
}
