#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "splitq/formulas.hpp"
#include "splitq/oracle.hpp"

using namespace splitq;

namespace {

double ms_of(const std::function<void()>& fn, unsigned reps) {
    double best = 1e300;
    for (unsigned r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, const std::function<void()>& serial,
         const std::function<void()>& parallel, bool agree, unsigned reps) {
    const double s = ms_of(serial, reps);
    const double p = ms_of(parallel, reps);
    std::printf("%-22s %10.2f ms %10.2f ms %7.2fx   %s\n", name.c_str(), s, p,
                p > 0 ? s / p : 0.0, agree ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel oracle kernels"};
    std::string field = "2";
    unsigned m = 2, d = 2;
    int threads = 0;
    unsigned reps = 3;
    std::uint64_t budget = std::uint64_t(1) << 28;
    app.add_option("--q", field, "field spec");
    app.add_option("--m", m, "subspace dimension");
    app.add_option("--d", d, "Krylov depth");
    app.add_option("--threads", threads, "parallel thread count; 0 = library default");
    app.add_option("--reps", reps, "repetitions; best time kept");
    app.add_option("--budget", budget, "enumeration budget");
    CLI11_PARSE(app, argc, argv);

    const Fq f = Fq::parse(field);
    BruteOptions ser{budget, 1};
    BruteOptions par{budget, threads};

    // Cyclic nilpotent operator on F_q^{md}: invariant factors (1,...,1,x^{md}).
    const FqMat t = companion(Poly::monomial(f, 1, m * d));

    std::printf("%-22s %13s %13s %8s   %s\n", "kernel", "serial", "parallel", "speedup",
                "results");

    const mpz_class s1 = sigma_brute_serial(m, d, t, ser);
    const mpz_class p1 = sigma_brute(m, d, t, par);
    row("sigma(" + std::to_string(m) + "," + std::to_string(d) + ")",
        [&] { sigma_brute_serial(m, d, t, ser); }, [&] { sigma_brute(m, d, t, par); },
        s1 == p1, reps);

    const auto hs = mu_brute_serial(f, m, m, d, ser);
    const auto hp = mu_brute(f, m, m, d, par);
    row("mu(" + std::to_string(m) + "," + std::to_string(m) + "," + std::to_string(d) + ")",
        [&] { mu_brute_serial(f, m, m, d, ser); }, [&] { mu_brute(f, m, m, d, par); },
        hs == hp, reps);

    const mpq_class k1 = kappa_brute_serial(m, d, t, ser);
    const mpq_class k2 = kappa_brute(m, d, t, par);
    row("kappa(" + std::to_string(m) + "," + std::to_string(d) + ")",
        [&] { kappa_brute_serial(m, d, t, ser); }, [&] { kappa_brute(m, d, t, par); },
        k1 == k2, reps);

    const mpz_class c1 = centralizer_brute_serial(t, ser);
    const mpz_class c2 = centralizer_brute(t, par);
    row("centralizer(" + std::to_string(m * d) + ")", [&] { centralizer_brute_serial(t, ser); },
        [&] { centralizer_brute(t, par); }, c1 == c2, reps);

    const unsigned cn = std::max(2u, m);  // coprime counts need n >= 2
    const mpz_class g1 = coprime_brute_serial(f, cn, d, ser);
    const mpz_class g2 = coprime_brute(f, cn, d, par);
    row("coprime(" + std::to_string(cn) + "," + std::to_string(d) + ")",
        [&] { coprime_brute_serial(f, cn, d, ser); }, [&] { coprime_brute(f, cn, d, par); },
        g1 == g2, reps);

    return 0;
}
