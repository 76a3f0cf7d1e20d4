#include "splitq/simclass.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "splitq/errors.hpp"
#include "splitq/factor.hpp"
#include "splitq/text.hpp"

namespace splitq {

InvariantFactors::InvariantFactors(std::vector<Poly> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].is_monic())
            throw std::invalid_argument("invariant factors must be monic");
        if (i) {
            require_same_field(entries_[i].field(), entries_[0].field());
            if (!entries_[i - 1].divides(entries_[i]))
                throw std::invalid_argument("invariant factor divisibility chain violated");
        }
    }
}

InvariantFactors InvariantFactors::parse(const Fq& f, const std::string& s) {
    std::vector<Poly> entries;
    for (const auto& piece : detail::split_trim(s, ',')) entries.push_back(Poly::parse(f, piece));
    if (entries.empty()) throw parse_error("empty invariant factor tuple");
    try {
        return InvariantFactors(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

unsigned InvariantFactors::degree() const {
    unsigned d = 0;
    for (const Poly& p : entries_) d += static_cast<unsigned>(p.degree());
    return d;
}

InvariantFactors InvariantFactors::padded(std::size_t k) const {
    if (k < entries_.size())
        throw std::invalid_argument("cannot pad to a shorter tuple");
    if (k == entries_.size()) return *this;
    if (entries_.empty())
        throw std::invalid_argument("cannot pad an empty tuple (no field)");
    std::vector<Poly> out(k - entries_.size(), Poly::one(entries_[0].field()));
    out.insert(out.end(), entries_.begin(), entries_.end());
    return InvariantFactors(std::move(out));
}

InvariantFactors InvariantFactors::trimmed() const {
    std::size_t i = 0;
    while (i < entries_.size() && entries_[i].is_one()) ++i;
    return InvariantFactors(std::vector<Poly>(entries_.begin() + i, entries_.end()));
}

std::string InvariantFactors::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ",";
        out += entries_[i].to_string();
    }
    return out;
}

bool InvariantFactors::operator<(const InvariantFactors& o) const {
    if (entries_.size() != o.entries_.size()) return entries_.size() < o.entries_.size();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != o.entries_[i]) return entries_[i] < o.entries_[i];
    }
    return false;
}

SimilarityType::SimilarityType(std::vector<std::pair<unsigned, Partition>> comps)
    : comps_(std::move(comps)) {
    for (const auto& [d, lambda] : comps_) {
        if (d == 0) throw std::invalid_argument("type degrees must be positive");
        if (lambda.empty()) throw std::invalid_argument("type partitions must be nonempty");
    }
    std::sort(comps_.begin(), comps_.end());
}

unsigned SimilarityType::size() const {
    unsigned s = 0;
    for (const auto& [d, lambda] : comps_) s += d * lambda.size();
    return s;
}

std::string SimilarityType::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(comps_[i].first) + ",[" + comps_[i].second.to_string() +
               "])";
    }
    return out + "}";
}

namespace {

struct TypeScanner {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw parse_error(std::string("expected '") + c + "' in type text");
        ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    std::uint64_t number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw parse_error("expected a number in type text");
        return detail::parse_u64(s.substr(start, i - start));
    }
};

}  // namespace

SimilarityType SimilarityType::parse(const std::string& s) {
    TypeScanner sc{s};
    sc.expect('{');
    std::vector<std::pair<unsigned, Partition>> comps;
    if (!sc.peek('}')) {
        for (;;) {
            sc.expect('(');
            std::uint64_t d = sc.number();
            if (d == 0 || d > 1u << 20) throw parse_error("type degree out of range");
            sc.expect(',');
            sc.expect('[');
            std::vector<unsigned> parts;
            for (;;) {
                std::uint64_t p = sc.number();
                if (p == 0 || p > 1u << 20) throw parse_error("partition part out of range");
                parts.push_back(static_cast<unsigned>(p));
                if (sc.peek(']')) break;
                sc.expect(',');
            }
            sc.expect(']');
            sc.expect(')');
            try {
                comps.emplace_back(static_cast<unsigned>(d), Partition(parts));
            } catch (const std::invalid_argument& e) {
                throw parse_error(e.what());
            }
            if (sc.peek('}')) break;
            sc.expect(',');
        }
    }
    sc.expect('}');
    sc.skip_ws();
    if (sc.i != s.size()) throw parse_error("trailing characters after type text");
    return SimilarityType(std::move(comps));
}

PrimaryDecomposition invariants_to_primary(const InvariantFactors& inv) {
    std::map<Poly, std::vector<unsigned>> exps;
    for (std::size_t idx = inv.length(); idx-- > 0;) {
        const Poly& p = inv.entries()[idx];
        if (p.is_constant()) continue;
        for (const auto& [phi, e] : factorize(p)) exps[phi].push_back(e);
    }
    PrimaryDecomposition pd;
    for (auto& [phi, parts] : exps) pd.push_back({phi, Partition(parts)});
    return pd;
}

InvariantFactors primary_to_invariants(const Fq& f, const PrimaryDecomposition& pd) {
    std::size_t len = 0;
    for (const auto& c : pd) len = std::max(len, c.lambda.num_parts());
    std::vector<Poly> entries(len, Poly::one(f));
    for (const auto& c : pd)
        for (std::size_t j = 1; j <= c.lambda.num_parts(); ++j) {
            Poly power = Poly::one(f);
            for (unsigned e = 0; e < c.lambda.part_or_zero(j); ++e) power = power * c.phi;
            entries[len - j] = entries[len - j] * power;
        }
    return InvariantFactors(std::move(entries));
}

SimilarityType type_of(const PrimaryDecomposition& pd) {
    std::vector<std::pair<unsigned, Partition>> comps;
    for (const auto& c : pd)
        comps.emplace_back(static_cast<unsigned>(c.phi.degree()), c.lambda);
    return SimilarityType(std::move(comps));
}

SimilarityType type_of(const InvariantFactors& inv) {
    return type_of(invariants_to_primary(inv));
}

namespace {

mpz_class pow_q(std::uint32_t q, std::uint64_t n) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, n);
    return r;
}

mpz_class require_integral(const mpq_class& v, const char* what) {
    mpq_class c = v;
    c.canonicalize();
    if (c.get_den() != 1)
        throw std::logic_error(std::string("non-integral value in ") + what);
    return c.get_num();
}

}  // namespace

mpz_class gamma_q(std::uint32_t q, unsigned m) {
    mpz_class r = 1;
    mpz_class qm = pow_q(q, m);
    for (unsigned i = 0; i < m; ++i) r *= qm - pow_q(q, i);
    return r;
}

mpz_class q_binomial(unsigned n, unsigned k, std::uint32_t q) {
    if (k > n) return 0;
    mpq_class r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r *= mpq_class(pow_q(q, n - k + i) - 1) / mpq_class(pow_q(q, i) - 1);
    return require_integral(r, "q_binomial");
}

mpq_class q_pochhammer(std::uint32_t q, unsigned d, unsigned r) {
    mpq_class acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        mpz_class qdi = pow_q(q, static_cast<std::uint64_t>(d) * i);
        acc *= mpq_class(qdi - 1) / mpq_class(qdi);
    }
    acc.canonicalize();
    return acc;
}

mpz_class c_local(std::uint32_t q, unsigned d, const Partition& lambda) {
    if (d == 0) throw std::invalid_argument("c_local needs d >= 1");
    Partition conj = lambda.conjugate();
    mpq_class acc = mpq_class(pow_q(q, d * conj.sum_of_squares()));
    unsigned top = lambda.empty() ? 0 : lambda.parts()[0];
    for (unsigned i = 1; i <= top; ++i) {
        unsigned mi = lambda.multiplicity(i);
        if (mi) acc *= q_pochhammer(q, d, mi);
    }
    return require_integral(acc, "c_local");
}

mpz_class centralizer_order(std::uint32_t q, const SimilarityType& tau) {
    mpz_class r = 1;
    for (const auto& [d, lambda] : tau.components()) r *= c_local(q, d, lambda);
    return r;
}

mpz_class centralizer_order(const InvariantFactors& inv) {
    if (inv.empty()) return 1;
    return centralizer_order(inv.entries()[0].field().q(), type_of(inv));
}

std::pair<InvariantFactors, unsigned> reduce_invariants(const InvariantFactors& inv) {
    if (inv.empty()) throw std::invalid_argument("cannot reduce an empty tuple");
    const Poly& p1 = inv.entries()[0];
    std::vector<Poly> out;
    out.reserve(inv.length());
    for (const Poly& p : inv.entries()) out.push_back(Poly::exact_div(p, p1));
    return {InvariantFactors(std::move(out)), static_cast<unsigned>(p1.degree())};
}

SimilarityType reduce_type(const SimilarityType& tau, unsigned m) {
    std::vector<std::pair<unsigned, Partition>> comps;
    for (const auto& [d, lambda] : tau.components()) {
        if (lambda.num_parts() > m)
            throw std::invalid_argument("partition has more parts than the ambient m");
        unsigned last = lambda.part_or_zero(m);
        std::vector<unsigned> parts;
        for (std::size_t j = 1; j <= m; ++j) {
            unsigned v = lambda.part_or_zero(j);
            if (v > last) parts.push_back(v - last);
        }
        if (!parts.empty()) comps.emplace_back(d, Partition(std::move(parts)));
    }
    return SimilarityType(std::move(comps));
}

namespace {

struct IrreducibleList {
    std::vector<Poly> polys;  // ascending degree, rank order within a degree
};

void rec_classes(const Fq& f, const IrreducibleList& irrs, std::size_t idx, unsigned budget,
                 PrimaryDecomposition& acc, std::vector<InvariantFactors>& out) {
    if (budget == 0) {
        out.push_back(primary_to_invariants(f, acc));
        return;
    }
    if (idx == irrs.polys.size()) return;
    const Poly& phi = irrs.polys[idx];
    const unsigned dphi = static_cast<unsigned>(phi.degree());
    if (dphi > budget) return;  // later irreducibles only have larger degree
    rec_classes(f, irrs, idx + 1, budget, acc, out);
    for (unsigned s = 1; s * dphi <= budget; ++s)
        for_each_partition(s, [&](const Partition& lambda) {
            acc.push_back({phi, lambda});
            rec_classes(f, irrs, idx + 1, budget - s * dphi, acc, out);
            acc.pop_back();
        });
}

}  // namespace

std::vector<InvariantFactors> enumerate_classes(const Fq& f, unsigned dim) {
    IrreducibleList irrs;
    for (unsigned d = 1; d <= dim; ++d)
        for (const Poly& p : irreducibles(f, d)) irrs.polys.push_back(p);
    std::vector<InvariantFactors> out;
    PrimaryDecomposition acc;
    rec_classes(f, irrs, 0, dim, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void rec_types(const std::vector<std::pair<unsigned, Partition>>& atoms, std::size_t idx,
               unsigned budget, std::vector<std::pair<unsigned, Partition>>& acc,
               std::vector<SimilarityType>& out) {
    if (budget == 0) {
        out.push_back(SimilarityType(acc));
        return;
    }
    if (idx == atoms.size()) return;
    rec_types(atoms, idx + 1, budget, acc, out);
    const unsigned w = atoms[idx].first * atoms[idx].second.size();
    unsigned used = 0;
    while (used + w <= budget) {
        used += w;
        acc.push_back(atoms[idx]);
        rec_types(atoms, idx + 1, budget - used, acc, out);
    }
    for (unsigned i = 0; i < used / w; ++i) acc.pop_back();
}

}  // namespace

std::vector<SimilarityType> enumerate_types(unsigned n) {
    std::vector<std::pair<unsigned, Partition>> atoms;
    for (unsigned d = 1; d <= n; ++d)
        for (unsigned s = 1; d * s <= n; ++s)
            for_each_partition(s, [&](const Partition& lambda) {
                atoms.emplace_back(d, lambda);
            });
    std::vector<SimilarityType> out;
    std::vector<std::pair<unsigned, Partition>> acc;
    rec_types(atoms, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool realizable(std::uint32_t q, const SimilarityType& tau) {
    std::map<unsigned, unsigned> need;
    for (const auto& [d, lambda] : tau.components()) ++need[d];
    for (const auto& [d, cnt] : need)
        if (irreducible_count(q, d) < cnt) return false;
    return true;
}

std::optional<PrimaryDecomposition> realize_type(const Fq& f, const SimilarityType& tau,
                                                 std::uint64_t variant) {
    std::map<unsigned, std::vector<Partition>> by_degree;
    for (const auto& [d, lambda] : tau.components()) by_degree[d].push_back(lambda);
    PrimaryDecomposition pd;
    for (const auto& [d, lambdas] : by_degree) {
        const std::size_t need = lambdas.size();
        const std::size_t window = need + static_cast<std::size_t>(variant % 8);
        std::vector<Poly> found;
        std::uint64_t total = 1;
        bool overflow = false;
        for (unsigned i = 0; i < d; ++i) {
            if (total > (std::uint64_t(1) << 40)) {
                overflow = true;
                break;
            }
            total *= f.q();
        }
        if (overflow) throw std::invalid_argument("realize_type degree too large to enumerate");
        for (std::uint64_t r = 0; r < total && found.size() < window; ++r) {
            Poly cand = Poly::monic_from_rank(f, d, r);
            if (is_irreducible(cand)) found.push_back(cand);
        }
        if (found.size() < need) return std::nullopt;
        std::size_t start = std::min<std::size_t>(variant % 8, found.size() - need);
        for (std::size_t i = 0; i < need; ++i)
            pd.push_back({found[start + i], lambdas[i]});
    }
    std::sort(pd.begin(), pd.end(),
              [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.phi < b.phi; });
    return pd;
}

}  // namespace splitq
