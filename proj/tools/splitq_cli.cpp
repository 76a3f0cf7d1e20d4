#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitq/errors.hpp"
#include "splitq/formulas.hpp"
#include "splitq/oracle.hpp"
#include "splitq/verify.hpp"

using nlohmann::ordered_json;
using namespace splitq;

namespace {

// Requested closed-form evaluation has no covering rule; maps to exit 4.
struct not_covered : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string field = "2";
    std::string method = "auto";
    std::string output = "text";
    std::uint64_t budget = std::uint64_t(1) << 22;
    int threads = 0;
    std::uint64_t seed = 0;

    BruteOptions brute() const { return BruteOptions{budget, threads}; }
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--q", c.field, "field spec: \"2\", \"q=7\", or \"q=9;modulus=x^2+1\"");
    sub->add_option("--method", c.method, "closed, oracle, or auto (closed with oracle fallback)")
        ->check(CLI::IsMember({"closed", "oracle", "auto"}));
    sub->add_option("--output", c.output, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--budget", c.budget, "max enumeration size for oracle sweeps")
        ->envname("SPLITQ_BUDGET");
    sub->add_option("--threads", c.threads, "oracle threads; 0 = library default");
    sub->add_option("--seed", c.seed, "seed for sampled sweeps");
}

std::string strip_space(std::string s) {
    std::erase_if(s, [](unsigned char ch) { return std::isspace(ch) != 0; });
    return s;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

struct CsvRow {
    std::string n, k, m, d, invariants, type, value, rule;
};

void print_csv(const Fq& f, const std::vector<CsvRow>& rows) {
    std::cout << "q,n,k,m,d,invariants,type,value,rule\n";
    for (const CsvRow& r : rows)
        std::cout << f.q() << ',' << r.n << ',' << r.k << ',' << r.m << ',' << r.d << ','
                  << csv_escape(r.invariants) << ',' << csv_escape(r.type) << ',' << r.value
                  << ',' << r.rule << '\n';
}

ordered_json poly_json(const Poly& p) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(p.coeff(static_cast<std::size_t>(i)));
    return a;
}

ordered_json tuple_json(const InvariantFactors& inv) {
    ordered_json a = ordered_json::array();
    for (const Poly& p : inv.entries()) a.push_back(poly_json(p));
    return a;
}

ordered_json matrix_json(const PolyMatrix& p) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(poly_json(p.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json open_doc(const std::string& command, const Fq& f) {
    ordered_json doc;
    doc["command"] = command;
    doc["q"] = f.q();
    if (f.q() != f.p()) {
        ordered_json m = ordered_json::array();
        for (elem c : f.modulus()) m.push_back(c);
        doc["modulus"] = m;
    }
    return doc;
}

// One evaluated quantity plus the rule that produced it.
struct Query {
    std::string command;
    std::optional<unsigned> n, k, m, d;
    std::optional<InvariantFactors> inv;
    std::optional<SimilarityType> type;
    std::string value;
    ordered_json json_value;
    std::string rule;
};

void emit_query(const Fq& f, const Common& c, const Query& qy) {
    if (c.output == "text") {
        std::cout << "value " << qy.value << "\nrule " << qy.rule << "\n";
    } else if (c.output == "csv") {
        CsvRow r;
        if (qy.n) r.n = std::to_string(*qy.n);
        if (qy.k) r.k = std::to_string(*qy.k);
        if (qy.m) r.m = std::to_string(*qy.m);
        if (qy.d) r.d = std::to_string(*qy.d);
        if (qy.inv) r.invariants = qy.inv->to_string();
        if (qy.type) r.type = qy.type->to_string();
        r.value = qy.value;
        r.rule = qy.rule;
        print_csv(f, {r});
    } else {
        ordered_json doc = open_doc(qy.command, f);
        if (qy.n) doc["n"] = *qy.n;
        if (qy.k) doc["k"] = *qy.k;
        if (qy.m) doc["m"] = *qy.m;
        if (qy.d) doc["d"] = *qy.d;
        if (qy.inv) {
            doc["invariants"] = tuple_json(*qy.inv);
            doc["invariants_str"] = qy.inv->to_string();
        }
        if (qy.type) doc["type"] = qy.type->to_string();
        doc["value"] = qy.json_value;
        doc["rule"] = qy.rule;
        std::cout << doc.dump(2) << "\n";
    }
}

FqMat parse_scalar_matrix(const Fq& f, const std::string& text) {
    std::vector<std::vector<elem>> rows;
    std::size_t cols = 0;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<elem> out;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) {
            std::size_t used = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(tok, &used);
            } catch (const std::exception&) {
                throw parse_error("bad matrix entry \"" + tok + "\"");
            }
            if (used != tok.size()) throw parse_error("bad matrix entry \"" + tok + "\"");
            if (v >= f.q()) throw parse_error("entry code " + tok + " is not below q");
            out.push_back(static_cast<elem>(v));
        }
        if (out.empty()) throw parse_error("empty matrix row");
        if (rows.empty()) cols = out.size();
        if (out.size() != cols) throw parse_error("ragged matrix rows");
        rows.push_back(std::move(out));
    }
    if (rows.empty()) throw parse_error("empty matrix");
    FqMat a(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a.set(i, j, rows[i][j]);
    return a;
}

int cmd_snf(const Fq& f, const Common& c, const std::string& mat_arg,
            const std::string& file_arg, bool witnesses) {
    if (c.output == "csv") throw parse_error("snf has no csv form; use text or json");
    if (mat_arg.empty() == file_arg.empty())
        throw parse_error("snf needs exactly one of --matrix and --file");
    std::string text = mat_arg;
    if (!file_arg.empty()) {
        std::ifstream in(file_arg);
        if (!in) throw parse_error("cannot open " + file_arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    PolyMatrix p = PolyMatrix::parse(f, strip_space(text));
    SmithForm s = smith_normal_form(p, witnesses);

    if (c.output == "text") {
        std::string diag;
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            if (i) diag += ",";
            diag += s.diagonal[i].to_string();
        }
        std::cout << "diag " << diag << "\n";
        if (witnesses) {
            std::cout << "A " << s.left->to_string() << "\n";
            std::cout << "B " << s.right->to_string() << "\n";
        }
    } else {
        ordered_json doc = open_doc("snf", f);
        doc["rows"] = p.rows();
        doc["cols"] = p.cols();
        ordered_json diag = ordered_json::array();
        for (const Poly& e : s.diagonal) diag.push_back(poly_json(e));
        doc["diag"] = diag;
        if (witnesses) {
            doc["A"] = matrix_json(*s.left);
            doc["B"] = matrix_json(*s.right);
        }
        std::cout << doc.dump(2) << "\n";
    }
    return 0;
}

int cmd_mu(const Fq& f, const Common& c, unsigned n, unsigned k, unsigned d,
           const std::string& inv_s) {
    InvariantFactors inv = InvariantFactors::parse(f, inv_s);
    CountResult r = mu_closed(n, k, d, inv);  // validates the request in every method
    Query qy{"mu", n, k, {}, d, inv, {}, "", {}, ""};
    if (c.method != "oracle" && r.covered()) {
        qy.value = r.value->get_str();
        qy.rule = r.rule;
    } else if (c.method == "closed") {
        throw not_covered("no closed form covers this case; residual " + r.residual);
    } else {
        MuHistogram h = mu_brute(f, n, k, d, c.brute());
        auto it = h.find(inv.padded(k));
        qy.value = (it == h.end() ? mpz_class(0) : it->second).get_str();
        qy.rule = "oracle";
    }
    qy.json_value = qy.value;
    emit_query(f, c, qy);
    return 0;
}

// Oracle route for sigma-shaped queries: a block companion operator realizing
// the request, of dimension m*d.
FqMat sigma_operator(const Fq& f, unsigned m, unsigned d,
                     const std::optional<InvariantFactors>& inv,
                     const std::optional<SimilarityType>& tau) {
    if (inv) return operator_from_invariants(normalize_sigma_tuple(m, d, *inv));
    auto pd = realize_type(f, *tau);
    if (!pd)
        throw std::invalid_argument("type is not realizable over this field; "
                                    "no oracle route");
    return operator_from_invariants(normalize_sigma_tuple(m, d, primary_to_invariants(f, *pd)));
}

int cmd_sigma(const Fq& f, const Common& c, unsigned m, unsigned d, const std::string& inv_s,
              const std::string& type_s, bool as_kappa) {
    if (inv_s.empty() == type_s.empty())
        throw parse_error("need exactly one of --invariants and --type");
    Query qy{as_kappa ? "kappa" : "sigma", {}, {}, m, d, {}, {}, "", {}, ""};
    std::string rule, residual;
    std::optional<mpz_class> sigma_val;
    std::optional<mpq_class> kappa_val;
    if (!inv_s.empty()) {
        qy.inv = InvariantFactors::parse(f, inv_s);
        if (as_kappa) {
            KappaResult r = kappa_closed(m, d, *qy.inv);
            kappa_val = r.value;
            rule = r.rule;
            residual = r.residual;
        } else {
            CountResult r = sigma_closed(m, d, *qy.inv);
            sigma_val = r.value;
            rule = r.rule;
            residual = r.residual;
        }
    } else {
        qy.type = SimilarityType::parse(type_s);
        if (as_kappa) {
            KappaResult r = kappa_type_closed(f.q(), m, d, *qy.type);
            kappa_val = r.value;
            rule = r.rule;
            residual = r.residual;
        } else {
            CountResult r = sigma_type_closed(f.q(), m, d, *qy.type);
            sigma_val = r.value;
            rule = r.rule;
            residual = r.residual;
        }
    }
    const bool covered = sigma_val.has_value() || kappa_val.has_value();
    if (c.method != "oracle" && covered) {
        qy.value = as_kappa ? kappa_val->get_str() : sigma_val->get_str();
        qy.rule = rule;
    } else if (c.method == "closed") {
        throw not_covered("no closed form covers this case; residual " + residual);
    } else {
        FqMat t = sigma_operator(f, m, d, qy.inv, qy.type);
        qy.value = as_kappa ? kappa_brute(m, d, t, c.brute()).get_str()
                            : sigma_brute(m, d, t, c.brute()).get_str();
        qy.rule = "oracle";
    }
    qy.json_value = qy.value;
    emit_query(f, c, qy);
    return 0;
}

int cmd_exists(const Fq& f, const Common& c, unsigned m, unsigned d, const std::string& inv_s,
               const std::string& type_s) {
    if (inv_s.empty() == type_s.empty())
        throw parse_error("need exactly one of --invariants and --type");
    Query qy{"exists", {}, {}, m, d, {}, {}, "", {}, ""};
    bool v = false;
    if (!inv_s.empty()) {
        qy.inv = InvariantFactors::parse(f, inv_s);
        if (c.method == "oracle") {
            v = sigma_brute(m, d, sigma_operator(f, m, d, qy.inv, {}), c.brute()) > 0;
            qy.rule = "oracle";
        } else {
            v = exists_splitting(m, d, *qy.inv);
            qy.rule = "Cor2.3";
        }
    } else {
        qy.type = SimilarityType::parse(type_s);
        if (c.method == "oracle") {
            v = sigma_brute(m, d, sigma_operator(f, m, d, {}, qy.type), c.brute()) > 0;
            qy.rule = "oracle";
        } else {
            v = exists_splitting_type(m, d, *qy.type);
            qy.rule = "Cor2.4";
        }
    }
    qy.value = v ? "true" : "false";
    qy.json_value = v;
    emit_query(f, c, qy);
    return 0;
}

int cmd_centralizer(const Fq& f, const Common& c, const std::string& inv_s,
                    const std::string& mat_s) {
    if (inv_s.empty() == mat_s.empty())
        throw parse_error("need exactly one of --invariants and --matrix");
    Query qy{"centralizer", {}, {}, {}, {}, {}, {}, "", {}, ""};
    if (!inv_s.empty()) {
        InvariantFactors inv = InvariantFactors::parse(f, inv_s);
        qy.inv = inv;
        qy.n = inv.degree();
        if (c.method == "oracle") {
            qy.value = centralizer_brute(operator_from_invariants(inv), c.brute()).get_str();
            qy.rule = "oracle";
        } else {
            qy.value = centralizer_order(inv).get_str();
            qy.rule = "c(I)";
        }
    } else {
        FqMat a = parse_scalar_matrix(f, strip_space(mat_s));
        if (a.rows() != a.cols()) throw parse_error("centralizer needs a square matrix");
        qy.n = static_cast<unsigned>(a.rows());
        if (c.method == "oracle") {
            qy.value = centralizer_brute(a, c.brute()).get_str();
            qy.rule = "oracle";
        } else {
            InvariantFactors inv(invariant_factors(PolyMatrix::char_matrix(a)));
            qy.inv = inv.trimmed();
            qy.value = centralizer_order(inv).get_str();
            qy.rule = "c(I)";
        }
    }
    emit_query(f, c, qy);
    return 0;
}

struct TableRow {
    std::optional<InvariantFactors> inv;
    std::optional<SimilarityType> type;
    std::string value;  // empty when unavailable
    std::string rule;
};

void emit_table(const Fq& f, const Common& c, const Query& params,
                const std::vector<TableRow>& rows) {
    if (c.output == "text") {
        std::cout << "invariants\ttype\tvalue\trule\n";
        for (const TableRow& r : rows)
            std::cout << (r.inv ? r.inv->to_string() : "") << '\t'
                      << (r.type ? r.type->to_string() : "") << '\t' << r.value << '\t'
                      << r.rule << '\n';
    } else if (c.output == "csv") {
        std::vector<CsvRow> out;
        for (const TableRow& r : rows) {
            CsvRow cr;
            if (params.n) cr.n = std::to_string(*params.n);
            if (params.k) cr.k = std::to_string(*params.k);
            if (params.m) cr.m = std::to_string(*params.m);
            if (params.d) cr.d = std::to_string(*params.d);
            if (r.inv) cr.invariants = r.inv->to_string();
            if (r.type) cr.type = r.type->to_string();
            cr.value = r.value;
            cr.rule = r.rule;
            out.push_back(std::move(cr));
        }
        print_csv(f, out);
    } else {
        ordered_json doc = open_doc("table", f);
        if (params.n) doc["n"] = *params.n;
        if (params.k) doc["k"] = *params.k;
        if (params.m) doc["m"] = *params.m;
        if (params.d) doc["d"] = *params.d;
        ordered_json arr = ordered_json::array();
        for (const TableRow& r : rows) {
            ordered_json row;
            if (r.inv) {
                row["invariants"] = tuple_json(*r.inv);
                row["invariants_str"] = r.inv->to_string();
            }
            if (r.type) row["type"] = r.type->to_string();
            row["value"] = r.value.empty() ? ordered_json() : ordered_json(r.value);
            row["rule"] = r.rule;
            arr.push_back(std::move(row));
        }
        doc["rows"] = arr;
        std::cout << doc.dump(2) << "\n";
    }
}

int cmd_table(const Fq& f, const Common& c, const std::optional<unsigned>& n,
              const std::optional<unsigned>& k, const std::optional<unsigned>& m,
              const std::optional<unsigned>& d) {
    if (!d) throw parse_error("table needs --d");
    std::vector<TableRow> rows;
    Query params{"table", n, k, m, d, {}, {}, "", {}, ""};
    if (n || k) {
        if (!n || !k || m)
            throw parse_error("table takes --n --k --d (histogram) or --m --d (census)");
        // Full invariant-factor histogram of M_q(n,k,d).
        for (const auto& [key, cnt] : mu_brute(f, *n, *k, *d, c.brute()))
            rows.push_back({key, type_of(key), cnt.get_str(), "oracle"});
    } else {
        if (!m) throw parse_error("table takes --n --k --d (histogram) or --m --d (census)");
        // Census of all abstract types of size m*d with their sigma counts.
        for (const SimilarityType& tau : enumerate_types(*m * *d)) {
            TableRow row;
            row.type = tau;
            CountResult r = sigma_type_closed(f.q(), *m, *d, tau);
            if (c.method != "oracle" && r.covered()) {
                row.value = r.value->get_str();
                row.rule = r.rule;
            } else if (c.method == "closed") {
                row.rule = r.residual;
            } else if (realizable(f.q(), tau)) {
                FqMat t = sigma_operator(f, *m, *d, {}, tau);
                row.value = sigma_brute(*m, *d, t, c.brute()).get_str();
                row.rule = "oracle";
            } else {
                row.rule = "unrealizable";
            }
            rows.push_back(std::move(row));
        }
    }
    emit_table(f, c, params, rows);
    return 0;
}

int cmd_verify(const Fq& f, const Common& c, unsigned max_md) {
    if (c.output == "csv") throw parse_error("verify has no csv form; use text or json");
    VerifyReport rep = run_verify(f, max_md, c.brute(), c.seed);
    if (c.output == "text") {
        for (const VerifySuite& s : rep.suites) {
            std::cout << "suite " << s.name << ": " << s.checks << " checks, "
                      << (s.ok() ? "ok" : "MISMATCH") << "\n";
            for (const std::string& msg : s.mismatches) std::cout << "  mismatch: " << msg << "\n";
        }
        std::cout << "verify: " << (rep.ok() ? "ok" : "MISMATCH") << ", "
                  << rep.total_checks() << " checks\n";
    } else {
        ordered_json doc = open_doc("verify", f);
        doc["max_md"] = max_md;
        ordered_json suites = ordered_json::array();
        for (const VerifySuite& s : rep.suites) {
            ordered_json js;
            js["name"] = s.name;
            js["checks"] = s.checks;
            js["ok"] = s.ok();
            js["mismatches"] = s.mismatches;
            suites.push_back(std::move(js));
        }
        doc["suites"] = suites;
        doc["ok"] = rep.ok();
        doc["total_checks"] = rep.total_checks();
        std::cout << doc.dump(2) << "\n";
    }
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact splitting-subspace and polynomial-matrix counts over F_q"};
    app.require_subcommand(1);
    Common common;

    auto* s_snf = app.add_subcommand("snf", "Smith form of a polynomial matrix");
    std::string arg_matrix, arg_file, arg_inv, arg_type;
    bool arg_witnesses = false;
    s_snf->add_option("--matrix", arg_matrix, "rows ';'-separated, entries ','-separated");
    s_snf->add_option("--file", arg_file, "file holding the matrix in the same grammar");
    s_snf->add_flag("--witnesses", arg_witnesses, "also emit unimodular witnesses A, B");
    add_common(s_snf, common);

    auto* s_mu = app.add_subcommand("mu", "count elements of M_q(n,k,d) with given invariant factors");
    unsigned arg_n = 0, arg_k = 0, arg_m = 0, arg_d = 0, arg_maxmd = 4;
    s_mu->add_option("--n", arg_n, "rows")->required();
    s_mu->add_option("--k", arg_k, "columns")->required();
    s_mu->add_option("--d", arg_d, "degree")->required();
    s_mu->add_option("--invariants", arg_inv, "tuple p_1,...  with p_i | p_{i+1}")->required();
    add_common(s_mu, common);

    auto* s_sigma = app.add_subcommand("sigma", "count m-dimensional splitting subspaces");
    s_sigma->add_option("--m", arg_m, "subspace dimension")->required();
    s_sigma->add_option("--d", arg_d, "Krylov depth")->required();
    s_sigma->add_option("--invariants", arg_inv, "invariant factors of the operator");
    s_sigma->add_option("--type", arg_type, "similarity type, e.g. {(1,[2]),(2,[1])}");
    add_common(s_sigma, common);

    auto* s_kappa = app.add_subcommand("kappa", "probability that m random vectors T-span at depth d");
    s_kappa->add_option("--m", arg_m, "number of vectors")->required();
    s_kappa->add_option("--d", arg_d, "Krylov depth")->required();
    s_kappa->add_option("--invariants", arg_inv, "invariant factors of the operator");
    s_kappa->add_option("--type", arg_type, "similarity type");
    add_common(s_kappa, common);

    auto* s_exists = app.add_subcommand("exists", "does an m-dimensional splitting subspace exist");
    s_exists->add_option("--m", arg_m, "subspace dimension")->required();
    s_exists->add_option("--d", arg_d, "Krylov depth")->required();
    s_exists->add_option("--invariants", arg_inv, "invariant factors of the operator");
    s_exists->add_option("--type", arg_type, "similarity type");
    add_common(s_exists, common);

    auto* s_cent = app.add_subcommand("centralizer", "order of the centralizer of an operator");
    s_cent->add_option("--invariants", arg_inv, "invariant factors of the operator");
    s_cent->add_option("--matrix", arg_matrix, "square scalar matrix of entry codes");
    add_common(s_cent, common);

    auto* s_table = app.add_subcommand("table", "histogram of M_q(n,k,d) or census of types of size m*d");
    std::optional<unsigned> opt_n, opt_k, opt_m, opt_d;
    s_table->add_option("--n", opt_n, "rows (histogram mode)");
    s_table->add_option("--k", opt_k, "columns (histogram mode)");
    s_table->add_option("--m", opt_m, "subspace dimension (census mode)");
    s_table->add_option("--d", opt_d, "degree / Krylov depth");
    add_common(s_table, common);

    auto* s_verify = app.add_subcommand("verify", "sweep closed forms against oracles");
    s_verify->add_option("--max-md", arg_maxmd, "largest ambient dimension m*d swept");
    add_common(s_verify, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const Fq f = Fq::parse(common.field);
        if (app.got_subcommand(s_snf))
            return cmd_snf(f, common, arg_matrix, arg_file, arg_witnesses);
        if (app.got_subcommand(s_mu))
            return cmd_mu(f, common, arg_n, arg_k, arg_d, arg_inv);
        if (app.got_subcommand(s_sigma))
            return cmd_sigma(f, common, arg_m, arg_d, arg_inv, arg_type, false);
        if (app.got_subcommand(s_kappa))
            return cmd_sigma(f, common, arg_m, arg_d, arg_inv, arg_type, true);
        if (app.got_subcommand(s_exists))
            return cmd_exists(f, common, arg_m, arg_d, arg_inv, arg_type);
        if (app.got_subcommand(s_cent))
            return cmd_centralizer(f, common, arg_inv, arg_matrix);
        if (app.got_subcommand(s_table))
            return cmd_table(f, common, opt_n, opt_k, opt_m, opt_d);
        return cmd_verify(f, common, arg_maxmd);
    } catch (const not_covered& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;
    }
}
