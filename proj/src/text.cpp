#include "splitq/text.hpp"

#include <algorithm>
#include <cctype>

namespace splitq::detail {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool all_digits(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

std::uint64_t parse_u64(const std::string& s) {
    std::string t = trim(s);
    if (!all_digits(t)) throw parse_error("expected a nonnegative integer, got \"" + s + "\"");
    std::uint64_t v = 0;
    for (char c : t) {
        if (v > (UINT64_MAX - 9) / 10) throw parse_error("integer out of range: \"" + s + "\"");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

std::vector<std::string> split_trim(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(trim(s.substr(start)));
            break;
        }
        out.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

std::vector<elem> parse_poly_codes(const std::string& s, std::uint32_t code_bound) {
    std::string body = trim(s);
    if (body.empty()) throw parse_error("empty polynomial");
    std::vector<elem> coeffs;
    auto add_term = [&](std::uint64_t c, std::uint64_t k) {
        if (c >= code_bound)
            throw parse_error("coefficient code " + std::to_string(c) + " is not below q=" +
                              std::to_string(code_bound));
        if (k > 4096) throw parse_error("exponent too large in polynomial");
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        // repeated exponents accumulate mod p via plain addition of codes only
        // for prime fields; keep it strict instead: reject duplicates.
        if (coeffs[k] != 0) throw parse_error("duplicate term for x^" + std::to_string(k));
        coeffs[k] = static_cast<elem>(c);
    };
    for (const std::string& raw : split_trim(body, '+')) {
        if (raw.empty()) throw parse_error("empty term in polynomial \"" + s + "\"");
        std::size_t xpos = raw.find('x');
        if (xpos == std::string::npos) {
            add_term(parse_u64(raw), 0);
            continue;
        }
        std::string cpart = trim(raw.substr(0, xpos));
        std::string rest = trim(raw.substr(xpos + 1));
        std::uint64_t c = 1;
        if (!cpart.empty()) {
            if (cpart.back() != '*') throw parse_error("malformed term \"" + raw + "\"");
            c = parse_u64(cpart.substr(0, cpart.size() - 1));
        }
        std::uint64_t k = 1;
        if (!rest.empty()) {
            if (rest.front() != '^') throw parse_error("malformed term \"" + raw + "\"");
            k = parse_u64(rest.substr(1));
        }
        if (c != 0) add_term(c, k);
    }
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

std::string format_poly_codes(const std::vector<elem>& coeffs) {
    if (coeffs.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        elem c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    if (out.empty()) return "0";  // all-zero input (not normalized)
    return out;
}

}  // namespace splitq::detail
