#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "splitq/fq.hpp"

namespace splitq::detail {

// Parses the polynomial term grammar ("c*x^k", "x^k", "x", "c" joined by
// "+") into ascending coefficient codes with trailing zeros stripped.
// Codes >= code_bound are rejected.
std::vector<elem> parse_poly_codes(const std::string& s, std::uint32_t code_bound);

// Inverse of parse_poly_codes: canonical descending-degree form, "0" for the
// zero polynomial.
std::string format_poly_codes(const std::vector<elem>& coeffs);

std::uint64_t parse_u64(const std::string& s);

// Splits on a separator, trimming ASCII whitespace around each piece.
std::vector<std::string> split_trim(const std::string& s, char sep);

}  // namespace splitq::detail
