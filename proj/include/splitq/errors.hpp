#pragma once

#include <stdexcept>
#include <string>

namespace splitq {

// Malformed text input (polynomial grammar, field spec, matrix, partition, type).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured budget.  Oracles are
// exact or absent; they never truncate silently.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace splitq
