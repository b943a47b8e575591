#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cuspcensus {

struct VariableMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Groebner S-pair/reduction budget exhausted. Never a wrong answer:
// callers surface this as a "budget" verdict.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    size_t line;
    size_t column;
    ParseError(const std::string& what, size_t line_, size_t col_)
        : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace cuspcensus
