// Shared configuration, budgets and error types.

#ifndef CUBECALC_CONFIG_HPP
#define CUBECALC_CONFIG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubecalc {

// Enumeration and size budgets. All caps must stay positive; the CLI rejects
// non-positive values at parse time.
struct Config {
    int trunc_dim = 4;
    std::size_t max_level_size = 2'000'000;   // simplices per level of one object
    std::size_t max_total_size = 20'000'000;  // simplices per object
    std::size_t max_enumeration = 5'000'000;  // candidate families / maps per search
    bool validate_constructions = true;       // exhaustive simplicial-identity checks
    std::string default_mode = "strict";      // strict | homology
    std::string report_format = "text";       // text | structured
};

// Exit codes: 0 pass, 1 check failure, 2 usage/parse error, 3 budget exhaustion.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation would need levels above the stored/trusted range.
// `required` names the truncation that would make the call legal.
struct TruncationError : std::runtime_error {
    int required;
    TruncationError(const std::string& what, int required_dim)
        : std::runtime_error(what + " (need trunc_dim >= " + std::to_string(required_dim) + ")"),
          required(required_dim) {}
};

struct ValidationError : std::logic_error {
    explicit ValidationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cubecalc

#endif
