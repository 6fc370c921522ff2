#pragma once

#include <cstddef>
#include <stdexcept>

namespace matchdist {

// Thrown when a computation would exceed a resource budget. The CLI maps
// this to its own exit code, distinct from validation errors.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Default resource budgets. Callers may pass their own values; the CLI reads
// overrides from MATCHDIST_* environment variables.
inline constexpr std::size_t kDefaultNaiveWindowGuard = 1'000'000;            // sigma^m windows
inline constexpr std::size_t kDefaultEnumerationGuard = 1'000'000;            // accepted-string listing
inline constexpr std::size_t kDefaultBruteTextGuard = std::size_t{1} << 20;   // sigma^n texts
inline constexpr std::size_t kDefaultDpCellGuard = 32'000'000;                // states x value range

}  // namespace matchdist
