#pragma once

#include <cstdint>

#include "matchdist/distribution.hpp"
#include "matchdist/guards.hpp"
#include "matchdist/matchers.hpp"
#include "matchdist/text_model.hpp"

namespace matchdist {

// Ground-truth distribution by enumerating every length-n text in
// lexicographic symbol order and replaying the matcher on each. Exact up to
// float accumulation; refuses to enumerate past the guard.
Distribution brute_distribution(Algorithm algorithm, const Pattern& pattern, const TextModel& model,
                                std::int64_t n, std::size_t text_guard = kDefaultBruteTextGuard);

// Seeded Monte Carlo estimate of the same distribution.
EmpiricalDistribution monte_carlo(Algorithm algorithm, const Pattern& pattern, const TextModel& model,
                                  std::int64_t n, std::uint64_t samples, std::uint64_t seed);

}  // namespace matchdist
