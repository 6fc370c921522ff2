#pragma once

#include <cstdint>
#include <vector>

#include "matchdist/daa.hpp"
#include "matchdist/distribution.hpp"
#include "matchdist/text_model.hpp"

namespace matchdist {

// Probabilistic arithmetic automaton: the product of a cost automaton with a
// text model. Transitions carry probabilities (summed over the symbols
// inducing them); each state keeps the automaton state's additive emission.
// Only states reachable from the start are stored.
class Paa {
public:
    struct Edge {
        int to;
        double prob;
    };

    int state_count() const { return static_cast<int>(emission_.size()); }
    int start() const { return start_; }
    const std::vector<Edge>& edges(int state) const { return edges_[static_cast<std::size_t>(state)]; }
    int emission(int state) const { return emission_[static_cast<std::size_t>(state)]; }

    int daa_state(int state) const { return daa_state_[static_cast<std::size_t>(state)]; }
    int context(int state) const { return context_[static_cast<std::size_t>(state)]; }

    int window_length() const { return window_length_; }

private:
    friend Paa induce_paa(const Daa& daa, const TextModel& model);

    std::vector<int> daa_state_;
    std::vector<int> context_;
    std::vector<int> emission_;
    std::vector<std::vector<Edge>> edges_;  // sorted by target id
    int start_ = 0;
    int window_length_ = 0;
};

Paa induce_paa(const Daa& daa, const TextModel& model);

// Exact probability mass function of the accumulated value after reading n
// random characters: a dense dynamic program over (state, value) mass.
Distribution distribution(const Paa& paa, std::int64_t n,
                          std::size_t cell_guard = kDefaultDpCellGuard);

// Heuristic long-run cost-per-character estimate over a finite horizon.
struct RateReport {
    double estimate = 0.0;        // (E[X_2N] - E[X_N]) / N
    double expectation_n = 0.0;   // E[X_N]
    double expectation_2n = 0.0;  // E[X_2N]
    std::int64_t horizon = 0;     // N
    bool converged = false;       // half-window rate estimates agree within 1e-3
};

RateReport mean_rate(const Paa& paa, std::int64_t horizon);

}  // namespace matchdist
