#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "matchdist/guards.hpp"
#include "matchdist/representatives.hpp"

namespace matchdist {

// Deterministic arithmetic automaton specialized to additive integer
// emissions: a DFA whose states carry an emission added to a running value
// on entry. States pair a tracked string (a whole window, or its
// representative) with a countdown to the next window end; the emission is
// the window cost and fires exactly when the countdown hits zero.
//
// Only states reachable from the start are stored.
class Daa {
public:
    struct State {
        std::string label;  // printable tracked string
        int counter = 0;
        int emission = 0;
    };

    // Directly encodes the algorithm over all sigma^m windows. Test oracle;
    // refuses to build past the window guard.
    static Daa build_naive(Algorithm algorithm, const Pattern& pattern,
                           std::size_t window_guard = kDefaultNaiveWindowGuard);

    // Representative-based construction; `reps` must already be annotated.
    static Daa build_reduced(const RepSet& reps);

    // Folds `text` (symbol indices) through the automaton, accumulating
    // emissions from start value 0.
    std::int64_t value(std::string_view text) const;

    int state_count() const { return static_cast<int>(states_.size()); }
    int start() const { return start_; }
    int next(int state, Symbol c) const {
        return delta_[static_cast<std::size_t>(state) * sigma_ + c];
    }
    int emission(int state) const { return states_[static_cast<std::size_t>(state)].emission; }
    const State& state(int id) const { return states_[static_cast<std::size_t>(id)]; }

    int window_length() const { return window_length_; }
    const Alphabet& alphabet() const { return alphabet_; }

    // Line-oriented description of states and transitions.
    void dump(std::ostream& out) const;

private:
    Daa(Alphabet alphabet, int window_length)
        : alphabet_(std::move(alphabet)), sigma_(alphabet_.size()), window_length_(window_length) {}

    Alphabet alphabet_;
    std::size_t sigma_;
    int window_length_;
    std::vector<State> states_;
    std::vector<int> delta_;
    int start_ = 0;
};

}  // namespace matchdist
