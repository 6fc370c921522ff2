#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "matchdist/alphabet.hpp"
#include "matchdist/string_indexes.hpp"

namespace matchdist {

// Window-based exact matchers whose per-window cost (character accesses)
// and shift are analyzed by this library.
enum class Algorithm { bm, bmh, bndm, bom };

const char* name(Algorithm a);
Algorithm algorithm_from_name(std::string_view s);

struct Pattern {
    Alphabet alphabet;
    SymbolString symbols;

    Pattern(Alphabet a, SymbolString s);
    // Convenience: encode printable text over the given alphabet.
    Pattern(const Alphabet& a, std::string_view text);

    std::size_t length() const { return symbols.size(); }
};

struct WindowVerdict {
    int cost = 0;   // character accesses spent on the window, 1..m
    int shift = 0;  // window advance afterwards, 1..m
    bool operator==(const WindowVerdict&) const = default;
};

// Replay of a concrete search: one entry per examined window.
struct MatchTrace {
    struct Entry {
        std::int64_t start = 0;
        WindowVerdict verdict;
        bool is_match = false;
    };
    std::vector<Entry> entries;
    std::int64_t total_cost = 0;
};

// Right-to-left comparison cost: m on a full match, else the position count
// up to and including the first mismatch.
int bm_cost(const Pattern& pattern, std::string_view window);

// Bad-character shift for the mismatch index i (1-based from the right).
int bad_character(const Pattern& pattern, std::string_view window, int mismatch_index);

// Good-suffix shift for the mismatch index i. The "preceding character
// differs" condition is waived at position 0, where no preceding character
// exists.
int good_suffix(const Pattern& pattern, std::string_view window, int mismatch_index);

WindowVerdict bm_verdict(const Pattern& pattern, std::string_view window);
WindowVerdict bmh_verdict(const Pattern& pattern, std::string_view window);

// suffix_automaton must be built over the reversed pattern.
WindowVerdict bdm_verdict(const Pattern& pattern, std::string_view window,
                          const SuffixAutomaton& suffix_automaton);

// factor_oracle must be built over the reversed pattern.
WindowVerdict bom_verdict(const Pattern& pattern, std::string_view window,
                          const FactorOracle& factor_oracle);

// Bundles a pattern with the index structure its algorithm needs, so window
// verdicts can be evaluated without rebuilding anything.
class Matcher {
public:
    Matcher(Algorithm algorithm, Pattern pattern);

    WindowVerdict verdict(std::string_view window) const;

    // Slides windows left to right over `text`, applying each verdict's
    // shift, until the next window would overhang the end.
    MatchTrace run(std::string_view text) const;

    Algorithm algorithm() const { return algorithm_; }
    const Pattern& pattern() const { return pattern_; }

private:
    Algorithm algorithm_;
    Pattern pattern_;
    std::unique_ptr<SuffixAutomaton> suffix_automaton_;  // bndm
    std::unique_ptr<FactorOracle> factor_oracle_;        // bom
};

inline MatchTrace run_matcher(Algorithm algorithm, const Pattern& pattern, std::string_view text) {
    return Matcher(algorithm, pattern).run(text);
}

SymbolString reversed(std::string_view s);

}  // namespace matchdist
