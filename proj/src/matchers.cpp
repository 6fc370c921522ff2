#include "matchdist/matchers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace matchdist {

const char* name(Algorithm a) {
    switch (a) {
        case Algorithm::bm: return "bm";
        case Algorithm::bmh: return "bmh";
        case Algorithm::bndm: return "bndm";
        case Algorithm::bom: return "bom";
    }
    return "?";
}

Algorithm algorithm_from_name(std::string_view s) {
    if (s == "bm") return Algorithm::bm;
    if (s == "bmh") return Algorithm::bmh;
    if (s == "bndm" || s == "bdm") return Algorithm::bndm;
    if (s == "bom") return Algorithm::bom;
    throw std::invalid_argument("unknown algorithm '" + std::string(s) + "' (expected bm, bmh, bndm, or bom)");
}

Pattern::Pattern(Alphabet a, SymbolString s) : alphabet(std::move(a)), symbols(std::move(s)) {
    if (symbols.empty()) {
        throw std::invalid_argument("pattern must be nonempty");
    }
    for (char c : symbols) {
        if (static_cast<Symbol>(c) >= alphabet.size()) {
            throw std::invalid_argument("pattern symbol outside alphabet");
        }
    }
}

Pattern::Pattern(const Alphabet& a, std::string_view text) : Pattern(a, a.encode(text)) {}

SymbolString reversed(std::string_view s) {
    return SymbolString(s.rbegin(), s.rend());
}

namespace {

int window_length(const Pattern& pattern, std::string_view window) {
    if (window.size() != pattern.length()) {
        throw std::invalid_argument("window length differs from pattern length");
    }
    return static_cast<int>(pattern.length());
}

void check_mismatch_index(const Pattern& pattern, int i) {
    if (i < 1 || i > static_cast<int>(pattern.length())) {
        throw std::out_of_range("mismatch index outside 1..m");
    }
}

// Length of the longest proper border (prefix that is also a suffix).
int longest_proper_border(const SymbolString& s) {
    const int m = static_cast<int>(s.size());
    std::vector<int> border(static_cast<std::size_t>(m) + 1, 0);
    border[0] = -1;
    for (int i = 1; i <= m; ++i) {
        int b = border[static_cast<std::size_t>(i - 1)];
        while (b >= 0 && s[static_cast<std::size_t>(b)] != s[static_cast<std::size_t>(i - 1)]) {
            b = border[static_cast<std::size_t>(b)];
        }
        border[static_cast<std::size_t>(i)] = b + 1;
    }
    return border[static_cast<std::size_t>(m)];
}

}  // namespace

int bm_cost(const Pattern& pattern, std::string_view window) {
    const int m = window_length(pattern, window);
    for (int i = 1; i <= m; ++i) {
        if (window[static_cast<std::size_t>(m - i)] != pattern.symbols[static_cast<std::size_t>(m - i)]) {
            return i;
        }
    }
    return m;
}

int bad_character(const Pattern& pattern, std::string_view window, int mismatch_index) {
    const int m = window_length(pattern, window);
    const int i = mismatch_index;
    check_mismatch_index(pattern, i);
    const char c = window[static_cast<std::size_t>(m - i)];
    for (int k = 1; k <= m - i; ++k) {
        if (pattern.symbols[static_cast<std::size_t>(m - i - k)] == c) return k;
    }
    return m - i + 1;
}

int good_suffix(const Pattern& pattern, std::string_view window, int mismatch_index) {
    const int m = window_length(pattern, window);
    const int i = mismatch_index;
    check_mismatch_index(pattern, i);
    const SymbolString& s = pattern.symbols;
    const std::string_view matched = window.substr(static_cast<std::size_t>(m - i + 1));  // length i-1

    // Rightmost reoccurrence of the matched suffix, preceded by a different
    // character (condition waived at k = 0).
    for (int k = m - i; k >= 0; --k) {
        if (std::string_view(s).substr(static_cast<std::size_t>(k), static_cast<std::size_t>(i - 1)) != matched) continue;
        if (k > 0 && s[static_cast<std::size_t>(k - 1)] == window[static_cast<std::size_t>(m - i)]) continue;
        return m - i - k + 1;
    }
    // Longest pattern prefix that is a suffix of the matched part.
    for (int k = i - 2; k >= 0; --k) {
        if (std::string_view(s).substr(0, static_cast<std::size_t>(k + 1)) ==
            window.substr(static_cast<std::size_t>(m - k - 1))) {
            return m - k - 1;
        }
    }
    return m;
}

WindowVerdict bm_verdict(const Pattern& pattern, std::string_view window) {
    const int m = window_length(pattern, window);
    const int cost = bm_cost(pattern, window);
    if (cost == m) {  // cost m occurs only on a full match
        return {m, m - longest_proper_border(pattern.symbols)};
    }
    const int i = cost;  // first mismatch position count
    return {cost, std::max(bad_character(pattern, window, i), good_suffix(pattern, window, i))};
}

WindowVerdict bmh_verdict(const Pattern& pattern, std::string_view window) {
    return {bm_cost(pattern, window), bad_character(pattern, window, 1)};
}

WindowVerdict bdm_verdict(const Pattern& pattern, std::string_view window,
                          const SuffixAutomaton& suffix_automaton) {
    const int m = window_length(pattern, window);
    if (!(suffix_automaton.alphabet() == pattern.alphabet) ||
        suffix_automaton.source() != reversed(pattern.symbols)) {
        throw std::invalid_argument("suffix automaton was not built for the reversed pattern");
    }
    // Feed the window right to left; record accepting depths < m (depth i
    // accepting means the last i window characters form a pattern prefix).
    int state = suffix_automaton.initial();
    int successful = 0;
    int best_prefix = 0;  // depth 0 is always accepting (empty prefix)
    for (int t = 1; t <= m; ++t) {
        state = suffix_automaton.step(state, static_cast<Symbol>(window[static_cast<std::size_t>(m - t)]));
        if (state == kFail) break;
        successful = t;
        if (t < m && suffix_automaton.accepting(state)) best_prefix = t;
    }
    const bool full_match = window == std::string_view(pattern.symbols);
    return {full_match ? m : successful + 1, m - best_prefix};
}

WindowVerdict bom_verdict(const Pattern& pattern, std::string_view window,
                          const FactorOracle& factor_oracle) {
    const int m = window_length(pattern, window);
    if (!(factor_oracle.alphabet() == pattern.alphabet) ||
        factor_oracle.source() != reversed(pattern.symbols)) {
        throw std::invalid_argument("factor oracle was not built for the reversed pattern");
    }
    if (window == std::string_view(pattern.symbols)) {
        return {m, 1};
    }
    const SymbolString backwards = reversed(window);
    const int k = count_transitions_before_fail(factor_oracle, backwards);
    return {k + 1, m - k};
}

Matcher::Matcher(Algorithm algorithm, Pattern pattern)
    : algorithm_(algorithm), pattern_(std::move(pattern)) {
    if (algorithm_ == Algorithm::bndm) {
        suffix_automaton_ = std::make_unique<SuffixAutomaton>(pattern_.alphabet, reversed(pattern_.symbols));
    } else if (algorithm_ == Algorithm::bom) {
        factor_oracle_ = std::make_unique<FactorOracle>(pattern_.alphabet, reversed(pattern_.symbols));
    }
}

WindowVerdict Matcher::verdict(std::string_view window) const {
    switch (algorithm_) {
        case Algorithm::bm: return bm_verdict(pattern_, window);
        case Algorithm::bmh: return bmh_verdict(pattern_, window);
        case Algorithm::bndm: return bdm_verdict(pattern_, window, *suffix_automaton_);
        case Algorithm::bom: return bom_verdict(pattern_, window, *factor_oracle_);
    }
    throw std::logic_error("unreachable");
}

MatchTrace Matcher::run(std::string_view text) const {
    const std::size_t m = pattern_.length();
    MatchTrace trace;
    std::size_t pos = 0;
    while (pos + m <= text.size()) {
        const std::string_view window = text.substr(pos, m);
        const WindowVerdict v = verdict(window);
        trace.entries.push_back({static_cast<std::int64_t>(pos), v, window == std::string_view(pattern_.symbols)});
        trace.total_cost += v.cost;
        pos += static_cast<std::size_t>(v.shift);
    }
    return trace;
}

}  // namespace matchdist
