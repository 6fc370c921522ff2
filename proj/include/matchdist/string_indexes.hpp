#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

#include "matchdist/alphabet.hpp"
#include "matchdist/guards.hpp"

namespace matchdist {

inline constexpr int kFail = -1;

// Minimal deterministic automaton accepting exactly the suffixes of the
// source string (including the empty one). A string is a factor of the
// source iff the automaton reads it without failing.
class SuffixAutomaton {
public:
    SuffixAutomaton(const Alphabet& alphabet, std::string_view source);

    int initial() const { return 0; }
    int step(int state, Symbol c) const { return next_[static_cast<std::size_t>(state) * sigma_ + c]; }
    bool accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
    int suffix_link(int state) const { return link_[static_cast<std::size_t>(state)]; }

    int state_count() const { return static_cast<int>(link_.size()); }
    int transition_count() const;

    const Alphabet& alphabet() const { return alphabet_; }
    const SymbolString& source() const { return source_; }

private:
    int new_state(int len, int link);
    void extend(Symbol c);

    Alphabet alphabet_;
    SymbolString source_;
    std::size_t sigma_;
    std::vector<int> next_;   // state * sigma + symbol, kFail when absent
    std::vector<int> link_;
    std::vector<int> len_;
    std::vector<bool> accepting_;
    int last_ = 0;
};

// Factor oracle of the source string: exactly |source|+1 states, accepts
// every factor plus possibly a few more strings. Transition targets strictly
// increase along any path, so the only accepted string of full length is the
// source itself.
class FactorOracle {
public:
    FactorOracle(const Alphabet& alphabet, std::string_view source);

    int initial() const { return 0; }
    int step(int state, Symbol c) const { return next_[static_cast<std::size_t>(state) * sigma_ + c]; }
    bool accepting(int) const { return true; }  // acceptance == not failing

    int state_count() const { return static_cast<int>(source_.size()) + 1; }

    const Alphabet& alphabet() const { return alphabet_; }
    const SymbolString& source() const { return source_; }

private:
    Alphabet alphabet_;
    SymbolString source_;
    std::size_t sigma_;
    std::vector<int> next_;
    std::vector<int> supply_;
};

// Number of successful transitions reading `sequence` from the initial
// state, stopping at (and not counting) the first failing one.
template <class Index>
int count_transitions_before_fail(const Index& index, std::string_view sequence) {
    int state = index.initial();
    int count = 0;
    for (char c : sequence) {
        state = index.step(state, static_cast<Symbol>(c));
        if (state == kFail) break;
        ++count;
    }
    return count;
}

namespace detail {
template <class Index>
void collect_non_failing(const Index& index, int state, SymbolString& prefix, std::size_t max_len,
                         std::size_t max_count, std::vector<SymbolString>& out) {
    if (out.size() > max_count) {
        throw guard_error("accepted-string enumeration exceeds budget");
    }
    out.push_back(prefix);
    if (prefix.size() == max_len) return;
    for (std::size_t c = 0; c < index.alphabet().size(); ++c) {
        int to = index.step(state, static_cast<Symbol>(c));
        if (to == kFail) continue;
        prefix.push_back(static_cast<char>(c));
        collect_non_failing(index, to, prefix, max_len, max_count, out);
        prefix.pop_back();
    }
}
}  // namespace detail

// Every string of length <= max_len the index reads without failing,
// ordered by (length, lexicographic).
template <class Index>
std::vector<SymbolString> enumerate_non_failing(const Index& index, std::size_t max_len,
                                                std::size_t max_count = kDefaultEnumerationGuard) {
    std::vector<SymbolString> out;
    SymbolString prefix;
    detail::collect_non_failing(index, index.initial(), prefix, max_len, max_count, out);
    std::sort(out.begin(), out.end(), [](const SymbolString& a, const SymbolString& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

}  // namespace matchdist
