#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matchdist/guards.hpp"
#include "matchdist/matchers.hpp"

namespace matchdist {

enum class ClosureKind {
    substrings,      // all substrings of the pattern, incl. the empty string
    oracle_factors,  // strings whose reversal the reversed-pattern oracle accepts
};

// A set of window representatives: suffix-closed string set containing the
// empty string, with a total per-symbol transition map and, once annotated,
// the common (cost, shift) verdict of every window mapping to each
// representative.
class RepSet {
public:
    static RepSet substring_closure(const Pattern& pattern);
    static RepSet oracle_closure(const Pattern& pattern,
                                 std::size_t rep_guard = kDefaultEnumerationGuard);

    int size() const { return static_cast<int>(reps_.size()); }
    const SymbolString& rep(int id) const { return reps_[static_cast<std::size_t>(id)]; }
    bool contains(std::string_view s) const { return index_.count(SymbolString(s)) != 0; }

    // Longest suffix of `a` contained in the set; total because the empty
    // string is always a member.
    int rep_of(std::string_view a) const;

    int delta(int rep_id, Symbol c) const {
        return delta_[static_cast<std::size_t>(rep_id) * sigma_ + c];
    }

    int rep_of_pattern() const { return pattern_rep_; }
    ClosureKind kind() const { return kind_; }
    const Pattern& pattern() const { return pattern_; }
    int window_length() const { return static_cast<int>(pattern_.length()); }

    // Computes the per-representative verdicts for `algorithm` (substring
    // closure for bm/bmh/bndm, oracle closure for bom). Representatives
    // that no window maps to stay unannotated.
    void annotate(Algorithm algorithm);

    bool annotated() const { return annotated_; }
    Algorithm annotated_algorithm() const;
    const std::optional<WindowVerdict>& annotation(int rep_id) const {
        return annotations_[static_cast<std::size_t>(rep_id)];
    }

private:
    RepSet(ClosureKind kind, Pattern pattern, std::vector<SymbolString> reps);

    ClosureKind kind_;
    Pattern pattern_;
    std::size_t sigma_;
    std::vector<SymbolString> reps_;  // sorted by (length, lex); reps_[0] is empty
    std::unordered_map<SymbolString, int> index_;
    std::vector<int> delta_;
    int pattern_rep_ = 0;
    bool annotated_ = false;
    Algorithm annotated_algorithm_ = Algorithm::bm;
    std::vector<std::optional<WindowVerdict>> annotations_;
};

}  // namespace matchdist
