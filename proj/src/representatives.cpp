#include "matchdist/representatives.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matchdist {

namespace {
struct LenLexLess {
    bool operator()(const SymbolString& a, const SymbolString& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};
}  // namespace

RepSet::RepSet(ClosureKind kind, Pattern pattern, std::vector<SymbolString> reps)
    : kind_(kind),
      pattern_(std::move(pattern)),
      sigma_(pattern_.alphabet.size()),
      reps_(std::move(reps)) {
    index_.reserve(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        index_.emplace(reps_[i], static_cast<int>(i));
    }
    const std::size_t m = pattern_.length();
    delta_.resize(reps_.size() * sigma_);
    for (std::size_t r = 0; r < reps_.size(); ++r) {
        for (std::size_t c = 0; c < sigma_; ++c) {
            SymbolString t = reps_[r];
            t.push_back(static_cast<char>(c));
            if (t.size() > m) t.erase(0, t.size() - m);
            delta_[r * sigma_ + c] = rep_of(t);
        }
    }
    pattern_rep_ = rep_of(pattern_.symbols);
    annotations_.assign(reps_.size(), std::nullopt);
}

RepSet RepSet::substring_closure(const Pattern& pattern) {
    std::set<SymbolString, LenLexLess> strings;
    strings.insert(SymbolString());
    const std::size_t m = pattern.length();
    for (std::size_t i = 0; i < m; ++i) {
        SymbolString cur;
        for (std::size_t j = i; j < m; ++j) {
            cur.push_back(pattern.symbols[j]);
            strings.insert(cur);
        }
    }
    return RepSet(ClosureKind::substrings, pattern,
                  std::vector<SymbolString>(strings.begin(), strings.end()));
}

RepSet RepSet::oracle_closure(const Pattern& pattern, std::size_t rep_guard) {
    FactorOracle oracle(pattern.alphabet, reversed(pattern.symbols));
    std::vector<SymbolString> reps = enumerate_non_failing(oracle, pattern.length(), rep_guard);
    for (SymbolString& s : reps) s = reversed(s);
    std::sort(reps.begin(), reps.end(), LenLexLess{});
    return RepSet(ClosureKind::oracle_factors, pattern, std::move(reps));
}

int RepSet::rep_of(std::string_view a) const {
    const std::size_t longest = std::min(a.size(), pattern_.length());
    for (std::size_t len = longest;; --len) {
        auto it = index_.find(SymbolString(a.substr(a.size() - len)));
        if (it != index_.end()) return it->second;
        if (len == 0) break;
    }
    throw std::logic_error("representative set does not contain the empty string");
}

void RepSet::annotate(Algorithm algorithm) {
    const bool wants_oracle = algorithm == Algorithm::bom;
    if (wants_oracle != (kind_ == ClosureKind::oracle_factors)) {
        throw std::invalid_argument("closure kind is incompatible with the requested algorithm");
    }
    const std::size_t m = pattern_.length();
    Matcher matcher(algorithm, pattern_);
    annotations_.assign(reps_.size(), std::nullopt);
    for (std::size_t r = 0; r < reps_.size(); ++r) {
        if (reps_[r] == pattern_.symbols) {
            annotations_[r] = matcher.verdict(pattern_.symbols);
            continue;
        }
        // A representative is realizable iff some one-symbol left extension
        // leaves the closure; the extension, left-padded to window length,
        // is then a window whose longest in-closure suffix is exactly r
        // (the set is suffix-closed, so padding cannot re-enter it).
        for (std::size_t c = 0; c < sigma_; ++c) {
            SymbolString extended(1, static_cast<char>(c));
            extended += reps_[r];
            if (index_.count(extended) != 0) continue;
            SymbolString witness(m - extended.size(), char(0));
            witness += extended;
            annotations_[r] = matcher.verdict(witness);
            break;
        }
    }
    annotated_ = true;
    annotated_algorithm_ = algorithm;
}

Algorithm RepSet::annotated_algorithm() const {
    if (!annotated_) throw std::logic_error("representative set has no annotations yet");
    return annotated_algorithm_;
}

}  // namespace matchdist
