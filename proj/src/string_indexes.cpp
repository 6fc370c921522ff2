#include "matchdist/string_indexes.hpp"

#include <stdexcept>

namespace matchdist {

namespace {
void check_source(const Alphabet& alphabet, std::string_view source) {
    if (source.empty()) {
        throw std::invalid_argument("index source must be nonempty");
    }
    for (char c : source) {
        if (static_cast<Symbol>(c) >= alphabet.size()) {
            throw std::invalid_argument("index source contains a symbol outside the alphabet");
        }
    }
}
}  // namespace

SuffixAutomaton::SuffixAutomaton(const Alphabet& alphabet, std::string_view source)
    : alphabet_(alphabet), source_(source), sigma_(alphabet.size()) {
    check_source(alphabet_, source_);
    link_.reserve(2 * source_.size());
    len_.reserve(2 * source_.size());
    new_state(0, kFail);
    for (char c : source_) extend(static_cast<Symbol>(c));
    // States on the suffix-link chain of the full string are exactly the
    // classes whose members all occur as suffixes.
    accepting_.assign(link_.size(), false);
    for (int s = last_; s != kFail; s = link_[static_cast<std::size_t>(s)]) {
        accepting_[static_cast<std::size_t>(s)] = true;
    }
}

int SuffixAutomaton::new_state(int len, int link) {
    len_.push_back(len);
    link_.push_back(link);
    next_.insert(next_.end(), sigma_, kFail);
    return static_cast<int>(len_.size()) - 1;
}

void SuffixAutomaton::extend(Symbol c) {
    int cur = new_state(len_[static_cast<std::size_t>(last_)] + 1, kFail);
    int p = last_;
    while (p != kFail && next_[static_cast<std::size_t>(p) * sigma_ + c] == kFail) {
        next_[static_cast<std::size_t>(p) * sigma_ + c] = cur;
        p = link_[static_cast<std::size_t>(p)];
    }
    if (p == kFail) {
        link_[static_cast<std::size_t>(cur)] = 0;
    } else {
        int q = next_[static_cast<std::size_t>(p) * sigma_ + c];
        if (len_[static_cast<std::size_t>(p)] + 1 == len_[static_cast<std::size_t>(q)]) {
            link_[static_cast<std::size_t>(cur)] = q;
        } else {
            int clone = new_state(len_[static_cast<std::size_t>(p)] + 1, link_[static_cast<std::size_t>(q)]);
            for (std::size_t i = 0; i < sigma_; ++i) {
                next_[static_cast<std::size_t>(clone) * sigma_ + i] = next_[static_cast<std::size_t>(q) * sigma_ + i];
            }
            while (p != kFail && next_[static_cast<std::size_t>(p) * sigma_ + c] == q) {
                next_[static_cast<std::size_t>(p) * sigma_ + c] = clone;
                p = link_[static_cast<std::size_t>(p)];
            }
            link_[static_cast<std::size_t>(q)] = clone;
            link_[static_cast<std::size_t>(cur)] = clone;
        }
    }
    last_ = cur;
}

int SuffixAutomaton::transition_count() const {
    int count = 0;
    for (int t : next_) count += (t != kFail);
    return count;
}

FactorOracle::FactorOracle(const Alphabet& alphabet, std::string_view source)
    : alphabet_(alphabet), source_(source), sigma_(alphabet.size()) {
    check_source(alphabet_, source_);
    const std::size_t m = source_.size();
    next_.assign((m + 1) * sigma_, kFail);
    supply_.assign(m + 1, kFail);
    for (std::size_t i = 1; i <= m; ++i) {
        auto c = static_cast<Symbol>(source_[i - 1]);
        next_[(i - 1) * sigma_ + c] = static_cast<int>(i);
        int k = supply_[i - 1];
        while (k != kFail && next_[static_cast<std::size_t>(k) * sigma_ + c] == kFail) {
            next_[static_cast<std::size_t>(k) * sigma_ + c] = static_cast<int>(i);
            k = supply_[static_cast<std::size_t>(k)];
        }
        supply_[i] = (k == kFail) ? 0 : next_[static_cast<std::size_t>(k) * sigma_ + c];
    }
}

}  // namespace matchdist
