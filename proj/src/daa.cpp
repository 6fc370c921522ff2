#include "matchdist/daa.hpp"

#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace matchdist {

Daa Daa::build_naive(Algorithm algorithm, const Pattern& pattern, std::size_t window_guard) {
    const std::size_t m = pattern.length();
    const std::size_t sigma = pattern.alphabet.size();
    if (std::pow(static_cast<double>(sigma), static_cast<double>(m)) >
        static_cast<double>(window_guard)) {
        throw guard_error("naive state space exceeds the window guard");
    }
    Matcher matcher(algorithm, pattern);
    std::unordered_map<SymbolString, WindowVerdict> verdicts;
    auto verdict_of = [&](const SymbolString& w) -> const WindowVerdict& {
        auto it = verdicts.find(w);
        if (it == verdicts.end()) it = verdicts.emplace(w, matcher.verdict(w)).first;
        return it->second;
    };

    Daa daa(pattern.alphabet, static_cast<int>(m));
    std::unordered_map<SymbolString, int> ids;  // key: window bytes + counter byte
    auto intern = [&](const SymbolString& window, int k) {
        SymbolString key = window;
        key.push_back(static_cast<char>(k));
        auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(daa.states_.size()));
        if (inserted) {
            daa.states_.push_back({pattern.alphabet.decode(window), k,
                                   k == 0 ? verdict_of(window).cost : 0});
            daa.delta_.insert(daa.delta_.end(), sigma, -1);
        }
        return std::pair(it->second, inserted);
    };

    std::deque<std::pair<SymbolString, int>> queue;
    daa.start_ = intern(pattern.symbols, static_cast<int>(m)).first;
    queue.emplace_back(pattern.symbols, static_cast<int>(m));
    while (!queue.empty()) {
        auto [window, k] = queue.front();
        queue.pop_front();
        const int from = ids.at(window + static_cast<char>(k));
        const int k_next = k > 0 ? k - 1 : verdict_of(window).shift - 1;
        for (std::size_t c = 0; c < sigma; ++c) {
            SymbolString shifted = window.substr(1);
            shifted.push_back(static_cast<char>(c));
            auto [to, inserted] = intern(shifted, k_next);
            daa.delta_[static_cast<std::size_t>(from) * sigma + c] = to;
            if (inserted) queue.emplace_back(std::move(shifted), k_next);
        }
    }
    return daa;
}

Daa Daa::build_reduced(const RepSet& reps) {
    if (!reps.annotated()) {
        throw std::logic_error("representative set must be annotated before building the automaton");
    }
    const Pattern& pattern = reps.pattern();
    const int m = reps.window_length();
    const std::size_t sigma = pattern.alphabet.size();

    Daa daa(pattern.alphabet, m);
    std::vector<int> ids(static_cast<std::size_t>(reps.size()) * (static_cast<std::size_t>(m) + 1), -1);
    auto slot = [&](int rep, int k) -> int& {
        return ids[static_cast<std::size_t>(rep) * (static_cast<std::size_t>(m) + 1) +
                   static_cast<std::size_t>(k)];
    };
    auto intern = [&](int rep, int k) {
        int& id = slot(rep, k);
        const bool inserted = id < 0;
        if (inserted) {
            id = static_cast<int>(daa.states_.size());
            int emission = 0;
            if (k == 0) {
                const auto& verdict = reps.annotation(rep);
                if (!verdict) {
                    throw std::logic_error("reachable zero-counter state lacks a verdict annotation");
                }
                emission = verdict->cost;
            }
            daa.states_.push_back({pattern.alphabet.decode(reps.rep(rep)), k, emission});
            daa.delta_.insert(daa.delta_.end(), sigma, -1);
        }
        return std::pair(id, inserted);
    };

    std::deque<std::pair<int, int>> queue;
    daa.start_ = intern(reps.rep_of_pattern(), m).first;
    queue.emplace_back(reps.rep_of_pattern(), m);
    while (!queue.empty()) {
        auto [rep, k] = queue.front();
        queue.pop_front();
        const int from = slot(rep, k);
        int k_next;
        if (k > 0) {
            k_next = k - 1;
        } else {
            const auto& verdict = reps.annotation(rep);
            if (!verdict) {
                throw std::logic_error("reachable zero-counter state lacks a verdict annotation");
            }
            k_next = verdict->shift - 1;
        }
        for (std::size_t c = 0; c < sigma; ++c) {
            const int rep_next = reps.delta(rep, static_cast<Symbol>(c));
            auto [to, inserted] = intern(rep_next, k_next);
            daa.delta_[static_cast<std::size_t>(from) * sigma + c] = to;
            if (inserted) queue.emplace_back(rep_next, k_next);
        }
    }
    return daa;
}

std::int64_t Daa::value(std::string_view text) const {
    std::int64_t value = 0;
    int state = start_;
    for (char c : text) {
        if (static_cast<Symbol>(c) >= sigma_) {
            throw std::invalid_argument("text symbol outside alphabet");
        }
        state = next(state, static_cast<Symbol>(c));
        value += emission(state);
    }
    return value;
}

void Daa::dump(std::ostream& out) const {
    out << "daa states=" << state_count() << " start=" << start_ << " m=" << window_length_
        << " alphabet=" << alphabet_.characters() << "\n";
    for (int s = 0; s < state_count(); ++s) {
        const State& st = states_[static_cast<std::size_t>(s)];
        out << s << "\t\"" << st.label << "\"\t" << st.counter << "\t" << st.emission << "\t";
        for (std::size_t c = 0; c < sigma_; ++c) {
            if (c > 0) out << ' ';
            out << alphabet_.character(static_cast<Symbol>(c)) << "->" << next(s, static_cast<Symbol>(c));
        }
        out << "\n";
    }
}

}  // namespace matchdist
