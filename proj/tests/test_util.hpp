#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matchdist/matchers.hpp"
#include "matchdist/text_model.hpp"

namespace testutil {

using matchdist::Alphabet;
using matchdist::Pattern;
using matchdist::Symbol;
using matchdist::SymbolString;

inline Alphabet binary() { return Alphabet("ab"); }

inline Pattern make_pattern(const std::string& text, const std::string& alphabet = "ab") {
    return Pattern(Alphabet(alphabet), text);
}

// All symbol strings of the given length over sigma symbols, lexicographic.
inline std::vector<SymbolString> all_strings(std::size_t sigma, std::size_t length) {
    std::vector<SymbolString> out;
    SymbolString cur(length, char(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = length;
        while (i > 0) {
            --i;
            if (static_cast<std::size_t>(static_cast<Symbol>(cur[i])) + 1 < sigma) {
                ++cur[i];
                break;
            }
            cur[i] = char(0);
            if (i == 0) return out;
        }
        if (length == 0) return out;
    }
}

inline std::set<SymbolString> brute_suffixes(const SymbolString& x) {
    std::set<SymbolString> out;
    for (std::size_t i = 0; i <= x.size(); ++i) out.insert(x.substr(i));
    return out;
}

inline std::set<SymbolString> brute_factors(const SymbolString& x) {
    std::set<SymbolString> out;
    out.insert(SymbolString());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t len = 1; i + len <= x.size(); ++len) out.insert(x.substr(i, len));
    }
    return out;
}

inline SymbolString random_string(std::mt19937& rng, std::size_t sigma, std::size_t length) {
    SymbolString out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(static_cast<char>(rng() % sigma));
    }
    return out;
}

// Two-context model: from context 0 emit a (p=0.4, stay) or b (p=0.6, move
// to context 1); from context 1 emit a (p=0.8, back to 0) or b (p=0.2, stay).
inline const char* kTwoContextModelJson = R"({
  "alphabet": ["a", "b"],
  "contexts": 2,
  "start": 0,
  "transitions": [
    {"from": 0, "symbol": "a", "to": 0, "p": 0.4},
    {"from": 0, "symbol": "b", "to": 1, "p": 0.6},
    {"from": 1, "symbol": "a", "to": 0, "p": 0.8},
    {"from": 1, "symbol": "b", "to": 1, "p": 0.2}
  ]
})";

inline matchdist::TextModel two_context_model() {
    return matchdist::TextModel::from_json(nlohmann::json::parse(kTwoContextModelJson));
}

}  // namespace testutil
