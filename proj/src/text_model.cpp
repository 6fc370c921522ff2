#include "matchdist/text_model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace matchdist {

namespace {
constexpr double kRowTolerance = 1e-9;
}

TextModel::TextModel(Alphabet alphabet, int start, std::vector<std::vector<Arc>> arcs,
                     std::string description)
    : alphabet_(std::move(alphabet)),
      start_(start),
      arcs_(std::move(arcs)),
      description_(std::move(description)) {
    validate();
}

void TextModel::validate() const {
    if (arcs_.empty()) throw std::invalid_argument("text model needs at least one context");
    if (start_ < 0 || start_ >= context_count()) {
        throw std::invalid_argument("start context out of range");
    }
    for (int c = 0; c < context_count(); ++c) {
        double sum = 0.0;
        for (const Arc& arc : arcs_[static_cast<std::size_t>(c)]) {
            if (arc.symbol >= alphabet_.size()) {
                throw std::invalid_argument("transition emits a symbol outside the alphabet");
            }
            if (arc.to < 0 || arc.to >= context_count()) {
                throw std::invalid_argument("transition targets an unknown context");
            }
            if (arc.prob < 0.0 || arc.prob > 1.0) {
                throw std::invalid_argument("transition probability outside [0,1]");
            }
            sum += arc.prob;
        }
        if (std::abs(sum - 1.0) > kRowTolerance) {
            throw std::invalid_argument("outgoing probabilities of context " + std::to_string(c) +
                                        " sum to " + std::to_string(sum) + ", expected 1");
        }
    }
}

TextModel TextModel::iid(const Alphabet& alphabet, const std::vector<double>& probs) {
    if (probs.size() != alphabet.size()) {
        throw std::invalid_argument("need one probability per alphabet symbol");
    }
    std::vector<Arc> arcs;
    for (std::size_t s = 0; s < probs.size(); ++s) {
        arcs.push_back({static_cast<Symbol>(s), 0, probs[s]});
    }
    return TextModel(alphabet, 0, {std::move(arcs)}, "iid");
}

TextModel TextModel::markov(const Alphabet& alphabet, int order, const std::vector<double>& initial,
                            const std::map<SymbolString, std::vector<double>>& conditional) {
    if (order < 1) throw std::invalid_argument("markov order must be >= 1");
    const std::size_t sigma = alphabet.size();
    if (initial.size() != sigma) {
        throw std::invalid_argument("initial distribution needs one probability per symbol");
    }
    // Contexts are symbol histories of length 0..order, ordered by
    // (length, lex); the empty history is the start context.
    std::vector<SymbolString> histories{SymbolString()};
    for (std::size_t begin = 0, len = 1; len <= static_cast<std::size_t>(order); ++len) {
        const std::size_t end = histories.size();
        for (std::size_t h = begin; h < end; ++h) {
            for (std::size_t c = 0; c < sigma; ++c) {
                histories.push_back(histories[h] + static_cast<char>(c));
            }
        }
        begin = end;
    }
    std::sort(histories.begin(), histories.end(), [](const SymbolString& a, const SymbolString& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::map<SymbolString, int> id;
    for (std::size_t i = 0; i < histories.size(); ++i) id[histories[i]] = static_cast<int>(i);

    std::vector<std::vector<Arc>> arcs(histories.size());
    for (std::size_t h = 0; h < histories.size(); ++h) {
        const SymbolString& history = histories[h];
        const std::vector<double>* row = nullptr;
        if (history.size() == static_cast<std::size_t>(order)) {
            auto it = conditional.find(history);
            if (it == conditional.end()) {
                throw std::invalid_argument("conditional table lacks a row for a length-" +
                                            std::to_string(order) + " history");
            }
            if (it->second.size() != sigma) {
                throw std::invalid_argument("conditional row needs one probability per symbol");
            }
            row = &it->second;
        } else {
            row = &initial;  // burn-in: history still shorter than the order
        }
        for (std::size_t c = 0; c < sigma; ++c) {
            SymbolString next = history + static_cast<char>(c);
            if (next.size() > static_cast<std::size_t>(order)) next.erase(0, 1);
            arcs[h].push_back({static_cast<Symbol>(c), id.at(next), (*row)[c]});
        }
    }
    return TextModel(alphabet, 0, std::move(arcs), "markov-order-" + std::to_string(order));
}

TextModel TextModel::from_json(const nlohmann::json& document) {
    if (!document.is_object()) throw std::invalid_argument("model document must be an object");
    static const std::set<std::string> known{"alphabet", "contexts", "start", "transitions"};
    for (const auto& [key, _] : document.items()) {
        if (known.count(key) == 0) {
            throw std::invalid_argument("unknown field '" + key + "' in model document");
        }
    }
    for (const std::string& key : known) {
        if (!document.contains(key)) {
            throw std::invalid_argument("model document lacks field '" + key + "'");
        }
    }

    const auto& alpha_json = document.at("alphabet");
    if (!alpha_json.is_array() || alpha_json.empty()) {
        throw std::invalid_argument("'alphabet' must be a nonempty array of single-character strings");
    }
    std::string characters;
    for (const auto& entry : alpha_json) {
        if (!entry.is_string() || entry.get<std::string>().size() != 1) {
            throw std::invalid_argument("'alphabet' entries must be single-character strings");
        }
        characters += entry.get<std::string>();
    }
    Alphabet alphabet(characters);

    if (!document.at("contexts").is_number_integer()) {
        throw std::invalid_argument("'contexts' must be an integer");
    }
    const int contexts = document.at("contexts").get<int>();
    if (contexts < 1) throw std::invalid_argument("'contexts' must be >= 1");
    if (!document.at("start").is_number_integer()) {
        throw std::invalid_argument("'start' must be an integer");
    }
    const int start = document.at("start").get<int>();

    const auto& trans_json = document.at("transitions");
    if (!trans_json.is_array()) throw std::invalid_argument("'transitions' must be an array");
    std::vector<std::vector<Arc>> arcs(static_cast<std::size_t>(contexts));
    std::set<std::tuple<int, Symbol, int>> seen;
    static const std::set<std::string> arc_keys{"from", "symbol", "to", "p"};
    for (const auto& row : trans_json) {
        if (!row.is_object()) throw std::invalid_argument("transition rows must be objects");
        for (const auto& [key, _] : row.items()) {
            if (arc_keys.count(key) == 0) {
                throw std::invalid_argument("unknown field '" + key + "' in transition row");
            }
        }
        for (const std::string& key : arc_keys) {
            if (!row.contains(key)) {
                throw std::invalid_argument("transition row lacks field '" + key + "'");
            }
        }
        const int from = row.at("from").get<int>();
        if (from < 0 || from >= contexts) throw std::invalid_argument("transition 'from' out of range");
        const std::string symbol_text = row.at("symbol").get<std::string>();
        if (symbol_text.size() != 1 || !alphabet.contains(symbol_text[0])) {
            throw std::invalid_argument("transition symbol not in declared alphabet");
        }
        const Symbol symbol = alphabet.index_of(symbol_text[0]);
        const int to = row.at("to").get<int>();
        if (!row.at("p").is_number()) throw std::invalid_argument("transition 'p' must be a number");
        const double p = row.at("p").get<double>();
        if (!seen.emplace(from, symbol, to).second) {
            throw std::invalid_argument("duplicate transition row");
        }
        arcs[static_cast<std::size_t>(from)].push_back({symbol, to, p});
    }
    for (auto& row : arcs) {
        std::sort(row.begin(), row.end(), [](const Arc& a, const Arc& b) {
            return a.symbol != b.symbol ? a.symbol < b.symbol : a.to < b.to;
        });
    }
    return TextModel(std::move(alphabet), start, std::move(arcs), "document");
}

TextModel TextModel::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
    nlohmann::json document;
    try {
        in >> document;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("model file '" + path + "' is not valid JSON: " + e.what());
    }
    TextModel model = from_json(document);
    model.set_description(path);
    return model;
}

double TextModel::phi(int context, Symbol symbol, int to) const {
    double p = 0.0;
    for (const Arc& arc : arcs(context)) {
        if (arc.symbol == symbol && arc.to == to) p += arc.prob;
    }
    return p;
}

double TextModel::probability_of(std::string_view x) const {
    std::vector<double> forward(static_cast<std::size_t>(context_count()), 0.0);
    forward[static_cast<std::size_t>(start_)] = 1.0;
    std::vector<double> next(forward.size());
    for (char raw : x) {
        const auto symbol = static_cast<Symbol>(raw);
        if (symbol >= alphabet_.size()) {
            throw std::invalid_argument("string symbol outside the model alphabet");
        }
        std::fill(next.begin(), next.end(), 0.0);
        for (int c = 0; c < context_count(); ++c) {
            const double mass = forward[static_cast<std::size_t>(c)];
            if (mass == 0.0) continue;
            for (const Arc& arc : arcs(c)) {
                if (arc.symbol == symbol) next[static_cast<std::size_t>(arc.to)] += mass * arc.prob;
            }
        }
        forward.swap(next);
    }
    double total = 0.0;
    for (double p : forward) total += p;
    return total;
}

SymbolString TextModel::sample(std::size_t n, std::mt19937_64& rng) const {
    SymbolString text;
    text.reserve(n);
    int context = start_;
    for (std::size_t i = 0; i < n; ++i) {
        // 53-bit uniform draw; avoids distribution objects so output is
        // identical across standard libraries.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const std::vector<Arc>& row = arcs(context);
        double cumulative = 0.0;
        const Arc* chosen = &row.back();
        for (const Arc& arc : row) {
            cumulative += arc.prob;
            if (u < cumulative) {
                chosen = &arc;
                break;
            }
        }
        text.push_back(static_cast<char>(chosen->symbol));
        context = chosen->to;
    }
    return text;
}

SymbolString TextModel::sample(std::size_t n, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    return sample(n, rng);
}

}  // namespace matchdist
