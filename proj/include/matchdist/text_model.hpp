#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "matchdist/alphabet.hpp"

namespace matchdist {

// Finite-memory random-text model: a context machine that emits one symbol
// per transition. phi(c, sigma, c') is the probability of moving from
// context c to c' while emitting sigma; rows sum to 1 over (sigma, c').
// Subsumes i.i.d. models, Markov chains of any order, and character-emitting
// HMMs.
class TextModel {
public:
    struct Arc {
        Symbol symbol;
        int to;
        double prob;
    };

    static TextModel iid(const Alphabet& alphabet, const std::vector<double>& probs);

    // Order-r Markov chain. `conditional` maps each length-r symbol history
    // to its next-symbol distribution. The first r characters are drawn from
    // `initial` while the history is still shorter than r.
    static TextModel markov(const Alphabet& alphabet, int order,
                            const std::vector<double>& initial,
                            const std::map<SymbolString, std::vector<double>>& conditional);

    static TextModel from_json(const nlohmann::json& document);
    static TextModel load_file(const std::string& path);

    const Alphabet& alphabet() const { return alphabet_; }
    int context_count() const { return static_cast<int>(arcs_.size()); }
    int start_context() const { return start_; }
    const std::vector<Arc>& arcs(int context) const { return arcs_[static_cast<std::size_t>(context)]; }
    double phi(int context, Symbol symbol, int to) const;

    // Pr[T_0 .. T_{|x|-1} = x] via a forward pass over contexts.
    double probability_of(std::string_view x) const;

    SymbolString sample(std::size_t n, std::mt19937_64& rng) const;
    SymbolString sample(std::size_t n, std::uint64_t seed) const;

    const std::string& description() const { return description_; }
    void set_description(std::string d) { description_ = std::move(d); }

private:
    TextModel(Alphabet alphabet, int start, std::vector<std::vector<Arc>> arcs, std::string description);
    void validate() const;

    Alphabet alphabet_;
    int start_;
    std::vector<std::vector<Arc>> arcs_;  // per context, ordered by (symbol, to)
    std::string description_;
};

}  // namespace matchdist
