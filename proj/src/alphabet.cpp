#include "matchdist/alphabet.hpp"

#include <stdexcept>

namespace matchdist {

Alphabet::Alphabet(std::string_view characters) : characters_(characters) {
    if (characters_.empty()) {
        throw std::invalid_argument("alphabet must contain at least one symbol");
    }
    if (characters_.size() > 255) {
        throw std::invalid_argument("alphabet too large");
    }
    index_.fill(-1);
    for (std::size_t i = 0; i < characters_.size(); ++i) {
        auto c = static_cast<unsigned char>(characters_[i]);
        if (index_[c] >= 0) {
            throw std::invalid_argument("duplicate symbol in alphabet: '" + std::string(1, characters_[i]) + "'");
        }
        index_[c] = static_cast<int>(i);
    }
}

char Alphabet::character(Symbol s) const {
    if (s >= characters_.size()) {
        throw std::out_of_range("symbol index outside alphabet");
    }
    return characters_[s];
}

Symbol Alphabet::index_of(char c) const {
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0) {
        throw std::invalid_argument("character '" + std::string(1, c) + "' not in alphabet");
    }
    return static_cast<Symbol>(i);
}

SymbolString Alphabet::encode(std::string_view text) const {
    SymbolString out;
    out.reserve(text.size());
    for (char c : text) out.push_back(static_cast<char>(index_of(c)));
    return out;
}

std::string Alphabet::decode(std::string_view symbols) const {
    std::string out;
    out.reserve(symbols.size());
    for (char s : symbols) out.push_back(character(static_cast<Symbol>(s)));
    return out;
}

}  // namespace matchdist
