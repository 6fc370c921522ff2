#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace matchdist {

// A symbol is an index into an Alphabet (0 .. size-1).
using Symbol = unsigned char;

// A sequence of Symbol values stored as raw bytes. Not printable text;
// use Alphabet::decode to render it.
using SymbolString = std::string;

// Finite indexed alphabet over single characters.
class Alphabet {
public:
    explicit Alphabet(std::string_view characters);

    std::size_t size() const { return characters_.size(); }
    const std::string& characters() const { return characters_; }

    char character(Symbol s) const;
    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    Symbol index_of(char c) const;

    // Maps printable text to symbol indices; throws on characters outside
    // the alphabet.
    SymbolString encode(std::string_view text) const;
    std::string decode(std::string_view symbols) const;

    bool operator==(const Alphabet& other) const { return characters_ == other.characters_; }

private:
    std::string characters_;
    std::array<int, 256> index_;
};

}  // namespace matchdist
