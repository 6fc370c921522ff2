#include <doctest.h>

#include <set>

#include "matchdist/string_indexes.hpp"
#include "test_util.hpp"

using namespace matchdist;
using testutil::all_strings;
using testutil::brute_factors;
using testutil::brute_suffixes;

namespace {

std::set<SymbolString> accepted_language(const SuffixAutomaton& sa, std::size_t max_len) {
    std::set<SymbolString> out;
    for (const auto& s : enumerate_non_failing(sa, max_len)) {
        int state = sa.initial();
        for (char c : s) state = sa.step(state, static_cast<Symbol>(c));
        if (sa.accepting(state)) out.insert(s);
    }
    return out;
}

std::set<SymbolString> non_failing_set(const auto& index, std::size_t max_len) {
    const auto list = enumerate_non_failing(index, max_len);
    return {list.begin(), list.end()};
}

}  // namespace

TEST_CASE("suffix automaton accepts exactly the suffixes") {
    const Alphabet ab("ab");
    SUBCASE("aa") {
        const SuffixAutomaton sa(ab, ab.encode("aa"));
        CHECK(accepted_language(sa, 2) == brute_suffixes(ab.encode("aa")));
        for (int state = 0; state < sa.state_count(); ++state) {
            CHECK(sa.step(state, ab.index_of('b')) == kFail);
        }
    }
    SUBCASE("ab") {
        const SuffixAutomaton sa(ab, ab.encode("ab"));
        CHECK(accepted_language(sa, 2) == brute_suffixes(ab.encode("ab")));
    }
    SUBCASE("abcbc") {
        const Alphabet abc("abc");
        const SymbolString x = abc.encode("abcbc");
        const SuffixAutomaton sa(abc, x);
        CHECK(accepted_language(sa, x.size()) == brute_suffixes(x));
        CHECK(non_failing_set(sa, x.size()) == brute_factors(x));
    }
    SUBCASE("empty source rejected") {
        CHECK_THROWS_AS(SuffixAutomaton(ab, SymbolString()), std::invalid_argument);
    }
}

TEST_CASE("factor oracle structure") {
    const Alphabet ab("ab");
    SUBCASE("aa is a plain chain") {
        const FactorOracle fo(ab, ab.encode("aa"));
        CHECK(fo.state_count() == 3);
        CHECK(fo.step(0, ab.index_of('a')) == 1);
        CHECK(fo.step(1, ab.index_of('a')) == 2);
        for (int state = 0; state < 3; ++state) {
            CHECK(fo.step(state, ab.index_of('b')) == kFail);
        }
    }
    SUBCASE("every factor of abc is accepted") {
        const Alphabet abc("abc");
        const SymbolString x = abc.encode("abc");
        const FactorOracle fo(abc, x);
        for (const auto& factor : brute_factors(x)) {
            CHECK(count_transitions_before_fail(fo, factor) == static_cast<int>(factor.size()));
        }
    }
    SUBCASE("abbbaab accepts a superset of its factors with 8 states") {
        const SymbolString x = ab.encode("abbbaab");
        const FactorOracle fo(ab, x);
        CHECK(fo.state_count() == 8);
        const auto accepted = non_failing_set(fo, x.size());
        for (const auto& factor : brute_factors(x)) CHECK(accepted.count(factor) == 1);
    }
    SUBCASE("empty source rejected") {
        CHECK_THROWS_AS(FactorOracle(ab, SymbolString()), std::invalid_argument);
    }
}

TEST_CASE("transition counting before the first failure") {
    const Alphabet ab("ab");
    const SuffixAutomaton sa(ab, ab.encode("aa"));
    CHECK(count_transitions_before_fail(sa, ab.encode("b")) == 0);
    CHECK(count_transitions_before_fail(sa, ab.encode("ab")) == 1);
    const FactorOracle fo(ab, ab.encode("aa"));
    CHECK(count_transitions_before_fail(fo, ab.encode("aa")) == 2);
}

TEST_CASE("index invariants over all short patterns") {
    const std::string chars = "abc";
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        const Alphabet alphabet(chars.substr(0, sigma));
        for (std::size_t m = 1; m <= 5; ++m) {
            for (const auto& x : all_strings(sigma, m)) {
                const SuffixAutomaton sa(alphabet, x);
                CHECK(accepted_language(sa, m) == brute_suffixes(x));
                CHECK(non_failing_set(sa, m) == brute_factors(x));
                if (m >= 3) {
                    CHECK(sa.state_count() <= 2 * static_cast<int>(m) - 1);
                    CHECK(sa.transition_count() <= 3 * static_cast<int>(m) - 4);
                }

                const FactorOracle fo(alphabet, x);
                CHECK(fo.state_count() == static_cast<int>(m) + 1);
                const auto accepted = non_failing_set(fo, m);
                for (const auto& factor : brute_factors(x)) CHECK(accepted.count(factor) == 1);
                int full_length = 0;
                for (const auto& s : accepted) {
                    if (s.size() == m) {
                        ++full_length;
                        CHECK(s == x);
                    }
                }
                CHECK(full_length == 1);
            }
        }
    }
}

TEST_CASE("enumeration guard fires") {
    const Alphabet ab("ab");
    const FactorOracle fo(ab, ab.encode("abab"));
    CHECK_THROWS_AS(enumerate_non_failing(fo, 4, 2), guard_error);
}
