#include <doctest.h>

#include <map>
#include <set>

#include "matchdist/representatives.hpp"
#include "test_util.hpp"

using namespace matchdist;
using testutil::all_strings;
using testutil::make_pattern;

namespace {

std::set<std::string> decoded_reps(const RepSet& reps) {
    std::set<std::string> out;
    for (int r = 0; r < reps.size(); ++r) out.insert(reps.pattern().alphabet.decode(reps.rep(r)));
    return out;
}

const Algorithm kAll[] = {Algorithm::bm, Algorithm::bmh, Algorithm::bndm, Algorithm::bom};

}  // namespace

TEST_CASE("substring closure contents") {
    SUBCASE("aa") {
        const Pattern aa = make_pattern("aa");
        const RepSet reps = RepSet::substring_closure(aa);
        CHECK(decoded_reps(reps) == std::set<std::string>{"", "a", "aa"});
        CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("aa"))) == aa.alphabet.encode("aa"));
        CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("ba"))) == aa.alphabet.encode("a"));
        CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("bb"))).empty());
        CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("ab"))).empty());
    }
    SUBCASE("ab") {
        const RepSet reps = RepSet::substring_closure(make_pattern("ab"));
        CHECK(decoded_reps(reps) == std::set<std::string>{"", "a", "b", "ab"});
    }
    SUBCASE("abab deduplicates repeated substrings") {
        const RepSet reps = RepSet::substring_closure(make_pattern("abab"));
        CHECK(reps.size() == 8);
        CHECK(decoded_reps(reps) ==
              std::set<std::string>{"", "a", "b", "ab", "ba", "aba", "bab", "abab"});
    }
}

TEST_CASE("oracle closure contents") {
    SUBCASE("aa") {
        const RepSet reps = RepSet::oracle_closure(make_pattern("aa"));
        CHECK(decoded_reps(reps) == std::set<std::string>{"", "a", "aa"});
    }
    SUBCASE("ab") {
        const RepSet reps = RepSet::oracle_closure(make_pattern("ab"));
        CHECK(decoded_reps(reps) == std::set<std::string>{"", "a", "b", "ab"});
    }
    SUBCASE("always a superset of the substrings") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t m = 1 + rng() % 8;
            const Pattern pattern(Alphabet("ab"), testutil::random_string(rng, 2, m));
            const RepSet oracle = RepSet::oracle_closure(pattern);
            const RepSet sub = RepSet::substring_closure(pattern);
            for (int r = 0; r < sub.size(); ++r) CHECK(oracle.contains(sub.rep(r)));
        }
    }
}

TEST_CASE("rep_of picks the longest suffix in the set") {
    const Pattern aa = make_pattern("aa");
    const RepSet reps = RepSet::substring_closure(aa);
    CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("bbba"))) == aa.alphabet.encode("a"));
    CHECK(reps.rep(reps.rep_of(aa.alphabet.encode("abab"))).empty());
    CHECK(reps.rep(reps.rep_of(SymbolString())).empty());
}

TEST_CASE("annotations carry the common verdicts") {
    const Pattern aa = make_pattern("aa");
    SUBCASE("bmh over substrings of aa") {
        RepSet reps = RepSet::substring_closure(aa);
        reps.annotate(Algorithm::bmh);
        CHECK(*reps.annotation(reps.rep_of(aa.alphabet.encode("aa"))) == WindowVerdict{2, 1});
        CHECK(*reps.annotation(reps.rep_of(aa.alphabet.encode("ba"))) == WindowVerdict{2, 1});
        CHECK(*reps.annotation(reps.rep_of(aa.alphabet.encode("bb"))) == WindowVerdict{1, 2});
    }
    SUBCASE("bndm over substrings of aa") {
        RepSet reps = RepSet::substring_closure(aa);
        reps.annotate(Algorithm::bndm);
        CHECK(*reps.annotation(reps.rep_of(aa.alphabet.encode("bb"))) == WindowVerdict{1, 2});
    }
    SUBCASE("bom over the oracle closure of aa") {
        RepSet reps = RepSet::oracle_closure(aa);
        reps.annotate(Algorithm::bom);
        CHECK(*reps.annotation(reps.rep_of(aa.alphabet.encode("ba"))) == WindowVerdict{2, 1});
    }
    SUBCASE("closure kind must match the algorithm") {
        RepSet sub = RepSet::substring_closure(aa);
        CHECK_THROWS_AS(sub.annotate(Algorithm::bom), std::invalid_argument);
        RepSet oracle = RepSet::oracle_closure(aa);
        CHECK_THROWS_AS(oracle.annotate(Algorithm::bmh), std::invalid_argument);
    }
}

TEST_CASE("transition map agrees with rep_of on shifted windows") {
    const std::string chars = "abc";
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        const Alphabet alphabet(chars.substr(0, sigma));
        for (std::size_t m = 1; m <= 4; ++m) {
            for (const auto& s : all_strings(sigma, m)) {
                const Pattern pattern(alphabet, SymbolString(s));
                for (const RepSet& reps :
                     {RepSet::substring_closure(pattern), RepSet::oracle_closure(pattern)}) {
                    CHECK(reps.rep(reps.rep_of_pattern()) == pattern.symbols);
                    for (const auto& window : all_strings(sigma, m)) {
                        for (std::size_t c = 0; c < sigma; ++c) {
                            SymbolString shifted = window.substr(1);
                            shifted.push_back(static_cast<char>(c));
                            CHECK(reps.delta(reps.rep_of(window), static_cast<Symbol>(c)) ==
                                  reps.rep_of(shifted));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("windows sharing a representative share the verdict") {
    const std::string chars = "abc";
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        const Alphabet alphabet(chars.substr(0, sigma));
        for (std::size_t m = 1; m <= 4; ++m) {
            for (const auto& s : all_strings(sigma, m)) {
                const Pattern pattern(alphabet, SymbolString(s));
                for (Algorithm algo : kAll) {
                    RepSet reps = algo == Algorithm::bom ? RepSet::oracle_closure(pattern)
                                                         : RepSet::substring_closure(pattern);
                    reps.annotate(algo);
                    const Matcher matcher(algo, pattern);
                    std::map<int, WindowVerdict> seen;
                    for (const auto& window : all_strings(sigma, m)) {
                        const WindowVerdict v = matcher.verdict(window);
                        const int rep = reps.rep_of(window);
                        auto [it, inserted] = seen.emplace(rep, v);
                        if (!inserted) CHECK(it->second == v);
                        // the annotation equals the verdict of every window
                        REQUIRE(reps.annotation(rep).has_value());
                        CHECK(*reps.annotation(rep) == v);
                    }
                }
            }
        }
    }
}

TEST_CASE("substring closure size stays within the quadratic bound") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng() % 12;
        const Pattern pattern(Alphabet("ab"), testutil::random_string(rng, 2, m));
        const RepSet reps = RepSet::substring_closure(pattern);
        CHECK(reps.size() <= static_cast<int>(m * (m + 1) / 2 + 1));
    }
}
