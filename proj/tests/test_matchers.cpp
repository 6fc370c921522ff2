#include <doctest.h>

#include <set>

#include "matchdist/matchers.hpp"
#include "test_util.hpp"

using namespace matchdist;
using testutil::all_strings;
using testutil::make_pattern;

namespace {

const Algorithm kAll[] = {Algorithm::bm, Algorithm::bmh, Algorithm::bndm, Algorithm::bom};

std::vector<Pattern> patterns_up_to(std::size_t sigma, std::size_t max_len, const std::string& chars) {
    std::vector<Pattern> out;
    Alphabet alphabet(chars.substr(0, sigma));
    for (std::size_t m = 1; m <= max_len; ++m) {
        for (const auto& s : all_strings(sigma, m)) out.emplace_back(alphabet, SymbolString(s));
    }
    return out;
}

}  // namespace

TEST_CASE("bm cost counts right-to-left accesses up to the first mismatch") {
    const Pattern aa = make_pattern("aa");
    CHECK(bm_cost(aa, aa.alphabet.encode("aa")) == 2);
    CHECK(bm_cost(aa, aa.alphabet.encode("ba")) == 2);
    CHECK(bm_cost(aa, aa.alphabet.encode("ab")) == 1);
    CHECK(bm_cost(aa, aa.alphabet.encode("bb")) == 1);
    const Pattern abc = make_pattern("abc", "abc");
    CHECK(bm_cost(abc, abc.alphabet.encode("abc")) == 3);
    CHECK_THROWS_AS(bm_cost(aa, aa.alphabet.encode("a")), std::invalid_argument);
}

TEST_CASE("bad-character shift") {
    const Pattern aa = make_pattern("aa");
    CHECK(bad_character(aa, aa.alphabet.encode("ab"), 1) == 2);
    CHECK(bad_character(aa, aa.alphabet.encode("ba"), 2) == 1);
    const Pattern aaa = make_pattern("aaa");
    CHECK(bad_character(aaa, aaa.alphabet.encode("aab"), 1) == 3);
    CHECK_THROWS_AS(bad_character(aa, aa.alphabet.encode("ab"), 0), std::out_of_range);
    CHECK_THROWS_AS(bad_character(aa, aa.alphabet.encode("ab"), 3), std::out_of_range);
}

TEST_CASE("good-suffix shift") {
    const Pattern aa = make_pattern("aa");
    CHECK(good_suffix(aa, aa.alphabet.encode("ab"), 1) == 1);
    CHECK(good_suffix(aa, aa.alphabet.encode("ba"), 2) == 1);
    const Pattern ab = make_pattern("ab");
    CHECK(good_suffix(ab, ab.alphabet.encode("bb"), 2) == 2);
    CHECK_THROWS_AS(good_suffix(aa, aa.alphabet.encode("ab"), 0), std::out_of_range);
}

TEST_CASE("bm verdicts for aa") {
    const Pattern aa = make_pattern("aa");
    CHECK(bm_verdict(aa, aa.alphabet.encode("ab")) == WindowVerdict{1, 2});
    CHECK(bm_verdict(aa, aa.alphabet.encode("ba")) == WindowVerdict{2, 1});
    // full match shifts by m minus the longest proper border
    CHECK(bm_verdict(aa, aa.alphabet.encode("aa")) == WindowVerdict{2, 1});
    const Pattern ab = make_pattern("ab");
    CHECK(bm_verdict(ab, ab.alphabet.encode("ab")) == WindowVerdict{2, 2});
}

TEST_CASE("bmh verdicts for aa") {
    const Pattern aa = make_pattern("aa");
    CHECK(bmh_verdict(aa, aa.alphabet.encode("bb")) == WindowVerdict{1, 2});
    CHECK(bmh_verdict(aa, aa.alphabet.encode("ab")) == WindowVerdict{1, 2});
    CHECK(bmh_verdict(aa, aa.alphabet.encode("ba")) == WindowVerdict{2, 1});
    CHECK(bmh_verdict(aa, aa.alphabet.encode("aa")) == WindowVerdict{2, 1});
    // rightmost window character absent from the pattern: shift m
    const Pattern ab = make_pattern("ab", "abxy");
    CHECK(bmh_verdict(ab, ab.alphabet.encode("xy")) == WindowVerdict{1, 2});
}

TEST_CASE("bndm verdicts for aa") {
    const Pattern aa = make_pattern("aa");
    const SuffixAutomaton sa(aa.alphabet, reversed(aa.symbols));
    CHECK(bdm_verdict(aa, aa.alphabet.encode("ab"), sa) == WindowVerdict{1, 2});
    CHECK(bdm_verdict(aa, aa.alphabet.encode("ba"), sa) == WindowVerdict{2, 1});
    CHECK(bdm_verdict(aa, aa.alphabet.encode("aa"), sa) == WindowVerdict{2, 1});
    // automaton built for a different pattern is rejected
    const SuffixAutomaton other(aa.alphabet, aa.alphabet.encode("ab"));
    CHECK_THROWS_AS(bdm_verdict(aa, aa.alphabet.encode("aa"), other), std::invalid_argument);
}

TEST_CASE("bom verdicts for aa") {
    const Pattern aa = make_pattern("aa");
    const FactorOracle fo(aa.alphabet, reversed(aa.symbols));
    CHECK(bom_verdict(aa, aa.alphabet.encode("ab"), fo) == WindowVerdict{1, 2});
    CHECK(bom_verdict(aa, aa.alphabet.encode("ba"), fo) == WindowVerdict{2, 1});
    CHECK(bom_verdict(aa, aa.alphabet.encode("aa"), fo) == WindowVerdict{2, 1});
    const FactorOracle other(aa.alphabet, aa.alphabet.encode("ab"));
    CHECK_THROWS_AS(bom_verdict(aa, aa.alphabet.encode("aa"), other), std::invalid_argument);
}

TEST_CASE("run_matcher replays windows and sums costs") {
    const Pattern aa = make_pattern("aa");
    SUBCASE("bmh on abbaa") {
        const MatchTrace trace = run_matcher(Algorithm::bmh, aa, aa.alphabet.encode("abbaa"));
        REQUIRE(trace.entries.size() == 3);
        CHECK(trace.entries[0].start == 0);
        CHECK(trace.entries[1].start == 2);
        CHECK(trace.entries[2].start == 3);
        CHECK(trace.entries[2].is_match);
        CHECK(trace.total_cost == 5);
    }
    SUBCASE("text shorter than the pattern") {
        for (Algorithm algo : kAll) {
            const MatchTrace trace = run_matcher(algo, aa, aa.alphabet.encode("a"));
            CHECK(trace.entries.empty());
            CHECK(trace.total_cost == 0);
        }
    }
    SUBCASE("bmh on aaa") {
        CHECK(run_matcher(Algorithm::bmh, aa, aa.alphabet.encode("aaa")).total_cost == 4);
    }
}

TEST_CASE("verdict bounds hold for every window, all algorithms") {
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        for (const Pattern& pattern : patterns_up_to(sigma, 4, "abc")) {
            const int m = static_cast<int>(pattern.length());
            for (Algorithm algo : kAll) {
                const Matcher matcher(algo, pattern);
                for (const auto& window : all_strings(sigma, pattern.length())) {
                    const WindowVerdict v = matcher.verdict(window);
                    CHECK(v.cost >= 1);
                    CHECK(v.cost <= m);
                    CHECK(v.shift >= 1);
                    CHECK(v.shift <= m);
                    const bool is_match = window == pattern.symbols;
                    if (algo == Algorithm::bom) {
                        if (is_match) CHECK(v.cost == m);
                    } else {
                        CHECK((v.cost == m) == is_match);
                    }
                }
            }
        }
    }
}

TEST_CASE("bmh cost equals bm cost on every window") {
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        for (const Pattern& pattern : patterns_up_to(sigma, 4, "abc")) {
            for (const auto& window : all_strings(sigma, pattern.length())) {
                CHECK(bmh_verdict(pattern, window).cost == bm_verdict(pattern, window).cost);
            }
        }
    }
}

TEST_CASE("bndm shift dominates bom shift on every window") {
    for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
        for (const Pattern& pattern : patterns_up_to(sigma, 4, "abc")) {
            const Matcher bndm(Algorithm::bndm, pattern);
            const Matcher bom(Algorithm::bom, pattern);
            for (const auto& window : all_strings(sigma, pattern.length())) {
                CHECK(bndm.verdict(window).shift >= bom.verdict(window).shift);
            }
        }
    }
}

TEST_CASE("no occurrence is skipped and traces are self-consistent") {
    for (const Pattern& pattern : patterns_up_to(2, 3, "ab")) {
        const std::size_t m = pattern.length();
        for (Algorithm algo : kAll) {
            const Matcher matcher(algo, pattern);
            for (std::size_t n = 0; n <= 10; ++n) {
                for (const auto& text : all_strings(2, n)) {
                    const MatchTrace trace = matcher.run(text);

                    std::int64_t sum = 0;
                    std::int64_t expected_start = 0;
                    std::set<std::int64_t> matched;
                    for (const auto& entry : trace.entries) {
                        sum += entry.verdict.cost;
                        CHECK(entry.start == expected_start);  // advances by the preceding shift
                        expected_start = entry.start + entry.verdict.shift;
                        CHECK(entry.start + static_cast<std::int64_t>(m) <= static_cast<std::int64_t>(n));
                        const bool window_is_match =
                            text.substr(static_cast<std::size_t>(entry.start), m) == pattern.symbols;
                        CHECK(entry.is_match == window_is_match);
                        if (entry.is_match) matched.insert(entry.start);
                    }
                    CHECK(sum == trace.total_cost);

                    for (std::size_t p = 0; p + m <= n; ++p) {
                        if (text.substr(p, m) == pattern.symbols) {
                            CHECK(matched.count(static_cast<std::int64_t>(p)) == 1);
                        }
                    }
                }
            }
        }
    }
}
