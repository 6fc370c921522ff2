#include "matchdist/brute.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace matchdist {

Distribution brute_distribution(Algorithm algorithm, const Pattern& pattern, const TextModel& model,
                                std::int64_t n, std::size_t text_guard) {
    if (n < 0) throw std::invalid_argument("text length must be >= 0");
    if (!(pattern.alphabet == model.alphabet())) {
        throw std::invalid_argument("pattern and text model use different alphabets");
    }
    const std::size_t sigma = pattern.alphabet.size();
    if (std::pow(static_cast<double>(sigma), static_cast<double>(n)) >
        static_cast<double>(text_guard)) {
        throw guard_error("text enumeration exceeds the guard");
    }

    Matcher matcher(algorithm, pattern);
    Distribution dist;
    dist.n = n;
    dist.algorithm = name(algorithm);
    dist.pattern = pattern.alphabet.decode(pattern.symbols);
    dist.model = model.description();
    dist.oracle = true;

    SymbolString text(static_cast<std::size_t>(n), char(0));
    while (true) {
        const double p = model.probability_of(text);
        if (p > 0.0) dist.pmf[matcher.run(text).total_cost] += p;
        // lexicographic odometer
        std::size_t i = text.size();
        while (i > 0) {
            --i;
            if (static_cast<std::size_t>(static_cast<Symbol>(text[i])) + 1 < sigma) {
                ++text[i];
                break;
            }
            text[i] = char(0);
            if (i == 0) return dist;
        }
        if (text.empty()) return dist;
    }
}

EmpiricalDistribution monte_carlo(Algorithm algorithm, const Pattern& pattern, const TextModel& model,
                                  std::int64_t n, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    if (n < 0) throw std::invalid_argument("text length must be >= 0");
    if (!(pattern.alphabet == model.alphabet())) {
        throw std::invalid_argument("pattern and text model use different alphabets");
    }
    Matcher matcher(algorithm, pattern);
    std::mt19937_64 rng(seed);
    EmpiricalDistribution empirical;
    empirical.samples = samples;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const SymbolString text = model.sample(static_cast<std::size_t>(n), rng);
        ++empirical.counts[matcher.run(text).total_cost];
    }
    return empirical;
}

}  // namespace matchdist
