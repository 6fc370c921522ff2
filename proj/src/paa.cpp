#include "matchdist/paa.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace matchdist {

Paa induce_paa(const Daa& daa, const TextModel& model) {
    if (!(daa.alphabet() == model.alphabet())) {
        throw std::invalid_argument("automaton and text model use different alphabets");
    }
    Paa paa;
    paa.window_length_ = daa.window_length();

    std::map<std::pair<int, int>, int> ids;
    auto intern = [&](int q, int c) {
        auto [it, inserted] = ids.emplace(std::pair(q, c), paa.state_count());
        if (inserted) {
            paa.daa_state_.push_back(q);
            paa.context_.push_back(c);
            paa.emission_.push_back(daa.emission(q));
            paa.edges_.emplace_back();
        }
        return std::pair(it->second, inserted);
    };

    std::deque<int> queue;
    paa.start_ = intern(daa.start(), model.start_context()).first;
    queue.push_back(paa.start_);
    while (!queue.empty()) {
        const int from = queue.front();
        queue.pop_front();
        const int q = paa.daa_state_[static_cast<std::size_t>(from)];
        const int c = paa.context_[static_cast<std::size_t>(from)];
        std::map<int, double> merged;  // target -> summed probability
        for (const TextModel::Arc& arc : model.arcs(c)) {
            const int q_next = daa.next(q, arc.symbol);
            auto [to, inserted] = intern(q_next, arc.to);
            if (inserted) queue.push_back(to);
            merged[to] += arc.prob;
        }
        auto& edges = paa.edges_[static_cast<std::size_t>(from)];
        edges.reserve(merged.size());
        for (const auto& [to, prob] : merged) edges.push_back({to, prob});
    }
    return paa;
}

Distribution distribution(const Paa& paa, std::int64_t n, std::size_t cell_guard) {
    if (n < 0) throw std::invalid_argument("text length must be >= 0");
    const std::int64_t m = paa.window_length();
    if (n > std::int64_t{1} << 40) throw guard_error("text length too large for the distribution DP");
    const std::int64_t max_value = n < m ? 0 : (n - m + 1) * m;
    const std::size_t values = static_cast<std::size_t>(max_value) + 1;
    const std::size_t states = static_cast<std::size_t>(paa.state_count());
    if (states > cell_guard / values) {
        throw guard_error("distribution DP would exceed the cell guard");
    }

    // mass[s * values + v] = Pr[state s, accumulated value v] after t steps.
    std::vector<double> mass(states * values, 0.0);
    std::vector<double> next(states * values, 0.0);
    mass[static_cast<std::size_t>(paa.start()) * values] = 1.0;
    for (std::int64_t t = 0; t < n; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t s = 0; s < states; ++s) {
            const double* row = mass.data() + s * values;
            for (std::size_t v = 0; v < values; ++v) {
                const double p = row[v];
                if (p == 0.0) continue;
                for (const Paa::Edge& edge : paa.edges(static_cast<int>(s))) {
                    const std::size_t v_next = v + static_cast<std::size_t>(paa.emission(edge.to));
                    if (v_next >= values) {
                        throw std::logic_error("accumulated value exceeds its bound");
                    }
                    next[static_cast<std::size_t>(edge.to) * values + v_next] += p * edge.prob;
                }
            }
        }
        mass.swap(next);
    }

    Distribution dist;
    dist.n = n;
    for (std::size_t v = 0; v < values; ++v) {
        double p = 0.0;
        for (std::size_t s = 0; s < states; ++s) p += mass[s * values + v];
        if (p > 0.0) dist.pmf[static_cast<std::int64_t>(v)] = p;
    }
    return dist;
}

RateReport mean_rate(const Paa& paa, std::int64_t horizon) {
    const std::int64_t m = paa.window_length();
    if (horizon < 2 * m) throw std::invalid_argument("horizon must be at least twice the pattern length");

    // Expectation-only pass: per state, track occupation mass and
    // mass-weighted accumulated value; no value dimension needed.
    const std::size_t states = static_cast<std::size_t>(paa.state_count());
    std::vector<double> mass(states, 0.0), expected(states, 0.0);
    std::vector<double> mass_next(states), expected_next(states);
    mass[static_cast<std::size_t>(paa.start())] = 1.0;

    auto total_expectation = [&]() {
        double sum = 0.0;
        for (double e : expected) sum += e;
        return sum;
    };

    const std::int64_t mid = horizon + (horizon + 1) / 2;  // checkpoint at ~1.5N
    double e_n = 0.0, e_mid = 0.0, e_2n = 0.0;
    for (std::int64_t t = 1; t <= 2 * horizon; ++t) {
        std::fill(mass_next.begin(), mass_next.end(), 0.0);
        std::fill(expected_next.begin(), expected_next.end(), 0.0);
        for (std::size_t s = 0; s < states; ++s) {
            if (mass[s] == 0.0 && expected[s] == 0.0) continue;
            for (const Paa::Edge& edge : paa.edges(static_cast<int>(s))) {
                const auto to = static_cast<std::size_t>(edge.to);
                mass_next[to] += mass[s] * edge.prob;
                expected_next[to] += (expected[s] + static_cast<double>(paa.emission(edge.to)) * mass[s]) * edge.prob;
            }
        }
        mass.swap(mass_next);
        expected.swap(expected_next);
        if (t == horizon) e_n = total_expectation();
        if (t == mid) e_mid = total_expectation();
        if (t == 2 * horizon) e_2n = total_expectation();
    }

    RateReport report;
    report.horizon = horizon;
    report.expectation_n = e_n;
    report.expectation_2n = e_2n;
    report.estimate = (e_2n - e_n) / static_cast<double>(horizon);
    const double first_half = (e_mid - e_n) / static_cast<double>(mid - horizon);
    const double second_half = (e_2n - e_mid) / static_cast<double>(2 * horizon - mid);
    report.converged = std::abs(first_half - second_half) <= 1e-3;
    return report;
}

}  // namespace matchdist
