#include "matchdist/distribution.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace matchdist {

double Distribution::total_mass() const {
    double sum = 0.0;
    for (const auto& [value, p] : pmf) sum += p;
    return sum;
}

std::pair<double, double> moments(const Distribution& dist) {
    double mean = 0.0;
    double second = 0.0;
    for (const auto& [value, p] : dist.pmf) {
        mean += static_cast<double>(value) * p;
        second += static_cast<double>(value) * static_cast<double>(value) * p;
    }
    double variance = second - mean * mean;
    if (variance < 0.0) variance = 0.0;
    return {mean, variance};
}

double tv_distance(const Pmf& a, const Pmf& b) {
    double sum = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            sum += std::abs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            sum += std::abs(ib->second);
            ++ib;
        } else {
            sum += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * sum;
}

std::string format_double(double v) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), v);
    return std::string(buffer, end);
}

void write_csv(const Distribution& dist, std::ostream& out,
               const std::vector<std::pair<std::string, std::string>>& extra_meta) {
    out << "# algorithm=" << dist.algorithm << "\n";
    out << "# pattern=" << dist.pattern << "\n";
    out << "# model=" << dist.model << "\n";
    out << "# n=" << dist.n << "\n";
    out << "# oracle=" << (dist.oracle ? "true" : "false") << "\n";
    out << "# empirical=" << (dist.empirical ? "true" : "false") << "\n";
    for (const auto& [key, value] : extra_meta) {
        out << "# " << key << "=" << value << "\n";
    }
    out << "value,probability\n";
    for (const auto& [value, p] : dist.pmf) {
        out << value << ',' << format_double(p) << "\n";
    }
}

nlohmann::json to_json(const Distribution& dist) {
    nlohmann::json pmf = nlohmann::json::array();
    for (const auto& [value, p] : dist.pmf) {
        pmf.push_back(nlohmann::json::array({value, p}));
    }
    return nlohmann::json{
        {"algorithm", dist.algorithm}, {"pattern", dist.pattern}, {"model", dist.model},
        {"n", dist.n},                 {"oracle", dist.oracle},   {"empirical", dist.empirical},
        {"pmf", std::move(pmf)},
    };
}

Pmf EmpiricalDistribution::pmf() const {
    Pmf out;
    if (samples == 0) return out;
    for (const auto& [value, count] : counts) {
        out[value] = static_cast<double>(count) / static_cast<double>(samples);
    }
    return out;
}

Distribution EmpiricalDistribution::to_distribution() const {
    Distribution dist;
    dist.pmf = pmf();
    dist.empirical = true;
    return dist;
}

}  // namespace matchdist
