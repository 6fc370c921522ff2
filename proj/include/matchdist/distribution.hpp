#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace matchdist {

using Pmf = std::map<std::int64_t, double>;

// Probability mass function of the total character-access count, plus the
// metadata identifying the run that produced it.
struct Distribution {
    Pmf pmf;
    std::int64_t n = 0;
    std::string algorithm;
    std::string pattern;
    std::string model;
    bool oracle = false;     // produced by exhaustive enumeration
    bool empirical = false;  // produced by sampling

    double total_mass() const;
};

// (mean, variance); variance clamped at 0 against rounding.
std::pair<double, double> moments(const Distribution& dist);

double tv_distance(const Pmf& a, const Pmf& b);
inline double tv_distance(const Distribution& a, const Distribution& b) {
    return tv_distance(a.pmf, b.pmf);
}

// Shortest round-trip decimal rendering.
std::string format_double(double v);

// value,probability rows ordered by value, preceded by '#'-prefixed metadata
// comment lines.
void write_csv(const Distribution& dist, std::ostream& out,
               const std::vector<std::pair<std::string, std::string>>& extra_meta = {});

nlohmann::json to_json(const Distribution& dist);

// Observed value counts from repeated simulation.
struct EmpiricalDistribution {
    std::map<std::int64_t, std::uint64_t> counts;
    std::uint64_t samples = 0;

    Pmf pmf() const;
    Distribution to_distribution() const;
};

}  // namespace matchdist
