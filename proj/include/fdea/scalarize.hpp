#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdea/models.hpp"

namespace fdea {

/// Convex weight vector on the simplex (components >= 0, summing to 1
/// within 1e-12). Length is the number of objectives being scalarized
/// (3 for the bound triples).
using WeightVector = std::vector<double>;

/// One DMU's scalarized efficiency for one orientation.
struct ScalarizedResult {
    std::string dmu_id;
    Orientation orientation = Orientation::optimistic;
    double efficiency = 0.0;
    WeightVector best_weights;
    BoundEfficiencies bounds;
    std::size_t population_size = 0;
};

/// Deterministic population of `multiplier * p` weight vectors of length d,
/// uniform on the simplex (normalized exponential draws from a seeded
/// mt19937_64 with a fixed bit-to-double mapping, so the stream is portable
/// across platforms). p is the decision-variable count of the model the
/// weights will scalarize.
std::vector<WeightVector> weight_population(std::size_t p, std::size_t d, std::uint64_t seed,
                                            std::size_t multiplier = 100);

/// Weighted sum w1*lo + w2*mid + w3*hi. Requires |w| == 3.
double scalarize(const BoundEfficiencies& bounds, const WeightVector& w);

/// Best weighted value over the population: maximum for optimistic bounds,
/// minimum for pessimistic; ties keep the earliest weight vector. Throws
/// std::invalid_argument on an empty population.
ScalarizedResult select_best(const BoundEfficiencies& bounds,
                             const std::vector<WeightVector>& population,
                             const std::string& dmu_id = "");

/// Multipliers to report for a scalarized result: the set attached to the
/// bound carrying the largest best-weight component (ties toward hi).
const Multipliers& reported_multipliers(const ScalarizedResult& r);

}  // namespace fdea
