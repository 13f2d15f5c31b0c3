#include "fdea/scalarize.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fdea {

namespace {

// Uniform double in [0, 1) from the top 53 bits; fixed mapping keeps the
// stream identical across standard libraries.
double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<WeightVector> weight_population(std::size_t p, std::size_t d, std::uint64_t seed,
                                            std::size_t multiplier) {
    if (p < 1) throw std::invalid_argument("variable count must be >= 1");
    if (d < 2) throw std::invalid_argument("objective count must be >= 2");
    if (multiplier < 1) throw std::invalid_argument("population multiplier must be >= 1");

    std::mt19937_64 gen(seed);
    std::vector<WeightVector> population;
    population.reserve(multiplier * p);
    for (std::size_t n = 0; n < multiplier * p; ++n) {
        WeightVector w(d);
        double sum = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            // Exponential draws normalized to the simplex = uniform simplex sample.
            w[i] = -std::log1p(-unit_uniform(gen));
            sum += w[i];
        }
        if (sum <= 0.0) {
            for (auto& x : w) x = 1.0 / static_cast<double>(d);
        } else {
            for (auto& x : w) x /= sum;
        }
        population.push_back(std::move(w));
    }
    return population;
}

double scalarize(const BoundEfficiencies& bounds, const WeightVector& w) {
    if (w.size() != 3)
        throw std::invalid_argument("scalarize expects a weight vector of length 3");
    return w[0] * bounds.lo + w[1] * bounds.mid + w[2] * bounds.hi;
}

ScalarizedResult select_best(const BoundEfficiencies& bounds,
                             const std::vector<WeightVector>& population,
                             const std::string& dmu_id) {
    if (population.empty())
        throw std::invalid_argument("select_best: empty weight population");
    const bool maximize = bounds.orientation == Orientation::optimistic;
    std::size_t best = 0;
    double best_value = scalarize(bounds, population[0]);
    for (std::size_t i = 1; i < population.size(); ++i) {
        const double v = scalarize(bounds, population[i]);
        if (maximize ? v > best_value : v < best_value) {
            best_value = v;
            best = i;
        }
    }
    ScalarizedResult r;
    r.dmu_id = dmu_id;
    r.orientation = bounds.orientation;
    r.efficiency = best_value;
    r.best_weights = population[best];
    r.bounds = bounds;
    r.population_size = population.size();
    return r;
}

const Multipliers& reported_multipliers(const ScalarizedResult& r) {
    const auto& w = r.best_weights;
    if (w.size() != 3) throw std::invalid_argument("result carries no weight triple");
    if (w[0] > w[1] && w[0] > w[2]) return r.bounds.multipliers_lo;
    if (w[1] > w[0] && w[1] > w[2]) return r.bounds.multipliers_mid;
    return r.bounds.multipliers_hi;
}

}  // namespace fdea
