#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdea/dataset.hpp"
#include "fdea/linprog.hpp"

namespace fdea {

enum class Orientation { optimistic, pessimistic };
enum class ModelMode { literal, per_bound };

const char* to_string(Orientation o);
const char* to_string(ModelMode m);

/// DEA multiplier weights: u per input, v per output; all >= epsilon.
struct Multipliers {
    std::vector<double> u;
    std::vector<double> v;
};

/// Efficiency bound triple (lo <= mid <= hi) with the multiplier set that
/// attains each bound. Optimistic triples satisfy hi <= 1, pessimistic
/// triples lo >= 1 (up to solver tolerance).
struct BoundEfficiencies {
    double lo = 0.0;
    double mid = 0.0;
    double hi = 0.0;
    Multipliers multipliers_lo;
    Multipliers multipliers_mid;
    Multipliers multipliers_hi;
    Orientation orientation = Orientation::optimistic;
};

/// Structured description of an infeasible model instance.
struct InfeasibilityReport {
    std::string dmu_id;
    Orientation orientation = Orientation::optimistic;
    ModelMode mode = ModelMode::per_bound;
    /// The constraints that cannot hold together (human-readable).
    std::vector<std::string> conflicting_constraints;
    std::string to_message() const;
};

/// Thrown when a DEA model instance has no feasible multipliers. Expected
/// for literal mode on strictly fuzzy inputs; possible in any mode when
/// epsilon is too large for the data scale.
class ModelInfeasible : public std::runtime_error {
public:
    explicit ModelInfeasible(InfeasibilityReport r)
        : std::runtime_error(r.to_message()), report(std::move(r)) {}
    InfeasibilityReport report;
};

/// Crisp optimistic efficiency of DMU k: maximize v.y_k subject to
/// u.x_k = 1, v.y_j - u.x_j <= 0 for all j, u,v >= epsilon. Requires a
/// fully crisp dataset (throws std::invalid_argument otherwise). The value
/// lies in (0, 1].
std::pair<double, Multipliers> crisp_optimistic(const DMUDataset& data, std::size_t k,
                                                double epsilon);

/// Crisp pessimistic efficiency: minimize v.y_k subject to u.x_k = 1,
/// v.y_j - u.x_j >= 0 for all j, u,v >= epsilon. The value is >= 1.
std::pair<double, Multipliers> crisp_pessimistic(const DMUDataset& data, std::size_t k,
                                                 double epsilon);

/// Fuzzy optimistic bound triple of DMU k.
///
/// per_bound (default): three maximizing LPs sharing the constraint family
///   sum_r v_r y^hi_rj - sum_i u_i x^lo_ij <= 0 for all j, u,v >= epsilon:
///     hi : objective v.y^hi_k, normalization u.x^lo_k = 1
///     mid: objective v.y^mid_k, normalization u.x^mid_k = 1
///     lo : objective v.y^lo_k, normalization u.x^hi_k = 1
///
/// literal: a single feasible set carrying all three denominator
///   normalizations simultaneously (u.x^lo_k = u.x^mid_k = u.x^hi_k = 1);
///   provably infeasible whenever any input of DMU k is strictly fuzzy, in
///   which case ModelInfeasible (with the conflicting equalities named) is
///   thrown. On crisp inputs it collapses to the crisp model.
BoundEfficiencies optimistic_bounds(const DMUDataset& data, std::size_t k, double epsilon,
                                    ModelMode mode = ModelMode::per_bound);

/// Fuzzy pessimistic bound triple: mirror of optimistic_bounds with
/// minimization and family sum_r v_r y^lo_rj - sum_i u_i x^hi_ij >= 0;
/// normalizations lo: u.x^hi_k = 1, mid: u.x^mid_k = 1, hi: u.x^lo_k = 1.
BoundEfficiencies pessimistic_bounds(const DMUDataset& data, std::size_t k, double epsilon,
                                     ModelMode mode = ModelMode::per_bound);

/// The weighted-objective literal model evaluated for one weight vector w
/// (length 3): optimize w1*(v.y^lo_k) + w2*(v.y^mid_k) + w3*(v.y^hi_k) over
/// the literal feasible set. Used by the pipeline in literal mode; throws
/// ModelInfeasible like the literal bound builders.
double literal_weighted_value(const DMUDataset& data, std::size_t k, double epsilon,
                              Orientation orientation, const std::vector<double>& w,
                              Multipliers* out_multipliers = nullptr);

}  // namespace fdea
