#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fdea {

enum class OptimisticClass { efficient, non_efficient };
enum class PessimisticClass { inefficient, non_inefficient };

const char* to_string(OptimisticClass c);
const char* to_string(PessimisticClass c);

struct Classification {
    OptimisticClass optimistic = OptimisticClass::non_efficient;
    PessimisticClass pessimistic = PessimisticClass::non_inefficient;
};

/// Classifies a DMU from its two efficiency scores: optimistic-efficient
/// iff |optimistic - 1| <= tol, pessimistic-inefficient iff
/// |pessimistic - 1| <= tol. Inputs must satisfy 0 < optimistic <= 1 + tol
/// and pessimistic >= 1 - tol (throws std::domain_error otherwise).
Classification classify(double optimistic, double pessimistic, double tol = 1e-6);

/// Geometric average of the two orientations: sqrt(optimistic * pessimistic).
/// Throws std::domain_error on non-positive input.
double geometric(double optimistic, double pessimistic);

/// One ranked entry. Competition ranking: tied scores share the smaller
/// rank and the next rank is skipped ("1, 1, 3").
struct RankedScore {
    std::string id;
    double score = 0.0;
    int rank = 0;
    bool tied = false;
};

/// Ranks by descending score with competition ranking; equal doubles tie.
/// Result is ordered best-first; ties keep input order. Throws
/// std::invalid_argument on empty input.
std::vector<RankedScore> rank_dmus(const std::vector<std::pair<std::string, double>>& scores);

/// Tie-corrected Spearman rank correlation: both lists are converted to
/// average ranks (ties share the mean position) and Pearson-correlated.
/// Throws std::invalid_argument on length mismatch or empty lists and
/// std::domain_error when either list is constant.
double spearman(const std::vector<double>& ranks_a, const std::vector<double>& ranks_b);

}  // namespace fdea
