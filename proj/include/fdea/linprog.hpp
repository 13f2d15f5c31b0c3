#pragma once

#include <vector>

namespace fdea {

enum class Sense { maximize, minimize };
enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
    std::vector<double> row;
    Relation rel = Relation::less_equal;
    double rhs = 0.0;
};

/// Dense LP: optimize objective . x subject to the constraint rows and
/// x >= lower_bounds (componentwise). An empty lower_bounds vector means
/// all-zero bounds.
struct LinearProgram {
    Sense sense = Sense::maximize;
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower_bounds;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
    LPStatus status = LPStatus::infeasible;
    double objective_value = 0.0;
    std::vector<double> variables;
};

/// Two-phase dense simplex with Bland's anti-cycling rule. Deterministic:
/// identical inputs give bitwise-identical solutions. Infeasible/unbounded
/// outcomes are reported through the status, not exceptions; malformed
/// input (dimension mismatch, non-finite data) throws std::invalid_argument.
LPSolution solve(const LinearProgram& lp);

}  // namespace fdea
