#include "fdea/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace fdea {

namespace {

constexpr double kPivotTol = 1e-9;  // entries smaller than this never pivot
constexpr double kFeasTol = 1e-7;   // phase-1 residual above this => infeasible

void check_input(const LinearProgram& lp) {
    const std::size_t p = lp.objective.size();
    if (p == 0) throw std::invalid_argument("LP has no variables");
    for (double c : lp.objective)
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective coefficient");
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != p)
        throw std::invalid_argument("lower_bounds length " + std::to_string(lp.lower_bounds.size()) +
                                    " != variable count " + std::to_string(p));
    for (double l : lp.lower_bounds)
        if (!std::isfinite(l)) throw std::invalid_argument("non-finite lower bound");
    for (const auto& c : lp.constraints) {
        if (c.row.size() != p)
            throw std::invalid_argument("constraint row length " + std::to_string(c.row.size()) +
                                        " != variable count " + std::to_string(p));
        for (double a : c.row)
            if (!std::isfinite(a)) throw std::invalid_argument("non-finite constraint coefficient");
        if (!std::isfinite(c.rhs)) throw std::invalid_argument("non-finite constraint rhs");
    }
}

// Dense tableau over columns [structural | slack/surplus | artificial | rhs].
struct Tableau {
    std::size_t rows = 0, cols = 0;  // cols includes the rhs column
    std::vector<double> a;
    std::vector<std::size_t> basis;  // basic column per row

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        for (std::size_t c = 0; c < cols; ++c) at(pr, c) /= piv;
        at(pr, pc) = 1.0;  // kill roundoff on the pivot itself
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[pr] = pc;
    }
};

// Maximizes obj over the tableau with Bland's rule.
// obj has one entry per non-rhs column; blocked columns never enter.
// Returns false when unbounded. On return, reduced[] holds the final
// reduced costs and *value the optimal objective value.
bool run_simplex(Tableau& t, const std::vector<double>& obj,
                 const std::vector<bool>& blocked, double* value,
                 std::vector<double>* reduced = nullptr) {
    const std::size_t ncol = t.cols - 1;
    std::vector<double> red(ncol);
    double z = 0.0;
    auto recompute = [&] {
        for (std::size_t c = 0; c < ncol; ++c) red[c] = obj[c];
        z = 0.0;
        for (std::size_t r = 0; r < t.rows; ++r) {
            const double cb = obj[t.basis[r]];
            if (cb == 0.0) continue;
            z += cb * t.at(r, ncol);
            for (std::size_t c = 0; c < ncol; ++c) red[c] -= cb * t.at(r, c);
        }
    };
    recompute();
    for (;;) {
        // Bland: entering column = lowest index with positive reduced cost.
        std::size_t enter = ncol;
        for (std::size_t c = 0; c < ncol; ++c) {
            if (blocked[c]) continue;
            if (red[c] > kPivotTol) { enter = c; break; }
        }
        if (enter == ncol) break;  // optimal
        // Ratio test; ties resolved by smallest basic column index (Bland).
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < t.rows; ++r) {
            const double arc = t.at(r, enter);
            if (arc <= kPivotTol) continue;
            best = std::min(best, t.at(r, ncol) / arc);
        }
        if (best == std::numeric_limits<double>::infinity()) return false;  // unbounded
        std::size_t leave = t.rows;
        for (std::size_t r = 0; r < t.rows; ++r) {
            const double arc = t.at(r, enter);
            if (arc <= kPivotTol) continue;
            if (t.at(r, ncol) / arc > best + kPivotTol) continue;
            if (leave == t.rows || t.basis[r] < t.basis[leave]) leave = r;
        }
        t.pivot(leave, enter);
        recompute();  // cheap at this problem scale and numerically safest
    }
    *value = z;
    if (reduced) *reduced = red;
    return true;
}

}  // namespace

LPSolution solve(const LinearProgram& lp) {
    check_input(lp);
    const std::size_t p = lp.objective.size();
    const std::size_t m = lp.constraints.size();
    const std::vector<double> lower =
        lp.lower_bounds.empty() ? std::vector<double>(p, 0.0) : lp.lower_bounds;

    // Shift x = lower + x', x' >= 0.
    double shift_offset = 0.0;
    for (std::size_t j = 0; j < p; ++j) shift_offset += lp.objective[j] * lower[j];

    // Count auxiliary columns: slack/surplus for inequalities, artificials
    // for >= and = rows (and for any row whose shifted rhs flips sign).
    struct RowForm {
        std::vector<double> a;
        double b = 0.0;
        Relation rel = Relation::less_equal;
    };
    std::vector<RowForm> rowforms(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        RowForm rf;
        rf.a = c.row;
        rf.b = c.rhs;
        for (std::size_t j = 0; j < p; ++j) rf.b -= c.row[j] * lower[j];
        rf.rel = c.rel;
        if (rf.b < 0.0) {  // normalize to nonnegative rhs
            for (double& v : rf.a) v = -v;
            rf.b = -rf.b;
            if (rf.rel == Relation::less_equal) rf.rel = Relation::greater_equal;
            else if (rf.rel == Relation::greater_equal) rf.rel = Relation::less_equal;
        }
        rowforms[i] = std::move(rf);
    }

    std::size_t n_slack = 0, n_art = 0;
    for (const auto& rf : rowforms) {
        if (rf.rel != Relation::equal) ++n_slack;
        if (rf.rel != Relation::less_equal) ++n_art;
    }
    const std::size_t ncol = p + n_slack + n_art;

    Tableau t;
    t.rows = m;
    t.cols = ncol + 1;
    t.a.assign(t.rows * t.cols, 0.0);
    t.basis.assign(m, 0);

    std::size_t slack_at = p, art_at = p + n_slack;
    std::vector<bool> is_artificial(ncol, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& rf = rowforms[i];
        for (std::size_t j = 0; j < p; ++j) t.at(i, j) = rf.a[j];
        t.at(i, ncol) = rf.b;
        if (rf.rel == Relation::less_equal) {
            t.at(i, slack_at) = 1.0;
            t.basis[i] = slack_at++;
        } else if (rf.rel == Relation::greater_equal) {
            t.at(i, slack_at) = -1.0;
            ++slack_at;
            t.at(i, art_at) = 1.0;
            is_artificial[art_at] = true;
            t.basis[i] = art_at++;
        } else {
            t.at(i, art_at) = 1.0;
            is_artificial[art_at] = true;
            t.basis[i] = art_at++;
        }
    }

    const std::vector<bool> none_blocked(ncol, false);

    // Phase 1: maximize -(sum of artificials).
    if (n_art > 0) {
        std::vector<double> obj1(ncol, 0.0);
        for (std::size_t c = 0; c < ncol; ++c)
            if (is_artificial[c]) obj1[c] = -1.0;
        double z1 = 0.0;
        if (!run_simplex(t, obj1, none_blocked, &z1))
            throw std::logic_error("phase-1 simplex reported unbounded");  // impossible: obj <= 0
        if (z1 < -kFeasTol) return LPSolution{LPStatus::infeasible, 0.0, {}};
        // Drive leftover (degenerate) artificials out of the basis.
        for (std::size_t r = 0; r < t.rows; ++r) {
            if (!is_artificial[t.basis[r]]) continue;
            std::size_t pc = ncol;
            for (std::size_t c = 0; c < ncol; ++c) {
                if (is_artificial[c]) continue;
                if (std::fabs(t.at(r, c)) > kPivotTol) { pc = c; break; }
            }
            if (pc != ncol) t.pivot(r, pc);
            // else: redundant row; leaving the zero-valued artificial basic is harmless.
        }
    }

    // Phase 2 on the real objective (internally always maximize).
    std::vector<double> obj2(ncol, 0.0);
    const double sgn = (lp.sense == Sense::maximize) ? 1.0 : -1.0;
    for (std::size_t j = 0; j < p; ++j) obj2[j] = sgn * lp.objective[j];
    std::vector<bool> blocked = is_artificial;  // artificials may never re-enter
    double z2 = 0.0;
    if (!run_simplex(t, obj2, blocked, &z2))
        return LPSolution{LPStatus::unbounded, 0.0, {}};

    LPSolution sol;
    sol.status = LPStatus::optimal;
    sol.variables.assign(p, 0.0);
    for (std::size_t r = 0; r < t.rows; ++r)
        if (t.basis[r] < p) sol.variables[t.basis[r]] = t.at(r, ncol);
    for (std::size_t j = 0; j < p; ++j) sol.variables[j] += lower[j];
    sol.objective_value = sgn * z2 + shift_offset;

    // Defensive check: an "optimal" answer must actually satisfy the input.
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        double lhs = 0.0, scale = 1.0;
        for (std::size_t j = 0; j < p; ++j) {
            lhs += c.row[j] * sol.variables[j];
            scale += std::fabs(c.row[j] * sol.variables[j]);
        }
        const double viol = (c.rel == Relation::less_equal)    ? lhs - c.rhs
                            : (c.rel == Relation::greater_equal) ? c.rhs - lhs
                                                                 : std::fabs(lhs - c.rhs);
        if (viol > kFeasTol * scale)
            throw std::logic_error("simplex verification failed on constraint " + std::to_string(i));
    }
    for (std::size_t j = 0; j < p; ++j)
        if (sol.variables[j] < lower[j] - 1e-9)
            throw std::logic_error("simplex verification failed on lower bound " + std::to_string(j));
    return sol;
}

}  // namespace fdea
