#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace oracles {
namespace {

using fdea::Constraint;
using fdea::DMUDataset;
using fdea::DMURecord;
using fdea::LinearProgram;
using fdea::LPStatus;
using fdea::Relation;
using fdea::Sense;
using fdea::TFN;

// Gaussian elimination with partial pivoting; false when singular.
bool solve_square(std::vector<std::vector<double>> A, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
        if (std::fabs(A[piv][col]) < 1e-9) return false;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = A[r][col] / A[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return true;
}

bool feasible(const LinearProgram& lp, const std::vector<double>& lb,
              const std::vector<double>& x) {
    for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] < lb[j] - 1e-7 * std::max(1.0, std::fabs(lb[j]))) return false;
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        double scale = std::fabs(c.rhs);
        for (std::size_t j = 0; j < x.size(); ++j) {
            lhs += c.row[j] * x[j];
            scale = std::max(scale, std::fabs(c.row[j] * x[j]));
        }
        const double tol = 1e-7 * std::max(1.0, scale);
        switch (c.rel) {
            case Relation::less_equal:
                if (lhs > c.rhs + tol) return false;
                break;
            case Relation::greater_equal:
                if (lhs < c.rhs - tol) return false;
                break;
            case Relation::equal:
                if (std::fabs(lhs - c.rhs) > tol) return false;
                break;
        }
    }
    return true;
}

}  // namespace

VertexSolution solve_by_vertex_enumeration(const LinearProgram& lp) {
    const std::size_t n = lp.objective.size();
    if (n == 0 || n > 5) throw std::invalid_argument("vertex oracle handles 1..5 variables");
    std::vector<double> lb = lp.lower_bounds;
    if (lb.empty()) lb.assign(n, 0.0);

    struct Facet {
        std::vector<double> row;
        double rhs;
    };
    std::vector<Facet> facets;
    for (const auto& c : lp.constraints) facets.push_back({c.row, c.rhs});
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        facets.push_back({std::move(e), lb[j]});
    }

    VertexSolution best;
    const std::size_t F = facets.size();
    if (F < n) return best;

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        std::vector<std::vector<double>> A(n);
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) {
            A[i] = facets[idx[i]].row;
            b[i] = facets[idx[i]].rhs;
        }
        std::vector<double> x;
        if (solve_square(std::move(A), std::move(b), x) && feasible(lp, lb, x)) {
            double val = 0.0;
            for (std::size_t j = 0; j < n; ++j) val += lp.objective[j] * x[j];
            const bool better =
                best.status != LPStatus::optimal ||
                (lp.sense == Sense::maximize ? val > best.objective : val < best.objective);
            if (better) {
                best.status = LPStatus::optimal;
                best.objective = val;
                best.x = x;
            }
        }
        // next combination of n facet indices
        std::size_t i = n;
        while (i-- > 0) {
            if (idx[i] != i + F - n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return best;
        }
    }
}

RatioBounds single_ratio_optimistic(const DMUDataset& data, std::size_t k) {
    if (data.num_inputs() != 1 || data.num_outputs() != 1)
        throw std::invalid_argument("ratio oracle needs exactly one input and one output");
    double worst = 0.0;  // max_j y_hi / x_lo: the binding envelopment row
    for (const auto& d : data.dmus)
        worst = std::max(worst, d.outputs[0].hi / d.inputs[0].lo);
    const TFN& x = data.dmus[k].inputs[0];
    const TFN& y = data.dmus[k].outputs[0];
    return {y.lo / x.hi / worst, y.mid / x.mid / worst, y.hi / x.lo / worst};
}

RatioBounds single_ratio_pessimistic(const DMUDataset& data, std::size_t k) {
    if (data.num_inputs() != 1 || data.num_outputs() != 1)
        throw std::invalid_argument("ratio oracle needs exactly one input and one output");
    double floor = std::numeric_limits<double>::infinity();  // min_j y_lo / x_hi
    for (const auto& d : data.dmus)
        floor = std::min(floor, d.outputs[0].lo / d.inputs[0].hi);
    const TFN& x = data.dmus[k].inputs[0];
    const TFN& y = data.dmus[k].outputs[0];
    return {y.lo / x.hi / floor, y.mid / x.mid / floor, y.hi / x.lo / floor};
}

double spearman_reference(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("spearman_reference: bad lengths");
    const std::size_t n = a.size();
    auto average_ranks = [n](const std::vector<double>& v) {
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t smaller = 0, equal = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j] < v[i]) ++smaller;
                if (v[j] == v[i]) ++equal;
            }
            r[i] = static_cast<double>(smaller) + (static_cast<double>(equal) + 1.0) / 2.0;
        }
        return r;
    };
    const auto ra = average_ranks(a);
    const auto rb = average_ranks(b);
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += ra[i];
        mb += rb[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (ra[i] - ma) * (rb[i] - mb);
        va += (ra[i] - ma) * (ra[i] - ma);
        vb += (rb[i] - mb) * (rb[i] - mb);
    }
    if (va == 0.0 || vb == 0.0)
        throw std::domain_error("spearman_reference: constant rank list");
    return cov / std::sqrt(va * vb);
}

DMUDataset random_dataset(std::mt19937_64& gen, std::size_t n, std::size_t m, std::size_t s,
                          bool crisp) {
    DMUDataset data;
    for (std::size_t i = 0; i < m; ++i) data.input_names.push_back("x" + std::to_string(i + 1));
    for (std::size_t r = 0; r < s; ++r)
        data.output_names.push_back("y" + std::to_string(r + 1));
    auto draw = [&]() {
        const double mid = uniform(gen, 1.0, 10.0);
        if (crisp) return TFN::crisp(mid);
        const double a = uniform(gen, 0.0, 0.4);
        const double b = uniform(gen, 0.0, 0.4);
        return TFN(mid * (1.0 - a), mid, mid * (1.0 + b));
    };
    for (std::size_t j = 0; j < n; ++j) {
        DMURecord d;
        d.id = "U" + std::to_string(j + 1);
        d.label = "unit " + std::to_string(j + 1);
        for (std::size_t i = 0; i < m; ++i) d.inputs.push_back(draw());
        for (std::size_t r = 0; r < s; ++r) d.outputs.push_back(draw());
        data.dmus.push_back(std::move(d));
    }
    data.validate();
    return data;
}

LinearProgram random_bounded_lp(std::mt19937_64& gen, std::size_t nvars) {
    LinearProgram lp;
    lp.sense = unit(gen) < 0.5 ? Sense::maximize : Sense::minimize;
    lp.objective.resize(nvars);
    for (auto& c : lp.objective) c = uniform(gen, -1.0, 1.0);
    lp.lower_bounds.resize(nvars);
    for (auto& l : lp.lower_bounds) l = uniform(gen, 0.0, 1.0);

    // An interior-ish point the cuts are aimed around.
    std::vector<double> t(nvars);
    const double span = uniform(gen, 1.0, 5.0);
    for (std::size_t j = 0; j < nvars; ++j) {
        t[j] = lp.lower_bounds[j] + span * uniform(gen, 0.1, 0.9);
        Constraint box;
        box.row.assign(nvars, 0.0);
        box.row[j] = 1.0;
        box.rel = Relation::less_equal;
        box.rhs = lp.lower_bounds[j] + span;
        lp.constraints.push_back(std::move(box));
    }

    const std::size_t extra = 2 + static_cast<std::size_t>(unit(gen) * 3.0);
    for (std::size_t c = 0; c < extra; ++c) {
        Constraint row;
        row.row.resize(nvars);
        double at = 0.0;
        for (std::size_t j = 0; j < nvars; ++j) {
            row.row[j] = uniform(gen, -1.0, 1.0);
            at += row.row[j] * t[j];
        }
        const double roll = unit(gen);
        if (roll < 0.15) {
            row.rel = Relation::equal;
            row.rhs = at;
        } else if (roll < 0.6) {
            row.rel = Relation::less_equal;
            // Occasionally negative slack: a share of instances is infeasible.
            row.rhs = at + uniform(gen, -0.3, 1.0);
        } else {
            row.rel = Relation::greater_equal;
            row.rhs = at - uniform(gen, -0.3, 1.0);
        }
        lp.constraints.push_back(std::move(row));
    }
    return lp;
}

}  // namespace oracles
