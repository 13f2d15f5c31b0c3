#include "fdea/models.hpp"

#include <cmath>
#include <cstddef>
#include <tuple>

namespace fdea {

namespace {

constexpr double kBoundTol = 1e-7;   // cap/floor assertion tolerance
constexpr double kOrderTol = 1e-6;   // lo <= mid <= hi assertion tolerance

enum Bound : int { kLo = 0, kMid = 1, kHi = 2 };

double input_at(const DMURecord& d, std::size_t i, int b) {
    const TFN& t = d.inputs[i];
    return b == kLo ? t.lo : b == kMid ? t.mid : t.hi;
}
double output_at(const DMURecord& d, std::size_t r, int b) {
    const TFN& t = d.outputs[r];
    return b == kLo ? t.lo : b == kMid ? t.mid : t.hi;
}

// Shared constraint family. Optimistic: v.y^hi_j - u.x^lo_j <= 0;
// pessimistic: v.y^lo_j - u.x^hi_j >= 0. Variables are [u_0..u_{m-1}, v_0..v_{s-1}].
std::vector<Constraint> family_rows(const DMUDataset& data, Orientation o) {
    const std::size_t m = data.num_inputs(), s = data.num_outputs();
    const int yb = (o == Orientation::optimistic) ? kHi : kLo;
    const int xb = (o == Orientation::optimistic) ? kLo : kHi;
    std::vector<Constraint> rows;
    rows.reserve(data.size());
    for (const auto& d : data.dmus) {
        Constraint c;
        c.row.resize(m + s);
        for (std::size_t i = 0; i < m; ++i) c.row[i] = -input_at(d, i, xb);
        for (std::size_t r = 0; r < s; ++r) c.row[m + r] = output_at(d, r, yb);
        c.rel = (o == Orientation::optimistic) ? Relation::less_equal : Relation::greater_equal;
        c.rhs = 0.0;
        rows.push_back(std::move(c));
    }
    return rows;
}

Constraint normalization_row(const DMUDataset& data, std::size_t k, int xb) {
    const std::size_t m = data.num_inputs(), s = data.num_outputs();
    Constraint c;
    c.row.assign(m + s, 0.0);
    for (std::size_t i = 0; i < m; ++i) c.row[i] = input_at(data.dmus[k], i, xb);
    c.rel = Relation::equal;
    c.rhs = 1.0;
    return c;
}

std::vector<double> objective_row(const DMUDataset& data, std::size_t k, int yb) {
    const std::size_t m = data.num_inputs(), s = data.num_outputs();
    std::vector<double> obj(m + s, 0.0);
    for (std::size_t r = 0; r < s; ++r) obj[m + r] = output_at(data.dmus[k], r, yb);
    return obj;
}

Multipliers split_multipliers(const std::vector<double>& x, std::size_t m) {
    Multipliers mu;
    mu.u.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
    mu.v.assign(x.begin() + static_cast<std::ptrdiff_t>(m), x.end());
    return mu;
}

[[noreturn]] void throw_infeasible(const DMUDataset& data, std::size_t k, Orientation o,
                                   ModelMode mode) {
    InfeasibilityReport rep;
    rep.dmu_id = data.dmus[k].id;
    rep.orientation = o;
    rep.mode = mode;
    if (mode == ModelMode::literal) {
        // Name the denominator equalities that cannot hold together.
        rep.conflicting_constraints.push_back("u.x_lo = 1");
        rep.conflicting_constraints.push_back("u.x_mid = 1");
        rep.conflicting_constraints.push_back("u.x_hi = 1");
        std::string fuzzy_cols;
        for (std::size_t i = 0; i < data.num_inputs(); ++i) {
            if (data.dmus[k].inputs[i].is_strictly_fuzzy()) {
                if (!fuzzy_cols.empty()) fuzzy_cols += ", ";
                fuzzy_cols += data.input_names[i];
            }
        }
        if (!fuzzy_cols.empty())
            rep.conflicting_constraints.push_back(
                "with multipliers >= epsilon > 0 these conflict because input(s) [" +
                fuzzy_cols + "] of " + rep.dmu_id + " are strictly fuzzy (lo < hi)");
    } else {
        rep.conflicting_constraints.push_back(
            "denominator normalization is unreachable with all multipliers >= epsilon; "
            "epsilon is likely too large for the data scale");
    }
    throw ModelInfeasible(std::move(rep));
}

// Solves one bound LP and returns (value, multipliers).
std::pair<double, Multipliers> solve_bound(const DMUDataset& data, std::size_t k,
                                           double epsilon, Orientation o, ModelMode mode,
                                           const std::vector<Constraint>& family,
                                           const std::vector<Constraint>& normalizations,
                                           int yb) {
    const std::size_t m = data.num_inputs(), s = data.num_outputs();
    LinearProgram lp;
    lp.sense = (o == Orientation::optimistic) ? Sense::maximize : Sense::minimize;
    lp.objective = objective_row(data, k, yb);
    lp.constraints = normalizations;
    lp.constraints.insert(lp.constraints.end(), family.begin(), family.end());
    lp.lower_bounds.assign(m + s, epsilon);
    LPSolution sol = solve(lp);
    if (sol.status == LPStatus::infeasible) throw_infeasible(data, k, o, mode);
    if (sol.status == LPStatus::unbounded)
        throw std::logic_error("bound LP unexpectedly unbounded for DMU " + data.dmus[k].id);
    return {sol.objective_value, split_multipliers(sol.variables, m)};
}

void check_triple(const BoundEfficiencies& b, const std::string& id) {
    if (!(b.lo <= b.mid + kOrderTol && b.mid <= b.hi + kOrderTol))
        throw std::logic_error("bound ordering violated for DMU " + id);
    if (b.orientation == Orientation::optimistic && b.hi > 1.0 + kBoundTol)
        throw std::logic_error("optimistic bound above 1 for DMU " + id);
    if (b.orientation == Orientation::pessimistic && b.lo < 1.0 - kBoundTol)
        throw std::logic_error("pessimistic bound below 1 for DMU " + id);
}

BoundEfficiencies fuzzy_bounds(const DMUDataset& data, std::size_t k, double epsilon,
                               ModelMode mode, Orientation o) {
    data.validate();
    if (k >= data.size()) throw std::invalid_argument("DMU index out of range");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

    const auto family = family_rows(data, o);
    // Normalization pairing per bound: the extreme ratios divide by the
    // opposite input bound, the middle by the middle.
    //   optimistic: hi = y_hi/x_lo, mid = y_mid/x_mid, lo = y_lo/x_hi
    //   pessimistic mirrors it (lo = y_lo/x_hi etc. with minimization).
    std::vector<Constraint> norm_all;
    if (mode == ModelMode::literal) {
        norm_all.push_back(normalization_row(data, k, kLo));
        norm_all.push_back(normalization_row(data, k, kMid));
        norm_all.push_back(normalization_row(data, k, kHi));
    }
    auto norms_for = [&](int xb) {
        return mode == ModelMode::literal
                   ? norm_all
                   : std::vector<Constraint>{normalization_row(data, k, xb)};
    };

    BoundEfficiencies b;
    b.orientation = o;
    std::tie(b.lo, b.multipliers_lo) =
        solve_bound(data, k, epsilon, o, mode, family, norms_for(kHi), kLo);
    std::tie(b.mid, b.multipliers_mid) =
        solve_bound(data, k, epsilon, o, mode, family, norms_for(kMid), kMid);
    std::tie(b.hi, b.multipliers_hi) =
        solve_bound(data, k, epsilon, o, mode, family, norms_for(kLo), kHi);
    check_triple(b, data.dmus[k].id);
    return b;
}

}  // namespace

const char* to_string(Orientation o) {
    return o == Orientation::optimistic ? "optimistic" : "pessimistic";
}

const char* to_string(ModelMode m) {
    return m == ModelMode::literal ? "literal" : "per_bound";
}

std::string InfeasibilityReport::to_message() const {
    std::string msg = "model infeasible: DMU " + dmu_id + ", " + to_string(orientation) +
                      ", mode " + to_string(mode);
    if (!conflicting_constraints.empty()) {
        msg += "; conflicting constraints: ";
        for (std::size_t i = 0; i < conflicting_constraints.size(); ++i) {
            if (i) msg += "; ";
            msg += conflicting_constraints[i];
        }
    }
    return msg;
}

std::pair<double, Multipliers> crisp_optimistic(const DMUDataset& data, std::size_t k,
                                                double epsilon) {
    data.validate();
    if (k >= data.size()) throw std::invalid_argument("DMU index out of range");
    if (!data.is_crisp())
        throw std::invalid_argument("crisp_optimistic requires a fully crisp dataset");
    auto [value, mult] =
        solve_bound(data, k, epsilon, Orientation::optimistic, ModelMode::per_bound,
                    family_rows(data, Orientation::optimistic),
                    {normalization_row(data, k, kMid)}, kMid);
    if (value > 1.0 + kBoundTol)
        throw std::logic_error("crisp optimistic efficiency above 1 for DMU " + data.dmus[k].id);
    return {value, mult};
}

std::pair<double, Multipliers> crisp_pessimistic(const DMUDataset& data, std::size_t k,
                                                 double epsilon) {
    data.validate();
    if (k >= data.size()) throw std::invalid_argument("DMU index out of range");
    if (!data.is_crisp())
        throw std::invalid_argument("crisp_pessimistic requires a fully crisp dataset");
    auto [value, mult] =
        solve_bound(data, k, epsilon, Orientation::pessimistic, ModelMode::per_bound,
                    family_rows(data, Orientation::pessimistic),
                    {normalization_row(data, k, kMid)}, kMid);
    if (value < 1.0 - kBoundTol)
        throw std::logic_error("crisp pessimistic efficiency below 1 for DMU " + data.dmus[k].id);
    return {value, mult};
}

BoundEfficiencies optimistic_bounds(const DMUDataset& data, std::size_t k, double epsilon,
                                    ModelMode mode) {
    return fuzzy_bounds(data, k, epsilon, mode, Orientation::optimistic);
}

BoundEfficiencies pessimistic_bounds(const DMUDataset& data, std::size_t k, double epsilon,
                                     ModelMode mode) {
    return fuzzy_bounds(data, k, epsilon, mode, Orientation::pessimistic);
}

double literal_weighted_value(const DMUDataset& data, std::size_t k, double epsilon,
                              Orientation orientation, const std::vector<double>& w,
                              Multipliers* out_multipliers) {
    data.validate();
    if (k >= data.size()) throw std::invalid_argument("DMU index out of range");
    if (w.size() != 3) throw std::invalid_argument("weight vector must have length 3");
    const std::size_t m = data.num_inputs(), s = data.num_outputs();

    LinearProgram lp;
    lp.sense = (orientation == Orientation::optimistic) ? Sense::maximize : Sense::minimize;
    lp.objective.assign(m + s, 0.0);
    for (std::size_t r = 0; r < s; ++r)
        lp.objective[m + r] = w[0] * output_at(data.dmus[k], r, kLo) +
                              w[1] * output_at(data.dmus[k], r, kMid) +
                              w[2] * output_at(data.dmus[k], r, kHi);
    lp.constraints.push_back(normalization_row(data, k, kLo));
    lp.constraints.push_back(normalization_row(data, k, kMid));
    lp.constraints.push_back(normalization_row(data, k, kHi));
    const auto family = family_rows(data, orientation);
    lp.constraints.insert(lp.constraints.end(), family.begin(), family.end());
    lp.lower_bounds.assign(m + s, epsilon);

    LPSolution sol = solve(lp);
    if (sol.status == LPStatus::infeasible)
        throw_infeasible(data, k, orientation, ModelMode::literal);
    if (sol.status == LPStatus::unbounded)
        throw std::logic_error("literal weighted LP unexpectedly unbounded");
    if (out_multipliers) *out_multipliers = split_multipliers(sol.variables, m);
    return sol.objective_value;
}

}  // namespace fdea
