#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdea/dataset.hpp"
#include "fdea/models.hpp"
#include "fdea/rank.hpp"
#include "fdea/scalarize.hpp"

namespace fdea {

enum class OrientationChoice { optimistic, pessimistic, both };
enum class OutputFormat { csv, json, table };

struct RunConfig {
    double epsilon = 1e-5;
    std::uint64_t seed = 42;
    std::size_t population_multiplier = 100;
    ModelMode mode = ModelMode::per_bound;
    OrientationChoice orientation = OrientationChoice::both;
    OutputFormat format = OutputFormat::table;

    void validate() const;  // throws std::invalid_argument
};

/// Scalarized efficiencies for every DMU and requested orientation,
/// in dataset order (optimistic before pessimistic per DMU). One weight
/// population (population_multiplier * (m+s) vectors, D=3) is shared by
/// the whole run, so results are deterministic in (dataset, config).
///
/// per_bound mode: bounds once per DMU/orientation, then best weighted sum.
/// literal mode: one weighted LP per weight vector over the literal
/// feasible set (throws ModelInfeasible on strictly fuzzy inputs; in that
/// mode efficiency can sit below the weighted bound triple since a single
/// multiplier set serves all three objectives).
std::vector<ScalarizedResult> evaluate(const DMUDataset& data, const RunConfig& config);

/// One row of the final report.
struct ReportRow {
    std::string id;
    std::string label;
    double optimistic = 0.0;
    double pessimistic = 0.0;
    double geometric = 0.0;
    Classification classification;
    int rank = 0;
    bool tied = false;
    /// Which side dominates the score: "optimistic-shortfall" when the
    /// distance of the optimistic score below 1 exceeds the pessimistic
    /// excess above 1 (log scale), "pessimistic-excess" otherwise,
    /// "balanced" when both sit at 1.
    std::string driver;
};

struct RankReport {
    std::vector<ReportRow> rows;  // ordered best rank first
    std::uint64_t seed = 0;
    double epsilon = 0.0;
    ModelMode mode = ModelMode::per_bound;
    std::size_t population_size = 0;
    std::optional<double> spearman_rho;  // vs external ranks, when supplied
};

/// Combines both orientations into geometric scores, classifications and
/// competition ranks. Requires every DMU to carry both orientations in
/// `results` (throws std::invalid_argument otherwise). When external ranks
/// are supplied their ids must match the dataset exactly; the tie-corrected
/// Spearman coefficient against our ranking is attached to the report.
RankReport rank_and_report(
    const std::vector<ScalarizedResult>& results, const DMUDataset& data,
    const RunConfig& config,
    const std::optional<std::vector<std::pair<std::string, double>>>& external_ranks =
        std::nullopt);

/// Renderers. Formatting is fixed: identical inputs yield identical bytes.
void render_evaluation(const std::vector<ScalarizedResult>& results, const DMUDataset& data,
                       const RunConfig& config, std::ostream& out);
void render_report(const RankReport& report, const DMUDataset& data, const RunConfig& config,
                   const std::vector<ScalarizedResult>& results, std::ostream& out);

}  // namespace fdea
