#include "fdea/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "fdea/io.hpp"

namespace fdea {

namespace {

using nlohmann::json;

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

const char* to_string(OrientationChoice c) {
    switch (c) {
        case OrientationChoice::optimistic: return "optimistic";
        case OrientationChoice::pessimistic: return "pessimistic";
        default: return "both";
    }
}

json multipliers_json(const Multipliers& m) {
    json j;
    j["u"] = m.u;
    j["v"] = m.v;
    return j;
}

json bounds_json(const BoundEfficiencies& b) {
    json j;
    j["lo"] = b.lo;
    j["mid"] = b.mid;
    j["hi"] = b.hi;
    j["multipliers_lo"] = multipliers_json(b.multipliers_lo);
    j["multipliers_mid"] = multipliers_json(b.multipliers_mid);
    j["multipliers_hi"] = multipliers_json(b.multipliers_hi);
    return j;
}

json config_json(const RunConfig& c, std::size_t population_size) {
    json j;
    j["epsilon"] = c.epsilon;
    j["seed"] = c.seed;
    j["population_multiplier"] = c.population_multiplier;
    j["population_size"] = population_size;
    j["mode"] = to_string(c.mode);
    j["orientation"] = to_string(c.orientation);
    return j;
}

ScalarizedResult evaluate_literal(const DMUDataset& data, std::size_t k,
                                  const RunConfig& config, Orientation o,
                                  const std::vector<WeightVector>& population) {
    // Steps as printed: one weighted LP per weight vector, keep the best.
    BoundEfficiencies bounds =
        (o == Orientation::optimistic)
            ? optimistic_bounds(data, k, config.epsilon, ModelMode::literal)
            : pessimistic_bounds(data, k, config.epsilon, ModelMode::literal);
    const bool maximize = o == Orientation::optimistic;
    double best_value = 0.0;
    std::size_t best = population.size();
    for (std::size_t i = 0; i < population.size(); ++i) {
        const double v = literal_weighted_value(data, k, config.epsilon, o, population[i]);
        if (best == population.size() || (maximize ? v > best_value : v < best_value)) {
            best_value = v;
            best = i;
        }
    }
    ScalarizedResult r;
    r.dmu_id = data.dmus[k].id;
    r.orientation = o;
    r.efficiency = best_value;
    r.best_weights = population[best];
    r.bounds = bounds;
    r.population_size = population.size();
    return r;
}

}  // namespace

void RunConfig::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (population_multiplier < 1)
        throw std::invalid_argument("population multiplier must be >= 1");
}

std::vector<ScalarizedResult> evaluate(const DMUDataset& data, const RunConfig& config) {
    config.validate();
    data.validate();
    const std::size_t p = data.num_inputs() + data.num_outputs();
    const auto population = weight_population(p, 3, config.seed, config.population_multiplier);

    std::vector<Orientation> orientations;
    if (config.orientation != OrientationChoice::pessimistic)
        orientations.push_back(Orientation::optimistic);
    if (config.orientation != OrientationChoice::optimistic)
        orientations.push_back(Orientation::pessimistic);

    std::vector<ScalarizedResult> out;
    out.reserve(data.size() * orientations.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        for (Orientation o : orientations) {
            if (config.mode == ModelMode::literal) {
                out.push_back(evaluate_literal(data, k, config, o, population));
            } else {
                BoundEfficiencies b = (o == Orientation::optimistic)
                                          ? optimistic_bounds(data, k, config.epsilon)
                                          : pessimistic_bounds(data, k, config.epsilon);
                out.push_back(select_best(b, population, data.dmus[k].id));
            }
        }
    }
    return out;
}

RankReport rank_and_report(
    const std::vector<ScalarizedResult>& results, const DMUDataset& data,
    const RunConfig& config,
    const std::optional<std::vector<std::pair<std::string, double>>>& external_ranks) {
    config.validate();
    std::map<std::string, const ScalarizedResult*> opt, pess;
    for (const auto& r : results)
        (r.orientation == Orientation::optimistic ? opt : pess)[r.dmu_id] = &r;

    std::vector<std::pair<std::string, double>> scores;
    std::map<std::string, ReportRow> rows;
    std::size_t population_size = 0;
    for (const auto& d : data.dmus) {
        auto oi = opt.find(d.id);
        auto pi = pess.find(d.id);
        if (oi == opt.end())
            throw std::invalid_argument("missing optimistic result for DMU " + d.id);
        if (pi == pess.end())
            throw std::invalid_argument("missing pessimistic result for DMU " + d.id);
        ReportRow row;
        row.id = d.id;
        row.label = d.label;
        row.optimistic = oi->second->efficiency;
        row.pessimistic = pi->second->efficiency;
        row.geometric = geometric(row.optimistic, row.pessimistic);
        row.classification = classify(row.optimistic, row.pessimistic);
        const double shortfall = -std::log(std::min(row.optimistic, 1.0));
        const double excess = std::log(std::max(row.pessimistic, 1.0));
        row.driver = (shortfall == 0.0 && excess == 0.0) ? "balanced"
                     : shortfall >= excess               ? "optimistic-shortfall"
                                                         : "pessimistic-excess";
        rows[d.id] = std::move(row);
        scores.emplace_back(d.id, rows[d.id].geometric);
        population_size = oi->second->population_size;
    }

    RankReport report;
    report.seed = config.seed;
    report.epsilon = config.epsilon;
    report.mode = config.mode;
    report.population_size = population_size;
    for (const auto& ranked : rank_dmus(scores)) {
        ReportRow row = rows[ranked.id];
        row.rank = ranked.rank;
        row.tied = ranked.tied;
        report.rows.push_back(std::move(row));
    }

    if (external_ranks) {
        if (external_ranks->size() != data.size())
            throw std::invalid_argument("external ranks cover " +
                                        std::to_string(external_ranks->size()) +
                                        " DMUs, dataset has " + std::to_string(data.size()));
        std::map<std::string, double> ext;
        for (const auto& [id, rank] : *external_ranks) {
            if (!ext.emplace(id, rank).second)
                throw std::invalid_argument("duplicate id in external ranks: " + id);
        }
        std::vector<double> ours, theirs;
        for (const auto& d : data.dmus) {
            auto it = ext.find(d.id);
            if (it == ext.end())
                throw std::invalid_argument("external ranks missing DMU " + d.id);
            theirs.push_back(it->second);
            for (const auto& row : report.rows)
                if (row.id == d.id) ours.push_back(static_cast<double>(row.rank));
        }
        report.spearman_rho = spearman(ours, theirs);
    }
    return report;
}

void render_evaluation(const std::vector<ScalarizedResult>& results, const DMUDataset& data,
                       const RunConfig& config, std::ostream& out) {
    switch (config.format) {
        case OutputFormat::csv: {
            out << "id,orientation,efficiency,lo,mid,hi,w1,w2,w3,population\n";
            for (const auto& r : results) {
                out << r.dmu_id << ',' << to_string(r.orientation) << ','
                    << format_double(r.efficiency) << ',' << format_double(r.bounds.lo) << ','
                    << format_double(r.bounds.mid) << ',' << format_double(r.bounds.hi) << ','
                    << format_double(r.best_weights[0]) << ','
                    << format_double(r.best_weights[1]) << ','
                    << format_double(r.best_weights[2]) << ',' << r.population_size << "\n";
            }
            return;
        }
        case OutputFormat::json: {
            json j;
            j["config"] = config_json(config, results.empty() ? 0 : results[0].population_size);
            j["results"] = json::array();
            for (const auto& r : results) {
                json rj;
                rj["id"] = r.dmu_id;
                rj["orientation"] = to_string(r.orientation);
                rj["efficiency"] = r.efficiency;
                rj["best_weights"] = r.best_weights;
                rj["bounds"] = bounds_json(r.bounds);
                rj["reported_multipliers"] = multipliers_json(reported_multipliers(r));
                j["results"].push_back(std::move(rj));
            }
            out << j.dump(2) << "\n";
            return;
        }
        case OutputFormat::table: {
            out << "efficiency scores (seed " << config.seed << ", epsilon "
                << format_double(config.epsilon) << ", mode " << to_string(config.mode)
                << ")\n";
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%-8s %-24s %-12s %10s %10s %10s %10s\n", "id",
                          "label", "orientation", "eff", "lo", "mid", "hi");
            out << buf;
            for (const auto& r : results) {
                std::string label;
                for (const auto& d : data.dmus)
                    if (d.id == r.dmu_id) label = d.label;
                std::snprintf(buf, sizeof(buf), "%-8s %-24s %-12s %10s %10s %10s %10s\n",
                              r.dmu_id.c_str(), label.c_str(), to_string(r.orientation),
                              fixed4(r.efficiency).c_str(), fixed4(r.bounds.lo).c_str(),
                              fixed4(r.bounds.mid).c_str(), fixed4(r.bounds.hi).c_str());
                out << buf;
            }
            return;
        }
    }
}

void render_report(const RankReport& report, const DMUDataset& data, const RunConfig& config,
                   const std::vector<ScalarizedResult>& results, std::ostream& out) {
    switch (config.format) {
        case OutputFormat::csv: {
            out << "id,optimistic,pessimistic,geometric,optimistic_class,pessimistic_class,"
                   "rank,tied,driver\n";
            for (const auto& r : report.rows) {
                out << r.id << ',' << format_double(r.optimistic) << ','
                    << format_double(r.pessimistic) << ',' << format_double(r.geometric) << ','
                    << to_string(r.classification.optimistic) << ','
                    << to_string(r.classification.pessimistic) << ',' << r.rank << ','
                    << (r.tied ? "true" : "false") << ',' << r.driver << "\n";
            }
            out << "# seed," << report.seed << "\n";
            out << "# epsilon," << format_double(report.epsilon) << "\n";
            out << "# mode," << to_string(report.mode) << "\n";
            out << "# population," << report.population_size << "\n";
            if (report.spearman_rho)
                out << "# spearman_rho," << format_double(*report.spearman_rho) << "\n";
            return;
        }
        case OutputFormat::json: {
            json j;
            j["config"] = config_json(config, report.population_size);
            j["rows"] = json::array();
            for (const auto& r : report.rows) {
                json rj;
                rj["id"] = r.id;
                rj["label"] = r.label;
                rj["optimistic"] = r.optimistic;
                rj["pessimistic"] = r.pessimistic;
                rj["geometric"] = r.geometric;
                rj["optimistic_class"] = to_string(r.classification.optimistic);
                rj["pessimistic_class"] = to_string(r.classification.pessimistic);
                rj["rank"] = r.rank;
                rj["tied"] = r.tied;
                rj["driver"] = r.driver;
                j["rows"].push_back(std::move(rj));
            }
            json det = json::array();
            for (const auto& r : results) {
                json rj;
                rj["id"] = r.dmu_id;
                rj["orientation"] = to_string(r.orientation);
                rj["efficiency"] = r.efficiency;
                rj["best_weights"] = r.best_weights;
                rj["bounds"] = bounds_json(r.bounds);
                det.push_back(std::move(rj));
            }
            j["evaluations"] = std::move(det);
            if (report.spearman_rho) j["spearman_rho"] = *report.spearman_rho;
            out << j.dump(2) << "\n";
            return;
        }
        case OutputFormat::table: {
            out << "ranking (seed " << report.seed << ", epsilon "
                << format_double(report.epsilon) << ", mode " << to_string(report.mode)
                << ", population " << report.population_size << ")\n";
            char buf[200];
            std::snprintf(buf, sizeof(buf), "%-5s %-8s %-24s %12s %12s %10s %-5s\n", "rank",
                          "id", "label", "optimistic", "pessimistic", "geometric", "tied");
            out << buf;
            for (const auto& r : report.rows) {
                std::snprintf(buf, sizeof(buf), "%-5d %-8s %-24s %12s %12s %10s %-5s\n",
                              r.rank, r.id.c_str(), r.label.c_str(),
                              fixed4(r.optimistic).c_str(), fixed4(r.pessimistic).c_str(),
                              fixed4(r.geometric).c_str(), r.tied ? "yes" : "no");
                out << buf;
            }
            if (report.spearman_rho)
                out << "spearman rho vs external ranks: " << fixed4(*report.spearman_rho)
                    << "\n";
            out << "\nrecommendations\n";
            for (const auto& r : report.rows) {
                out << "  " << r.id << " (rank " << r.rank << "): "
                    << to_string(r.classification.optimistic) << ", "
                    << to_string(r.classification.pessimistic) << "; score driven by "
                    << r.driver << "\n";
            }
            (void)data;
            return;
        }
    }
}

}  // namespace fdea
