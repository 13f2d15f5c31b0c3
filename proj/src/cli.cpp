#include "fdea/cli.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdea/io.hpp"
#include "fdea/models.hpp"
#include "fdea/pipeline.hpp"

namespace fdea {
namespace {

struct CliOptions {
    std::string dataset;
    std::string external_ranks;
    RunConfig config;
    // Enum-valued flags are parsed as strings and mapped in make_config.
    std::string mode = "per_bound";
    std::string orientation = "both";
    std::string format = "table";
};

void add_model_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--epsilon", o.config.epsilon, "Multiplier lower bound (> 0)")
        ->capture_default_str();
    cmd->add_option("--seed", o.config.seed, "Weight-population seed")
        ->envname("FDEA_SEED")
        ->capture_default_str();
    cmd->add_option("--pop-mult", o.config.population_multiplier,
                    "Weight vectors per model variable (>= 1)")
        ->capture_default_str();
    cmd->add_option("--mode", o.mode, "Model construction")
        ->check(CLI::IsMember({"literal", "per_bound"}))
        ->capture_default_str();
}

void add_format_flag(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
}

RunConfig make_config(const CliOptions& o) {
    RunConfig c = o.config;
    c.mode = o.mode == "literal" ? ModelMode::literal : ModelMode::per_bound;
    c.orientation = o.orientation == "optimistic"    ? OrientationChoice::optimistic
                    : o.orientation == "pessimistic" ? OrientationChoice::pessimistic
                                                     : OrientationChoice::both;
    c.format = o.format == "csv"    ? OutputFormat::csv
               : o.format == "json" ? OutputFormat::json
                                    : OutputFormat::table;
    c.validate();
    return c;
}

void print_dataset_table(const DMUDataset& data, std::ostream& out) {
    out << data.size() << " DMUs, " << data.num_inputs() << " inputs, " << data.num_outputs()
        << " outputs\n";
    auto print_tfn = [&](const char* kind, const std::string& name, const TFN& t) {
        out << "  " << kind << ' ' << name << " = (" << format_double(t.lo) << ", "
            << format_double(t.mid) << ", " << format_double(t.hi) << ")\n";
    };
    for (const auto& d : data.dmus) {
        out << d.id << " (" << d.label << ")\n";
        for (std::size_t i = 0; i < data.num_inputs(); ++i)
            print_tfn("in ", data.input_names[i], d.inputs[i]);
        for (std::size_t r = 0; r < data.num_outputs(); ++r)
            print_tfn("out", data.output_names[r], d.outputs[r]);
    }
}

void render_comparison(const RankReport& report,
                       const std::vector<std::pair<std::string, double>>& external,
                       const RunConfig& config, std::ostream& out) {
    std::map<std::string, double> ext(external.begin(), external.end());
    switch (config.format) {
        case OutputFormat::csv: {
            out << "id,label,our_rank,external_rank,delta\n";
            for (const auto& r : report.rows) {
                const double e = ext.at(r.id);
                out << r.id << ',' << r.label << ',' << r.rank << ',' << format_double(e)
                    << ',' << format_double(r.rank - e) << "\n";
            }
            if (report.spearman_rho)
                out << "# spearman_rho," << format_double(*report.spearman_rho) << "\n";
            return;
        }
        case OutputFormat::json: {
            nlohmann::json j;
            j["seed"] = report.seed;
            j["epsilon"] = report.epsilon;
            j["mode"] = to_string(report.mode);
            j["population_size"] = report.population_size;
            j["rows"] = nlohmann::json::array();
            for (const auto& r : report.rows) {
                const double e = ext.at(r.id);
                nlohmann::json rj;
                rj["id"] = r.id;
                rj["label"] = r.label;
                rj["our_rank"] = r.rank;
                rj["external_rank"] = e;
                rj["delta"] = r.rank - e;
                j["rows"].push_back(std::move(rj));
            }
            if (report.spearman_rho) j["spearman_rho"] = *report.spearman_rho;
            out << j.dump(2) << "\n";
            return;
        }
        case OutputFormat::table: {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%-8s %-24s %9s %14s %7s\n", "id", "label", "ours",
                          "external", "delta");
            out << buf;
            for (const auto& r : report.rows) {
                const double e = ext.at(r.id);
                std::snprintf(buf, sizeof(buf), "%-8s %-24s %9d %14s %7s\n", r.id.c_str(),
                              r.label.c_str(), r.rank, format_double(e).c_str(),
                              format_double(r.rank - e).c_str());
                out << buf;
            }
            if (report.spearman_rho) {
                std::snprintf(buf, sizeof(buf), "spearman rho: %.4f\n", *report.spearman_rho);
                out << buf;
            }
            return;
        }
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliOptions eval_opts, rank_opts, cmp_opts, fuzz_opts;

    CLI::App app{"Fuzzy DEA efficiency evaluation and ranking"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("evaluate",
                                    "Bound triples and scalarized efficiencies per DMU");
    eval->add_option("dataset", eval_opts.dataset, "Dataset file (csv or json)")->required();
    add_model_flags(eval, eval_opts);
    eval->add_option("--orientation", eval_opts.orientation, "Which models to run")
        ->check(CLI::IsMember({"optimistic", "pessimistic", "both"}))
        ->capture_default_str();
    add_format_flag(eval, eval_opts);

    auto* rank =
        app.add_subcommand("rank", "Geometric-average ranking with classifications");
    rank->add_option("dataset", rank_opts.dataset, "Dataset file (csv or json)")->required();
    add_model_flags(rank, rank_opts);
    add_format_flag(rank, rank_opts);
    rank->add_option("--external-ranks", rank_opts.external_ranks,
                     "Ranks csv (id,rank) to report Spearman rho against");

    auto* cmp = app.add_subcommand("compare",
                                   "Side-by-side comparison against an external ranking");
    cmp->add_option("dataset", cmp_opts.dataset, "Dataset file (csv or json)")->required();
    cmp->add_option("--external-ranks", cmp_opts.external_ranks, "Ranks csv (id,rank)")
        ->required();
    add_model_flags(cmp, cmp_opts);
    add_format_flag(cmp, cmp_opts);

    auto* fuzz = app.add_subcommand(
        "fuzzify", "Collapse raw observation rows into (min, mean, max) TFNs");
    fuzz->add_option("dataset", fuzz_opts.dataset, "Dataset file (csv or json)")->required();
    add_format_flag(fuzz, fuzz_opts);

    try {
        // CLI11's vector overload consumes the argument list reversed.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(eval)) {
            const RunConfig config = make_config(eval_opts);
            const DMUDataset data = load_dataset_auto(eval_opts.dataset);
            const auto results = evaluate(data, config);
            render_evaluation(results, data, config, out);
        } else if (app.got_subcommand(rank) || app.got_subcommand(cmp)) {
            CliOptions& o = app.got_subcommand(rank) ? rank_opts : cmp_opts;
            const RunConfig config = make_config(o);  // ranking always needs both orientations
            const DMUDataset data = load_dataset_auto(o.dataset);
            const auto results = evaluate(data, config);
            std::optional<std::vector<std::pair<std::string, double>>> external;
            if (!o.external_ranks.empty()) external = load_ranks_csv(o.external_ranks);
            const RankReport report = rank_and_report(results, data, config, external);
            if (app.got_subcommand(cmp))
                render_comparison(report, *external, config, out);
            else
                render_report(report, data, config, results, out);
        } else {
            const RunConfig config = make_config(fuzz_opts);
            const DMUDataset data = load_dataset_auto(fuzz_opts.dataset);
            switch (config.format) {
                case OutputFormat::csv: save_fuzzy_csv(data, out); break;
                case OutputFormat::json: save_fuzzy_json(data, out); break;
                case OutputFormat::table: print_dataset_table(data, out); break;
            }
        }
        return 0;
    } catch (const ModelInfeasible& e) {
        err << e.report.to_message() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fdea
