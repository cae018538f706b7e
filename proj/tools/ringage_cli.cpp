// Command-line front end: single-partition age queries, scaling sweeps with
// CSV/SVG emission, exponent fits over sweep CSVs, and direct simulation runs.
//
// Exit codes: 0 success, 1 invalid arguments, 2 partial sweep-cell failures.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringage/csv.hpp"
#include "ringage/model.hpp"
#include "ringage/placement.hpp"
#include "ringage/plot.hpp"
#include "ringage/sim.hpp"
#include "ringage/sweep.hpp"
#include "ringage/version.hpp"

namespace {

using nlohmann::ordered_json;

struct PartitionArgs {
    std::int64_t n = 0;
    std::vector<std::int64_t> cuts;
    std::string placement;
    std::int64_t n_jammers = -1;
    std::uint64_t placement_seed = 1;
    std::string model = "line";

    void attach(CLI::App* cmd) {
        cmd->add_option("--n", n, "ring size")->required();
        cmd->add_option("--cuts", cuts, "explicit cut link indices")->delimiter(',');
        cmd->add_option("--placement", placement, "placement strategy: equidistant|random|adjacent");
        cmd->add_option("--n-jammers", n_jammers, "number of jammers for --placement");
        cmd->add_option("--placement-seed", placement_seed, "seed for random placement");
        cmd->add_option("--model", model, "line|miniring")->check(CLI::IsMember({"line", "miniring"}));
    }

    ringage::Partition build() const {
        ringage::JammerPlacement placement_links;
        if (!placement.empty()) {
            if (n_jammers < 0)
                throw CLI::ValidationError("--placement requires --n-jammers");
            auto strat = ringage::PlacementStrategy{ringage::strategy_from_string(placement),
                                                    placement_seed};
            placement_links = ringage::place(strat, n, n_jammers);
        } else {
            placement_links = ringage::JammerPlacement(cuts);
        }
        auto part = ringage::partition_from_placement(placement_links, n);
        if (model == "miniring") part = ringage::to_miniring_model(part);
        return part;
    }
};

ordered_json base_metadata(const std::string& command, const ringage::Rates& rates,
                           std::uint64_t seed) {
    ordered_json meta;
    meta["tool"] = "ringage";
    meta["version"] = ringage::kVersion;
    meta["command"] = command;
    meta["lambda_s"] = rates.lambda_s;
    meta["lambda"] = rates.lambda;
    meta["n"] = rates.n;
    meta["seed"] = seed;
    meta["rng"] = ringage::Xoshiro256pp::algorithm_name;
    return meta;
}

void emit_metadata(const ordered_json& meta, const std::string& out_dir, const std::string& name) {
    std::filesystem::create_directories(out_dir);
    auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << meta.dump(2) << '\n';
    std::cout << meta.dump(2) << '\n';
}

std::string describe(const ringage::Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        if (i) s += " ";
        s += ringage::to_string(p.segments[i].kind);
        s += "(" + std::to_string(p.segments[i].size) + ")";
    }
    return s;
}

int run_age(const PartitionArgs& pargs, double lambda_s, double lambda,
            const std::string& out_dir) {
    ringage::Rates rates(lambda_s, lambda, pargs.n);
    auto part = pargs.build();
    double age = ringage::system_age(part, rates);

    auto meta = base_metadata("age", rates, 0);
    meta["model"] = pargs.model;
    meta["partition"] = describe(part);
    meta["system_age"] = age;
    emit_metadata(meta, out_dir, "age_meta.json");

    std::cout << "partition: " << describe(part) << "\n";
    std::cout << "system_age: " << ringage::format_double(age) << "\n";
    return 0;
}

int run_simulate(const PartitionArgs& pargs, double lambda_s, double lambda, double horizon,
                 double warmup, std::int64_t replications, std::uint64_t seed,
                 const std::string& out_dir, bool per_node) {
    ringage::Rates rates(lambda_s, lambda, pargs.n);
    auto part = pargs.build();
    if (warmup < 0.0) warmup = 0.1 * horizon;
    auto cfg = ringage::SimConfig::from_partition(part, rates, horizon, warmup, seed, replications);
    auto res = ringage::simulate(cfg);
    double analytic = ringage::system_age(part, rates);

    auto meta = base_metadata("simulate", rates, seed);
    meta["model"] = pargs.model;
    meta["partition"] = describe(part);
    meta["horizon"] = horizon;
    meta["warmup"] = warmup;
    meta["replications"] = replications;
    meta["events_processed"] = res.events_processed;
    meta["system_age"] = res.system_age;
    meta["ci_halfwidth"] = res.ci_halfwidth;
    meta["analytic_system_age"] = analytic;
    emit_metadata(meta, out_dir, "simulate_meta.json");

    std::cout << "partition: " << describe(part) << "\n";
    std::cout << "simulated system_age: " << ringage::format_double(res.system_age) << " +/- "
              << ringage::format_double(res.ci_halfwidth) << " (95% CI)\n";
    std::cout << "analytic system_age:  " << ringage::format_double(analytic) << "\n";
    std::cout << "events: " << res.events_processed << "\n";
    if (per_node) {
        for (std::size_t i = 0; i < res.per_node_age.size(); ++i)
            std::cout << "node " << i << ": " << ringage::format_double(res.per_node_age[i]) << "\n";
    }
    return 0;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& csv, Parse parse) {
    std::vector<T> out;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(parse(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    return out;
}

int run_sweep_cmd(std::int64_t n_min, std::int64_t n_max, double alpha, double c,
                  const std::string& placements, const std::string& models,
                  const std::string& engines, double lambda_s, double lambda, double horizon,
                  double warmup, std::int64_t replications, std::uint64_t seed,
                  const std::string& out_dir, bool plot) {
    ringage::SweepSpec spec;
    for (std::int64_t n = n_min; n <= n_max; n *= 2) spec.n_values.push_back(n);
    spec.alpha = alpha;
    spec.c = c;
    spec.placements = parse_list<ringage::StrategyKind>(placements, ringage::strategy_from_string);
    spec.models = parse_list<ringage::Model>(models, ringage::model_from_string);
    spec.engines = parse_list<ringage::Engine>(engines, ringage::engine_from_string);
    spec.lambda_s = lambda_s;
    spec.lambda = lambda;
    spec.seed = seed;
    spec.sim.horizon = horizon;
    spec.sim.warmup_fraction = warmup >= 0.0 ? warmup / horizon : 0.1;
    spec.sim.replications = replications;

    auto outcome = ringage::run_sweep(spec);

    std::filesystem::create_directories(out_dir);
    auto csv_path = (std::filesystem::path(out_dir) / "sweep.csv").string();
    ringage::write_records_csv(csv_path, outcome.records);

    if (plot && !outcome.records.empty()) {
        // render strictly from the emitted CSV
        auto rows = ringage::read_records_csv(csv_path);
        auto svg_path = (std::filesystem::path(out_dir) / "sweep.svg").string();
        ringage::write_scaling_plot_svg(svg_path, rows,
                                        "average age vs n (alpha=" + ringage::format_double(alpha) +
                                            ", c=" + ringage::format_double(c) + ")");
    }

    ringage::Rates meta_rates(lambda_s, lambda, std::max<std::int64_t>(n_min, 1));
    auto meta = base_metadata("sweep", meta_rates, seed);
    meta["alpha"] = alpha;
    meta["c"] = c;
    meta["n_min"] = n_min;
    meta["n_max"] = n_max;
    meta["placements"] = placements;
    meta["models"] = models;
    meta["engines"] = engines;
    meta["horizon"] = horizon;
    meta["replications"] = replications;
    meta["csv"] = csv_path;
    meta["cells"] = outcome.records.size();
    meta["failures"] = outcome.failures;
    emit_metadata(meta, out_dir, "sweep_meta.json");

    for (const auto& r : outcome.records) std::cout << ringage::to_csv_line(r) << "\n";
    if (!outcome.failures.empty()) {
        for (const auto& f : outcome.failures) std::cerr << "cell failed: " << f << "\n";
        return 2;
    }
    return 0;
}

int run_fit(const std::string& input) {
    auto rows = ringage::read_records_csv(input);
    using Key = std::tuple<ringage::StrategyKind, ringage::Model, ringage::Engine>;
    std::map<Key, std::vector<ringage::ScalingRecord>> groups;
    for (const auto& r : rows) groups[{r.placement, r.model, r.engine}].push_back(r);
    if (groups.empty()) {
        std::cerr << "no records in " << input << "\n";
        return 1;
    }
    std::cout << "placement,model,engine,slope,r2\n";
    for (const auto& [key, recs] : groups) {
        auto [placement, model, engine] = key;
        auto fit = ringage::fit_exponent(recs);
        std::cout << ringage::to_string(placement) << "," << ringage::to_string(model) << ","
                  << ringage::to_string(engine) << "," << ringage::format_double(fit.slope) << ","
                  << ringage::format_double(fit.r2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"version age of gossip on jammed rings: analytic engine, simulator, sweeps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", ringage::kVersion);
    app.set_config("--config", "", "read options from an ini/toml file");

    double lambda_s = 1.0, lambda = 1.0;
    std::string out_dir = ".";

    // age
    auto* age_cmd = app.add_subcommand("age", "analytic system age of one partition");
    PartitionArgs age_args;
    age_args.attach(age_cmd);
    age_cmd->add_option("--lambda-s", lambda_s, "source self-update rate");
    age_cmd->add_option("--lambda", lambda, "aggregate source/gossip rate");
    age_cmd->add_option("--out-dir", out_dir, "metadata output directory");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo simulation of one partition");
    PartitionArgs sim_args;
    sim_args.attach(sim_cmd);
    double horizon = 20000.0, warmup = -1.0;
    std::int64_t replications = 20;
    std::uint64_t seed = 1;
    bool per_node = false;
    sim_cmd->add_option("--lambda-s", lambda_s, "source self-update rate");
    sim_cmd->add_option("--lambda", lambda, "aggregate source/gossip rate");
    sim_cmd->add_option("--horizon", horizon, "simulated time units per replication");
    sim_cmd->add_option("--warmup", warmup, "discarded start-up time (default horizon/10)");
    sim_cmd->add_option("--replications", replications, "independent replications");
    sim_cmd->add_option("--seed", seed, "base RNG seed");
    sim_cmd->add_flag("--per-node", per_node, "print per-node time-averaged ages");
    sim_cmd->add_option("--out-dir", out_dir, "metadata output directory");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "scaling sweep over n (powers of two)");
    std::int64_t n_min = 64, n_max = 4096;
    double alpha = 0.3, c = 1.0;
    std::string placements = "equidistant,random,adjacent";
    std::string models = "line,miniring";
    std::string engines = "analytic";
    bool no_plot = false;
    sweep_cmd->add_option("--n-min", n_min, "smallest n");
    sweep_cmd->add_option("--n-max", n_max, "largest n");
    sweep_cmd->add_option("--alpha", alpha, "jammer budget exponent (n_jammers = round(c*n^alpha))");
    sweep_cmd->add_option("--c", c, "jammer budget constant");
    sweep_cmd->add_option("--placements", placements, "comma list of placements");
    sweep_cmd->add_option("--models", models, "comma list of models (line,miniring)");
    sweep_cmd->add_option("--engines", engines, "comma list of engines (analytic,simulate)");
    sweep_cmd->add_option("--lambda-s", lambda_s, "source self-update rate");
    sweep_cmd->add_option("--lambda", lambda, "aggregate source/gossip rate");
    sweep_cmd->add_option("--horizon", horizon, "simulation horizon per replication");
    sweep_cmd->add_option("--warmup", warmup, "simulation warmup (default horizon/10)");
    sweep_cmd->add_option("--replications", replications, "simulation replications");
    sweep_cmd->add_option("--seed", seed, "base RNG seed");
    sweep_cmd->add_option("--out-dir", out_dir, "output directory for csv/svg/metadata");
    sweep_cmd->add_flag("--no-plot", no_plot, "skip SVG emission");

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "log-log exponent fit over a sweep csv");
    std::string fit_input;
    fit_cmd->add_option("csv", fit_input, "sweep csv path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit clean, bad arguments exit 1
    }

    try {
        if (age_cmd->parsed()) return run_age(age_args, lambda_s, lambda, out_dir);
        if (sim_cmd->parsed())
            return run_simulate(sim_args, lambda_s, lambda, horizon, warmup, replications, seed,
                                out_dir, per_node);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(n_min, n_max, alpha, c, placements, models, engines, lambda_s,
                                 lambda, horizon, warmup, replications, seed, out_dir, !no_plot);
        if (fit_cmd->parsed()) return run_fit(fit_input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
