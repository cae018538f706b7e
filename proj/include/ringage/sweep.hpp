#pragma once

// Experiment harness: scaling sweeps over network size with a jammer budget
// n_jammers = round(c * n^alpha), evaluated analytically and/or by simulation,
// plus the log-log exponent fit used to verify scaling claims.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringage/model.hpp"
#include "ringage/placement.hpp"
#include "ringage/sim.hpp"

namespace ringage {

enum class Model { Line, Miniring };
enum class Engine { Analytic, Simulate };

inline const char* to_string(Model m) { return m == Model::Line ? "line" : "miniring"; }
inline const char* to_string(Engine e) { return e == Engine::Analytic ? "analytic" : "simulate"; }

inline Model model_from_string(const std::string& s) {
    if (s == "line") return Model::Line;
    if (s == "miniring") return Model::Miniring;
    throw std::invalid_argument("unknown model: " + s);
}

inline Engine engine_from_string(const std::string& s) {
    if (s == "analytic") return Engine::Analytic;
    if (s == "simulate") return Engine::Simulate;
    throw std::invalid_argument("unknown engine: " + s);
}

// round(c * n^alpha), clamped to [0, n]
inline std::int64_t jammer_count(std::int64_t n, double alpha, double c) {
    auto v = static_cast<std::int64_t>(std::llround(c * std::pow(static_cast<double>(n), alpha)));
    return std::clamp<std::int64_t>(v, 0, n);
}

struct SimParams {
    double horizon = 20000.0;
    double warmup_fraction = 0.1;  // discarded start-up stretch
    std::int64_t replications = 20;
};

struct SweepSpec {
    std::vector<std::int64_t> n_values;
    double alpha = 0.3;
    double c = 1.0;
    std::vector<StrategyKind> placements{StrategyKind::Equidistant, StrategyKind::Random,
                                         StrategyKind::Adjacent};
    std::vector<Model> models{Model::Line, Model::Miniring};
    std::vector<Engine> engines{Engine::Analytic};
    double lambda_s = 1.0;
    double lambda = 1.0;
    std::uint64_t seed = 1;
    SimParams sim;

    void validate() const {
        if (n_values.empty()) throw std::invalid_argument("SweepSpec: no n values");
        if (!std::is_sorted(n_values.begin(), n_values.end()))
            throw std::invalid_argument("SweepSpec: n values must be ascending");
        if (n_values.front() < 1) throw std::invalid_argument("SweepSpec: n must be >= 1");
        if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("SweepSpec: alpha in [0,1]");
        if (!(c > 0.0)) throw std::invalid_argument("SweepSpec: c must be > 0");
        if (placements.empty() || models.empty() || engines.empty())
            throw std::invalid_argument("SweepSpec: empty placement/model/engine set");
    }
};

struct ScalingRecord {
    std::int64_t n = 0;
    std::int64_t n_jammers = 0;
    double alpha = 0.0;
    StrategyKind placement = StrategyKind::Equidistant;
    Model model = Model::Line;
    Engine engine = Engine::Analytic;
    double system_age = 0.0;
    double ci_halfwidth = 0.0;  // zero for the analytic engine

    friend bool operator==(const ScalingRecord& a, const ScalingRecord& b) {
        return a.n == b.n && a.n_jammers == b.n_jammers && a.alpha == b.alpha &&
               a.placement == b.placement && a.model == b.model && a.engine == b.engine &&
               a.system_age == b.system_age && a.ci_halfwidth == b.ci_halfwidth;
    }
};

struct SweepOutcome {
    std::vector<ScalingRecord> records;
    std::vector<std::string> failures;  // per-cell error messages, non-fatal
};

namespace detail {

inline bool record_order(const ScalingRecord& a, const ScalingRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.placement != b.placement) return static_cast<int>(a.placement) < static_cast<int>(b.placement);
    if (a.model != b.model) return static_cast<int>(a.model) < static_cast<int>(b.model);
    return static_cast<int>(a.engine) < static_cast<int>(b.engine);
}

}  // namespace detail

// Evaluates every (n, placement, model, engine) cell. Simulation cells share
// one seed per (n, model) so placements are compared under common random
// numbers. Cell failures are recorded, not fatal.
inline SweepOutcome run_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepOutcome out;
    for (std::int64_t n : spec.n_values) {
        Rates rates(spec.lambda_s, spec.lambda, n);
        std::int64_t jammers = jammer_count(n, spec.alpha, spec.c);
        for (StrategyKind kind : spec.placements) {
            PlacementStrategy strategy{kind, derive_stream(spec.seed, 0x706C6163ULL,
                                                           static_cast<std::uint64_t>(n))};
            Partition line_partition = [&] {
                auto placement = place(strategy, n, jammers);
                return partition_from_placement(placement, n);
            }();
            for (Model model : spec.models) {
                Partition partition =
                    model == Model::Miniring ? to_miniring_model(line_partition) : line_partition;
                for (Engine engine : spec.engines) {
                    ScalingRecord rec;
                    rec.n = n;
                    rec.n_jammers = jammers;
                    rec.alpha = spec.alpha;
                    rec.placement = kind;
                    rec.model = model;
                    rec.engine = engine;
                    try {
                        if (engine == Engine::Analytic) {
                            rec.system_age = system_age(partition, rates);
                        } else {
                            auto cfg = SimConfig::from_partition(
                                partition, rates, spec.sim.horizon,
                                spec.sim.horizon * spec.sim.warmup_fraction,
                                derive_stream(spec.seed, 0x73696DULL, static_cast<std::uint64_t>(n),
                                              static_cast<std::uint64_t>(model)),
                                spec.sim.replications);
                            auto res = simulate(cfg);
                            rec.system_age = res.system_age;
                            rec.ci_halfwidth = res.ci_halfwidth;
                        }
                        out.records.push_back(rec);
                    } catch (const std::exception& e) {
                        out.failures.push_back("cell n=" + std::to_string(n) + " placement=" +
                                               std::string(to_string(kind)) + " model=" +
                                               std::string(to_string(model)) + " engine=" +
                                               std::string(to_string(engine)) + ": " + e.what());
                    }
                }
            }
        }
    }
    std::sort(out.records.begin(), out.records.end(), detail::record_order);
    return out;
}

struct FitResult {
    double slope = 0.0;
    double r2 = 0.0;
};

// Least-squares slope of log(age) against log(n) over the largest decade of n
// (records with n >= max_n / 10). All records must belong to one
// (placement, model, engine) series and at least 4 points must remain.
inline FitResult fit_exponent(const std::vector<ScalingRecord>& records) {
    if (records.size() < 4)
        throw std::invalid_argument("fit_exponent: need at least 4 records");
    for (const auto& r : records) {
        if (r.placement != records.front().placement || r.model != records.front().model ||
            r.engine != records.front().engine)
            throw std::invalid_argument("fit_exponent: records mix placement/model/engine series");
    }
    std::int64_t max_n = 0;
    for (const auto& r : records) max_n = std::max(max_n, r.n);
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) {
        if (r.n * 10 >= max_n) {
            if (!(r.system_age > 0.0))
                throw std::invalid_argument("fit_exponent: non-positive age");
            pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.system_age));
        }
    }
    if (pts.size() < 4)
        throw std::invalid_argument("fit_exponent: fewer than 4 points in the largest decade");

    double mx = 0.0, my = 0.0;
    for (auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    double ss_res = syy - fit.slope * sxy;
    fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

}  // namespace ringage
