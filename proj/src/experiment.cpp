#include "agenttree/experiment.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace agenttree {

std::vector<MetricsRecord> run(const SimConfig& config) {
    validate_config(config);
    const std::uint64_t max_ticks = config.effective_max_ticks();
    const ScheduleConfig schedule = config.schedule();

    Simulation sim(config.simulation_params());
    std::vector<MetricsRecord> records;
    records.reserve(static_cast<std::size_t>(max_ticks / config.record_every + 1));
    for (std::uint64_t t = 0; t < max_ticks; ++t) {
        sim.advance_tick();
        if (t % config.record_every == 0 || t + 1 == max_ticks) {
            records.push_back(metrics_record(Snapshot::capture(sim, t), schedule, config.world0));
        }
    }
    return records;
}

SweepSummary summarize(const std::vector<MetricsRecord>& records) {
    SweepSummary summary;
    if (records.empty()) return summary;
    summary.final_per_agent = records.back().x_pa;
    summary.final_delta_world = records.back().delta_world;
    for (const auto& r : records) {
        if (r.per_agent(MetricKind::Absolute) < convergence_threshold) {
            summary.convergence_tick = r.tick;
            break;
        }
    }
    return summary;
}

namespace {

bool is_integer_axis(std::string_view axis) {
    return axis == "levels" || axis == "ratio" || axis == "seed" || axis == "max_ticks" ||
           axis == "record_every";
}

}  // namespace

bool is_sweep_axis(std::string_view axis) {
    for (auto key : config_keys()) {
        if (key == axis) return key != "world_kind";
    }
    return false;
}

SimConfig with_axis_value(const SimConfig& base, std::string_view axis, double value) {
    if (!is_sweep_axis(axis)) {
        throw std::invalid_argument("unknown sweep axis '" + std::string(axis) + "'");
    }
    if (!std::isfinite(value)) throw std::invalid_argument("sweep values must be finite");
    if (is_integer_axis(axis) && (value != std::floor(value) || value < 0.0)) {
        throw std::invalid_argument("axis '" + std::string(axis) +
                                    "' needs non-negative integer values, got " +
                                    format_double(value));
    }
    SimConfig config = base;
    if (is_integer_axis(axis)) {
        // Through text so that 64-bit seeds are not squeezed through int.
        set_config_value(config, axis, std::to_string(static_cast<std::uint64_t>(value)));
    } else {
        set_config_value(config, axis, format_double(value));
    }
    return config;
}

std::vector<std::pair<double, SweepSummary>> sweep(const SimConfig& base, std::string_view axis,
                                                   const std::vector<double>& values) {
    std::vector<SimConfig> configs;
    configs.reserve(values.size());
    for (double v : values) {
        configs.push_back(with_axis_value(base, axis, v));
        validate_config(configs.back());
    }
    std::vector<std::future<SweepSummary>> pending;
    pending.reserve(configs.size());
    for (const auto& c : configs) {
        pending.push_back(std::async(std::launch::async, [c] { return summarize(run(c)); }));
    }
    std::vector<std::pair<double, SweepSummary>> results;
    results.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) results.emplace_back(values[k], pending[k].get());
    return results;
}

SimConfig scenario_config(const Scenario& scenario, int levels) {
    SimConfig c;
    c.levels = levels;
    c.eta = scenario.eta;
    c.epsilon = scenario.epsilon;
    return c;
}

}  // namespace agenttree
