#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agenttree/config.hpp"
#include "agenttree/metrics.hpp"

namespace agenttree {

/// Per-agent absolute metric below which a run counts as converged.
inline constexpr double convergence_threshold = 1e-6;

/// Runs one simulation from the all-zero agent state and returns one record
/// per recorded tick (every `record_every` ticks plus the final tick).
/// Throws RunAborted if the state becomes non-finite.
std::vector<MetricsRecord> run(const SimConfig& config);

struct SweepSummary {
    std::array<double, metric_kind_count> final_per_agent{};
    std::optional<std::uint64_t> convergence_tick;
    double final_delta_world = 0.0;

    friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

SweepSummary summarize(const std::vector<MetricsRecord>& records);

/// Axes accepted by sweep(): the numeric SimConfig keys.
bool is_sweep_axis(std::string_view axis);

/// Returns `base` with `axis` set to `value`; integer axes must receive
/// integral values.
SimConfig with_axis_value(const SimConfig& base, std::string_view axis, double value);

/// One independent run per value, executed concurrently; results follow the
/// order of `values`.
std::vector<std::pair<double, SweepSummary>> sweep(const SimConfig& base, std::string_view axis,
                                                   const std::vector<double>& values);

/// The four reference scenarios: clear/foggy world, with/without hammer.
struct Scenario {
    std::string_view name;
    double eta;
    double epsilon;
};

inline constexpr std::array<Scenario, 4> reference_scenarios = {{
    {"noiseless_nohammer", 0.0, 0.0},
    {"noisy_nohammer", 1e-3, 0.0},
    {"noiseless_hammer", 0.0, 2e-3},
    {"noisy_hammer", 1e-3, 2e-3},
}};

inline constexpr std::array<int, 2> scenario_levels = {4, 6};

SimConfig scenario_config(const Scenario& scenario, int levels);

}  // namespace agenttree
