#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "agenttree/dynamics.hpp"
#include "agenttree/scheduler.hpp"
#include "agenttree/topology.hpp"

namespace agenttree {

struct Snapshot {
    std::uint64_t tick = 0;
    double world_value = 0.0;
    std::vector<AgentState> states;

    static Snapshot capture(const Simulation& sim, std::uint64_t tick);
};

enum class MetricKind : std::uint8_t {
    Naive = 0,          // D0: Q_i = W_i
    Absolute = 1,       // D1: Q_i = world value
    Perceived = 2,      // D2: Q_i = J_i
    Bootlicker = 3,     // D3: Q_i = Jstar_i
    Authoritarian = 4,  // D4: Q_i = J_0
    Democratic = 5,     // D5: Q_i = mean J
};

inline constexpr std::size_t metric_kind_count = 6;
inline constexpr std::array<MetricKind, metric_kind_count> all_metric_kinds = {
    MetricKind::Naive,      MetricKind::Absolute,      MetricKind::Perceived,
    MetricKind::Bootlicker, MetricKind::Authoritarian, MetricKind::Democratic};

/// Column stem used in series output ("naive", "abs", ...).
std::string_view metric_name(MetricKind kind);

double mean_judgement(const Snapshot& snapshot);

/// Reference value Q_i the action of agent i is compared against.
double reference_value(const Snapshot& snapshot, MetricKind kind, AgentIndex i);

/// X_Q = sum_i (A_i - Q_i)^2 over all agents.
double success_metric(const Snapshot& snapshot, MetricKind kind);

struct MetricsRecord {
    std::uint64_t tick = 0;
    double t_norm = 0.0;
    double world = 0.0;
    double delta_world = 0.0;
    std::array<double, metric_kind_count> x{};
    std::array<double, metric_kind_count> x_pa{};

    double metric(MetricKind k) const { return x[static_cast<std::size_t>(k)]; }
    double per_agent(MetricKind k) const { return x_pa[static_cast<std::size_t>(k)]; }

    friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

MetricsRecord metrics_record(const Snapshot& snapshot, const ScheduleConfig& schedule,
                             double initial_world);

}  // namespace agenttree
