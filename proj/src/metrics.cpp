#include "agenttree/metrics.hpp"

#include <stdexcept>
#include <string>

namespace agenttree {

Snapshot Snapshot::capture(const Simulation& sim, std::uint64_t tick) {
    const auto states = sim.states();
    return Snapshot{tick, sim.world().value, {states.begin(), states.end()}};
}

std::string_view metric_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::Naive: return "naive";
        case MetricKind::Absolute: return "abs";
        case MetricKind::Perceived: return "perc";
        case MetricKind::Bootlicker: return "boot";
        case MetricKind::Authoritarian: return "auth";
        case MetricKind::Democratic: return "demo";
    }
    throw std::invalid_argument("unknown metric kind " +
                                std::to_string(static_cast<int>(kind)));
}

double mean_judgement(const Snapshot& snapshot) {
    if (snapshot.states.empty()) throw std::invalid_argument("snapshot has no agents");
    double total = 0.0;
    for (const auto& s : snapshot.states) total += s.J;
    return total / static_cast<double>(snapshot.states.size());
}

namespace {

// Reference value with the tree-level quantities (J_0, mean J) precomputed.
double reference(const Snapshot& snap, MetricKind kind, AgentIndex i, double mean_j) {
    const AgentState& s = snap.states[i];
    switch (kind) {
        case MetricKind::Naive: return s.W;
        case MetricKind::Absolute: return snap.world_value;
        case MetricKind::Perceived: return s.J;
        case MetricKind::Bootlicker: return s.Jstar;
        case MetricKind::Authoritarian: return snap.states.front().J;
        case MetricKind::Democratic: return mean_j;
    }
    throw std::invalid_argument("unknown metric kind " + std::to_string(static_cast<int>(kind)));
}

}  // namespace

double reference_value(const Snapshot& snapshot, MetricKind kind, AgentIndex i) {
    if (i >= snapshot.states.size()) {
        throw std::invalid_argument("agent index " + std::to_string(i) + " out of range");
    }
    const double mean_j = kind == MetricKind::Democratic ? mean_judgement(snapshot) : 0.0;
    return reference(snapshot, kind, i, mean_j);
}

double success_metric(const Snapshot& snapshot, MetricKind kind) {
    if (snapshot.states.empty()) return 0.0;
    const double mean_j = kind == MetricKind::Democratic ? mean_judgement(snapshot) : 0.0;
    double total = 0.0;
    for (AgentIndex i = 0; i < snapshot.states.size(); ++i) {
        const double d = snapshot.states[i].A - reference(snapshot, kind, i, mean_j);
        total += d * d;
    }
    return total;
}

MetricsRecord metrics_record(const Snapshot& snapshot, const ScheduleConfig& schedule,
                             double initial_world) {
    MetricsRecord r;
    r.tick = snapshot.tick;
    r.t_norm = static_cast<double>(snapshot.tick) / static_cast<double>(schedule.top_period());
    r.world = snapshot.world_value;
    r.delta_world = snapshot.world_value - initial_world;
    const double n = static_cast<double>(snapshot.states.size());
    for (MetricKind k : all_metric_kinds) {
        const auto idx = static_cast<std::size_t>(k);
        r.x[idx] = success_metric(snapshot, k);
        r.x_pa[idx] = n > 0 ? r.x[idx] / n : 0.0;
    }
    return r;
}

}  // namespace agenttree
