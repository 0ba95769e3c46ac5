#include "agenttree/scheduler.hpp"

#include <cmath>

namespace agenttree {

std::uint64_t ScheduleConfig::period(Level level) const {
    if (levels < 1) throw std::invalid_argument("levels must be positive");
    if (ratio < 2) throw std::invalid_argument("ratio must be at least 2");
    if (level >= static_cast<Level>(levels)) {
        throw std::invalid_argument("level " + std::to_string(level) + " out of range for " +
                                    std::to_string(levels) + " levels");
    }
    std::uint64_t p = 1;
    const auto r = static_cast<std::uint64_t>(ratio);
    for (int e = 0; e < levels - 1 - static_cast<int>(level); ++e) {
        if (p > UINT64_MAX / r) throw std::invalid_argument("step period overflows 64 bits");
        p *= r;
    }
    return p;
}

bool is_due(Level level, std::uint64_t tick, const ScheduleConfig& schedule) {
    return tick % schedule.period(level) == 0;
}

char step_letter(StepKind k) noexcept {
    switch (k) {
        case StepKind::Measure: return 'M';
        case StepKind::Judge: return 'J';
        case StepKind::Act: return 'A';
    }
    return '?';
}

void AgentCursor::advance() noexcept {
    switch (next_step) {
        case StepKind::Measure:
            ++draws_taken;
            next_step = StepKind::Judge;
            break;
        case StepKind::Judge: next_step = StepKind::Act; break;
        case StepKind::Act: next_step = StepKind::Measure; break;
    }
}

RunAborted::RunAborted(std::uint64_t tick, const std::string& what)
    : std::runtime_error("run aborted at tick " + std::to_string(tick) + ": " + what),
      tick_(tick) {}

Simulation::Simulation(SimulationParams params, const AgentState& initial)
    : params_(std::move(params)),
      tree_(params_.schedule.levels),
      states_(tree_.agent_count(), initial),
      cursors_(tree_.agent_count()),
      world_(WorldState::starting_at(params_.world0)) {
    // Validates ratio and that every period fits in 64 bits.
    (void)params_.schedule.period(0);
    if (!initial.is_finite() || !std::isfinite(params_.world0) ||
        !std::isfinite(params_.epsilon)) {
        throw std::invalid_argument("initial state, world value and epsilon must be finite");
    }
}

void Simulation::execute_step(AgentIndex i, Level level) {
    AgentCursor& cursor = cursors_[i];
    AgentState& s = states_[i];
    const StepKind kind = cursor.next_step;
    switch (kind) {
        case StepKind::Measure: {
            const auto [u, v] = tree_.children_of(i);
            const double noise = sample_noise(params_.noise, i, level, cursor.draws_taken);
            s = step_measure(s, world_.value, noise, states_[tree_.parent_of(i)].J, states_[u].J,
                             states_[v].J);
            break;
        }
        case StepKind::Judge: s = step_judge(s, params_.sigma); break;
        case StepKind::Act:
            s = step_act(s, params_.alpha);
            world_ = apply_hammer(world_, s.A, tree_.agent_count(), params_.epsilon);
            if (!std::isfinite(world_.value)) throw RunAborted(tick_, "world value is not finite");
            break;
    }
    if (!s.is_finite()) {
        throw RunAborted(tick_, "agent " + std::to_string(i) + " state is not finite");
    }
    cursor.advance();
    if (observer_) observer_(tick_, i, kind);
}

void Simulation::advance_tick() {
    const auto& schedule = params_.schedule;
    for (Level level = 0; level < static_cast<Level>(schedule.levels); ++level) {
        if (!is_due(level, tick_, schedule)) continue;
        const AgentIndex first = tree_.first_at_level(level);
        const AgentIndex last = first + tree_.agents_at_level(level);
        for (AgentIndex i = first; i < last; ++i) {
            try {
                execute_step(i, level);
            } catch (const std::invalid_argument& e) {
                throw RunAborted(tick_, "agent " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    ++tick_;
}

}  // namespace agenttree
