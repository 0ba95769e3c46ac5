#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "agenttree/dynamics.hpp"
#include "agenttree/topology.hpp"
#include "agenttree/world.hpp"

namespace agenttree {

struct ScheduleConfig {
    int levels = 4;
    int ratio = 3;

    /// Ticks between consecutive steps of a level-`level` agent: ratio^(levels-1-level).
    std::uint64_t period(Level level) const;
    /// Ticks per top-level step, ratio^(levels-1).
    std::uint64_t top_period() const { return period(0); }
};

bool is_due(Level level, std::uint64_t tick, const ScheduleConfig& schedule);

enum class StepKind : std::uint8_t { Measure, Judge, Act };

char step_letter(StepKind k) noexcept;

struct AgentCursor {
    StepKind next_step = StepKind::Measure;
    std::uint64_t draws_taken = 0;

    void advance() noexcept;
};

/// Raised when the state leaves the finite reals; carries the offending tick.
class RunAborted : public std::runtime_error {
public:
    RunAborted(std::uint64_t tick, const std::string& what);
    std::uint64_t tick() const noexcept { return tick_; }

private:
    std::uint64_t tick_;
};

struct SimulationParams {
    ScheduleConfig schedule;
    NoiseModel noise;
    WeightVector sigma = judgement_weights(0.1);
    WeightVector alpha = action_weights(0.2);
    double epsilon = 0.0;
    double world0 = 3.0;
};

/// Fired after each agent step: (tick, agent, kind executed).
using StepObserver = std::function<void(std::uint64_t, AgentIndex, StepKind)>;

/// Full simulation state and the global tick loop.
///
/// Within a tick, levels are visited top-down and agents within a level in
/// ascending index order. Each due agent executes exactly one step of its
/// own Measure -> Judge -> Act cycle. Measurements read the current world
/// value and the neighbours' J as they stand at that moment; a non-zero
/// epsilon hammers the world immediately after every action.
class Simulation {
public:
    explicit Simulation(SimulationParams params, const AgentState& initial = AgentState{});

    void advance_tick();

    const Tree& tree() const noexcept { return tree_; }
    const SimulationParams& params() const noexcept { return params_; }
    std::span<const AgentState> states() const noexcept { return states_; }
    std::span<const AgentCursor> cursors() const noexcept { return cursors_; }
    const WorldState& world() const noexcept { return world_; }
    /// Next tick to execute; equals the number of ticks executed so far.
    std::uint64_t tick() const noexcept { return tick_; }

    /// Overrides the world value (initial_value is kept).
    void set_world_value(double v) noexcept { world_.value = v; }
    void set_observer(StepObserver observer) { observer_ = std::move(observer); }

private:
    void execute_step(AgentIndex i, Level level);

    SimulationParams params_;
    Tree tree_;
    std::vector<AgentState> states_;
    std::vector<AgentCursor> cursors_;
    WorldState world_;
    std::uint64_t tick_ = 0;
    StepObserver observer_;
};

}  // namespace agenttree
