#pragma once

#include <cstddef>
#include <cstdint>

#include "agenttree/topology.hpp"

namespace agenttree {

struct WorldState {
    double value = 0.0;
    double initial_value = 0.0;

    static WorldState starting_at(double v) noexcept { return {v, v}; }
    double delta() const noexcept { return value - initial_value; }
};

// splitmix64 output function: advance x by the golden gamma and mix.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Maps a 64-bit word to [-1, 1) using its top 53 bits.
double unit_symmetric(std::uint64_t u) noexcept;

/// Level-scaled uniform measurement noise with per-agent counter streams.
///
/// Agent a's stream starts at state s = splitmix64(seed ^ splitmix64(a)).
/// Draw k advances that state k times by the splitmix gamma and returns the
/// splitmix64 output of the advanced state, so any (agent, k) is addressable
/// directly and draws do not depend on the order agents are visited.
struct NoiseModel {
    double eta = 1e-3;
    double psi = 1.4142135623730951;
    std::uint64_t seed = 0;

    /// eta * psi^level, by repeated multiplication.
    double amplitude(Level level) const noexcept;
    /// Raw xi in [-1, 1) for the given agent and draw index.
    double xi(AgentIndex agent, std::uint64_t draw_counter) const noexcept;
};

double sample_noise(const NoiseModel& model, AgentIndex agent, Level level,
                    std::uint64_t draw_counter) noexcept;

/// One hammer blow: value += (epsilon / agent_count) * (action - value).
WorldState apply_hammer(const WorldState& world, double action, std::size_t agent_count,
                        double epsilon);

}  // namespace agenttree
