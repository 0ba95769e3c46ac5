#include "agenttree/world.hpp"

#include <stdexcept>

namespace agenttree {

namespace {
constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept { return mix(x + golden_gamma); }

double unit_symmetric(std::uint64_t u) noexcept {
    // (u / 2^63) - 1 at 53-bit precision: keep the top 53 bits, scale by 2^-52.
    return static_cast<double>(u >> 11) * 0x1.0p-52 - 1.0;
}

double NoiseModel::amplitude(Level level) const noexcept {
    double a = eta;
    for (Level l = 0; l < level; ++l) a *= psi;
    return a;
}

double NoiseModel::xi(AgentIndex agent, std::uint64_t draw_counter) const noexcept {
    const std::uint64_t base = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(agent)));
    return unit_symmetric(splitmix64(base + draw_counter * golden_gamma));
}

double sample_noise(const NoiseModel& model, AgentIndex agent, Level level,
                    std::uint64_t draw_counter) noexcept {
    if (model.eta == 0.0) return 0.0;
    return model.amplitude(level) * model.xi(agent, draw_counter);
}

WorldState apply_hammer(const WorldState& world, double action, std::size_t agent_count,
                        double epsilon) {
    if (agent_count == 0) throw std::invalid_argument("agent_count must be positive");
    if (epsilon == 0.0) return world;
    WorldState next = world;
    next.value += (epsilon / static_cast<double>(agent_count)) * (action - world.value);
    return next;
}

}  // namespace agenttree
