#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "agenttree/scheduler.hpp"

namespace agenttree {

/// Every model parameter of one run. Defaults are the reference parameter set.
struct SimConfig {
    std::string world_kind = "scalar";  // only "scalar" is implemented
    int levels = 4;
    double theta = 0.1;
    double phi = 0.2;
    double sigma_scale = 1.0;
    double alpha_scale = 1.0;
    double eta = 1e-3;
    double psi = 1.4142135623730951;  // sqrt(2)
    double epsilon = 0.0;
    int ratio = 3;
    std::uint64_t seed = 0;
    double world0 = 3.0;
    std::optional<std::uint64_t> max_ticks;  // unset: 10 * ratio^levels
    std::uint64_t record_every = 1;

    std::uint64_t effective_max_ticks() const;
    ScheduleConfig schedule() const { return {levels, ratio}; }
    SimulationParams simulation_params() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Parse or validation failure; key() names the offending key when known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Names of all keys accepted in a config document.
const std::vector<std::string_view>& config_keys();

/// Sets one field from its textual value. Throws ConfigError for unknown keys
/// and unparsable values. Does not validate cross-field constraints.
void set_config_value(SimConfig& config, std::string_view key, std::string_view value);

/// Structural checks (levels, psi, eta, ratio, ...). Throws ConfigError.
/// Soft range issues (theta outside [0, 1/3], phi outside [0, 1]) are appended
/// to `warnings` when provided.
void validate_config(const SimConfig& config, std::vector<std::string>* warnings = nullptr);

/// Parses a flat `key = value` document; `#` starts a comment. Missing keys
/// keep their defaults; unknown or repeated keys are errors.
SimConfig parse_config(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Emits every set key, one per line, with round-trip number formatting.
std::string serialize_config(const SimConfig& config);

std::string format_double(double v);

}  // namespace agenttree
