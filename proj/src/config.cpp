#include "agenttree/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace agenttree {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key), "expected a real number, got '" + std::string(text) + "'");
    }
    if (!std::isfinite(v)) throw ConfigError(std::string(key), "value must be finite");
    return v;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view text) {
    Int v{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ConfigError(std::string(key), "expected an integer, got '" + std::string(text) + "'");
    }
    return v;
}

const std::vector<std::string_view> keys = {
    "world_kind", "levels",   "theta",   "phi",  "sigma_scale", "alpha_scale", "eta",
    "psi",        "epsilon",  "ratio",   "seed", "world0",      "max_ticks",   "record_every"};

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

const std::vector<std::string_view>& config_keys() { return keys; }

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                         std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

std::uint64_t SimConfig::effective_max_ticks() const {
    if (max_ticks) return *max_ticks;
    // 10 full top-level cycles: ten times ratio^levels.
    std::uint64_t t = 10;
    for (int e = 0; e < levels; ++e) {
        if (t > UINT64_MAX / static_cast<std::uint64_t>(ratio)) {
            throw ConfigError("levels", "default run length overflows 64 bits");
        }
        t *= static_cast<std::uint64_t>(ratio);
    }
    return t;
}

SimulationParams SimConfig::simulation_params() const {
    return SimulationParams{schedule(),
                            NoiseModel{eta, psi, seed},
                            judgement_weights(theta).scaled(sigma_scale),
                            action_weights(phi).scaled(alpha_scale),
                            epsilon,
                            world0};
}

void set_config_value(SimConfig& c, std::string_view key, std::string_view raw) {
    const std::string_view value = trim(raw);
    if (value.empty()) throw ConfigError(std::string(key), "missing value");
    if (key == "world_kind") c.world_kind = std::string(value);
    else if (key == "levels") c.levels = parse_integer<int>(key, value);
    else if (key == "theta") c.theta = parse_real(key, value);
    else if (key == "phi") c.phi = parse_real(key, value);
    else if (key == "sigma_scale") c.sigma_scale = parse_real(key, value);
    else if (key == "alpha_scale") c.alpha_scale = parse_real(key, value);
    else if (key == "eta") c.eta = parse_real(key, value);
    else if (key == "psi") c.psi = parse_real(key, value);
    else if (key == "epsilon") c.epsilon = parse_real(key, value);
    else if (key == "ratio") c.ratio = parse_integer<int>(key, value);
    else if (key == "seed") c.seed = parse_integer<std::uint64_t>(key, value);
    else if (key == "world0") c.world0 = parse_real(key, value);
    else if (key == "max_ticks") c.max_ticks = parse_integer<std::uint64_t>(key, value);
    else if (key == "record_every") c.record_every = parse_integer<std::uint64_t>(key, value);
    else throw ConfigError(std::string(key), "unknown key");
}

void validate_config(const SimConfig& c, std::vector<std::string>* warnings) {
    if (c.world_kind != "scalar") {
        throw ConfigError("world_kind", "unsupported world kind '" + c.world_kind + "'");
    }
    if (c.levels < 1 || c.levels > Tree::max_levels) {
        throw ConfigError("levels", "must be in [1, " + std::to_string(Tree::max_levels) + "]");
    }
    if (c.ratio < 2) throw ConfigError("ratio", "must be at least 2");
    if (!(c.psi > 0.0)) throw ConfigError("psi", "must be positive");
    if (!(c.eta >= 0.0)) throw ConfigError("eta", "must be non-negative");
    if (c.max_ticks && *c.max_ticks == 0) throw ConfigError("max_ticks", "must be positive");
    if (c.record_every == 0) throw ConfigError("record_every", "must be positive");
    try {
        (void)c.schedule().top_period();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("levels", e.what());
    }
    (void)c.effective_max_ticks();
    for (auto [key, v] : {std::pair{"theta", c.theta}, {"phi", c.phi},
                          {"sigma_scale", c.sigma_scale}, {"alpha_scale", c.alpha_scale},
                          {"epsilon", c.epsilon}, {"world0", c.world0}, {"eta", c.eta},
                          {"psi", c.psi}}) {
        if (!std::isfinite(v)) throw ConfigError(key, "must be finite");
    }
    if (warnings) {
        if (c.theta < 0.0 || c.theta > 1.0 / 3.0) {
            warnings->push_back("theta = " + format_double(c.theta) +
                                " is outside [0, 1/3]; judgement weights go negative");
        }
        if (c.phi < 0.0 || c.phi > 1.0) {
            warnings->push_back("phi = " + format_double(c.phi) +
                                " is outside [0, 1]; action weights go negative");
        }
    }
}

SimConfig parse_config(std::string_view text, std::vector<std::string>* warnings) {
    SimConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw ConfigError("", "line " + std::to_string(line_no) + ": missing key");
        }
        if (!seen.emplace(key).second) throw ConfigError(std::string(key), "repeated key");
        set_config_value(config, key, line.substr(eq + 1));
    }
    validate_config(config, warnings);
    return config;
}

std::string serialize_config(const SimConfig& c) {
    std::ostringstream out;
    out << "world_kind = " << c.world_kind << '\n'
        << "levels = " << c.levels << '\n'
        << "theta = " << format_double(c.theta) << '\n'
        << "phi = " << format_double(c.phi) << '\n'
        << "sigma_scale = " << format_double(c.sigma_scale) << '\n'
        << "alpha_scale = " << format_double(c.alpha_scale) << '\n'
        << "eta = " << format_double(c.eta) << '\n'
        << "psi = " << format_double(c.psi) << '\n'
        << "epsilon = " << format_double(c.epsilon) << '\n'
        << "ratio = " << c.ratio << '\n'
        << "seed = " << c.seed << '\n'
        << "world0 = " << format_double(c.world0) << '\n';
    if (c.max_ticks) out << "max_ticks = " << *c.max_ticks << '\n';
    out << "record_every = " << c.record_every << '\n';
    return out.str();
}

}  // namespace agenttree
