#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "agenttree/config.hpp"

using namespace agenttree;

namespace {

std::string error_key(std::string_view text) {
    try {
        (void)parse_config(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("empty document yields the reference defaults") {
    const SimConfig c = parse_config("");
    CHECK(c.levels == 4);
    CHECK(c.theta == 0.1);
    CHECK(c.phi == 0.2);
    CHECK(c.eta == 1e-3);
    CHECK(c.psi == std::sqrt(2.0));
    CHECK(c.epsilon == 0.0);
    CHECK(c.ratio == 3);
    CHECK(c.world0 == 3.0);
    CHECK(c.sigma_scale == 1.0);
    CHECK(c.alpha_scale == 1.0);
    CHECK(c.seed == 0);
    CHECK(c.record_every == 1);
    CHECK_FALSE(c.max_ticks.has_value());
    CHECK(c.effective_max_ticks() == 810);
    CHECK(c == SimConfig{});
}

TEST_CASE("overrides and comments") {
    const SimConfig c = parse_config(
        "# hammer scenario\n"
        "levels = 6\n"
        "  epsilon=2e-3   # small\n"
        "\n");
    SimConfig expected;
    expected.levels = 6;
    expected.epsilon = 2e-3;
    CHECK(c == expected);
    CHECK(c.effective_max_ticks() == 7290);
}

TEST_CASE("validation errors name the key") {
    CHECK(error_key("levels = 0") == "levels");
    CHECK(error_key("psi = 0") == "psi");
    CHECK(error_key("psi = -1") == "psi");
    CHECK(error_key("eta = -1e-3") == "eta");
    CHECK(error_key("ratio = 1") == "ratio");
    CHECK(error_key("max_ticks = 0") == "max_ticks");
    CHECK(error_key("record_every = 0") == "record_every");
    CHECK(error_key("bogus = 1") == "bogus");
    CHECK(error_key("theta = abc") == "theta");
    CHECK(error_key("levels = 2.5") == "levels");
    CHECK(error_key("seed = -4") == "seed");
    CHECK(error_key("theta = inf") == "theta");
    CHECK(error_key("levels = 4\nlevels = 5") == "levels");
    CHECK(error_key("world_kind = oscillating") == "world_kind");
    CHECK(error_key("levels = 40") == "levels");
    CHECK(error_key("levels =") == "levels");
    CHECK(error_key("just some words") == "");
}

TEST_CASE("soft range warnings") {
    std::vector<std::string> warnings;
    (void)parse_config("theta = 0.5\nphi = 1.5", &warnings);
    CHECK(warnings.size() == 2);
    warnings.clear();
    (void)parse_config("theta = 0.3333\nphi = 0", &warnings);
    CHECK(warnings.empty());
    warnings.clear();
    (void)parse_config("theta = -0.1", &warnings);
    CHECK(warnings.size() == 1);
}

TEST_CASE("property: serialize then parse is the identity") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> real(-2.0, 2.0);
    std::uniform_int_distribution<int> lvl(1, 8);
    std::uniform_int_distribution<int> ratio(2, 5);
    for (int trial = 0; trial < 300; ++trial) {
        SimConfig c;
        c.levels = lvl(rng);
        c.theta = real(rng) / 3.0;
        c.phi = real(rng);
        c.sigma_scale = std::fabs(real(rng));
        c.alpha_scale = std::fabs(real(rng));
        c.eta = std::fabs(real(rng)) * 1e-3;
        c.psi = std::fabs(real(rng)) + 1e-3;
        c.epsilon = real(rng) * 1e-2;
        c.ratio = ratio(rng);
        c.seed = rng();
        c.world0 = real(rng) * 100.0;
        if (trial % 2) c.max_ticks = rng() % 100000 + 1;
        c.record_every = rng() % 50 + 1;
        CHECK(parse_config(serialize_config(c)) == c);
    }
    CHECK(parse_config(serialize_config(SimConfig{})) == SimConfig{});
}
