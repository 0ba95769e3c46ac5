#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "agenttree/experiment.hpp"
#include "agenttree/series.hpp"

using namespace agenttree;

namespace {

SimConfig clear_world(int levels) {
    SimConfig c;
    c.levels = levels;
    c.eta = 0.0;
    return c;
}

std::string csv_of(const SimConfig& c) {
    std::ostringstream out;
    write_series(run(c), out);
    return out.str();
}

}  // namespace

TEST_CASE("single-agent run record at tick 2") {
    SimConfig c = clear_world(1);
    const auto records = run(c);
    REQUIRE(records.size() == c.effective_max_ticks());
    const auto& r = records[2];
    CHECK(r.tick == 2);
    CHECK(r.metric(MetricKind::Perceived) == doctest::Approx(2.8224).epsilon(1e-12));
    CHECK(r.metric(MetricKind::Absolute) == doctest::Approx(6.6564).epsilon(1e-12));
}

TEST_CASE("records follow record_every and always include the final tick") {
    SimConfig c = clear_world(2);
    c.max_ticks = 20;
    c.record_every = 7;
    const auto records = run(c);
    std::vector<std::uint64_t> ticks;
    for (const auto& r : records) ticks.push_back(r.tick);
    CHECK(ticks == std::vector<std::uint64_t>{0, 7, 14, 19});
}

TEST_CASE("default noiseless run converges") {
    const auto records = run(clear_world(4));
    for (double x : records.back().x_pa) CHECK(x < 1e-9);
    CHECK(records.back().delta_world == 0.0);
}

TEST_CASE("determinism and seed sensitivity") {
    SimConfig c;
    c.max_ticks = 200;
    CHECK(csv_of(c) == csv_of(c));
    SimConfig other = c;
    other.seed = 1;
    CHECK(csv_of(c) != csv_of(other));
}

TEST_CASE("invalid config is rejected by run") {
    SimConfig c;
    c.ratio = 1;
    CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("runaway escalation aborts the run") {
    SimConfig c = clear_world(3);
    c.sigma_scale = 1e100;
    c.alpha_scale = 1e100;
    CHECK_THROWS_AS(run(c), RunAborted);
}

TEST_CASE("sweep examples") {
    const SimConfig base;
    const auto eps = sweep(base, "epsilon", {0.0});
    REQUIRE(eps.size() == 1);
    CHECK(eps[0].second.final_delta_world == 0.0);

    const auto lv = sweep(clear_world(4), "levels", {4, 6});
    REQUIRE(lv.size() == 2);
    CHECK(lv[0].first == 4);
    CHECK(lv[1].first == 6);
    CHECK(lv[0].second.convergence_tick.has_value());
    CHECK(lv[1].second.convergence_tick.has_value());

    CHECK_THROWS_AS(sweep(base, "nonsense", {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(base, "world_kind", {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(base, "levels", {2.5}), std::invalid_argument);
    CHECK_THROWS_AS(sweep(base, "levels", {0}), ConfigError);
}

TEST_CASE("theta = 0 makes every judgement equal its own observation") {
    SimConfig c = clear_world(4);
    c.eta = 1e-3;
    c.theta = 0.0;
    Simulation sim(c.simulation_params());
    int judgements = 0;
    sim.set_observer([&](std::uint64_t, AgentIndex i, StepKind k) {
        if (k != StepKind::Judge) return;
        ++judgements;
        CHECK(sim.states()[i].J == sim.states()[i].W);
    });
    for (int t = 0; t < 300; ++t) sim.advance_tick();
    CHECK(judgements > 300);
    const auto results = sweep(SimConfig{}, "theta", {0.0, 0.1});
    CHECK(results.size() == 2);
}

TEST_CASE("sweep equals individual runs") {
    SimConfig base;
    base.max_ticks = 300;
    const std::vector<double> values = {0.0, 0.05, 0.2};
    const auto results = sweep(base, "theta", values);
    REQUIRE(results.size() == values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        SimConfig c = base;
        c.theta = values[k];
        CHECK(results[k].first == values[k]);
        CHECK(results[k].second == summarize(run(c)));
    }
}

TEST_CASE("scenario configs") {
    CHECK(reference_scenarios.size() == 4);
    const auto c = scenario_config(reference_scenarios[3], 6);
    CHECK(c.levels == 6);
    CHECK(c.eta == 1e-3);
    CHECK(c.epsilon == 2e-3);
    CHECK(scenario_config(reference_scenarios[0], 4).eta == 0.0);
}
