#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include <json.hpp>

#include "agenttree/experiment.hpp"
#include "agenttree/series.hpp"

using namespace agenttree;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) out.push_back(cell);
    return out;
}

}  // namespace

TEST_CASE("column schema") {
    const auto& cols = series_columns();
    REQUIRE(cols.size() == 16);
    CHECK(cols[0] == "tick");
    CHECK(cols[1] == "t_norm");
    CHECK(cols[2] == "world");
    CHECK(cols[3] == "delta_world");
    CHECK(cols[4] == "x_naive");
    CHECK(cols[9] == "x_demo");
    CHECK(cols[10] == "x_naive_pa");
    CHECK(cols[15] == "x_demo_pa");
}

TEST_CASE("empty series is header only") {
    std::ostringstream out;
    write_series({}, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "# schema_version=1");
    CHECK(lines[1] ==
          "tick,t_norm,world,delta_world,x_naive,x_abs,x_perc,x_boot,x_auth,x_demo,"
          "x_naive_pa,x_abs_pa,x_perc_pa,x_boot_pa,x_auth_pa,x_demo_pa");
}

TEST_CASE("one record round-trips through 17-digit text") {
    MetricsRecord r;
    r.tick = 27;
    r.t_norm = 1.0;
    r.world = 2.9996000000000001;
    r.delta_world = -4.0000000000000002e-4;
    for (std::size_t k = 0; k < metric_kind_count; ++k) {
        r.x[k] = 0.1 * static_cast<double>(k + 1) / 3.0;
        r.x_pa[k] = r.x[k] / 15.0;
    }
    std::ostringstream out;
    write_series({r}, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 3);
    const auto cells = split(lines[2]);
    REQUIRE(cells.size() == 16);
    CHECK(cells[0] == "27");
    CHECK(std::stod(cells[2]) == r.world);
    CHECK(std::stod(cells[3]) == r.delta_world);
    for (std::size_t k = 0; k < metric_kind_count; ++k) {
        CHECK(std::stod(cells[4 + k]) == r.x[k]);
        CHECK(std::stod(cells[10 + k]) == r.x_pa[k]);
    }
}

TEST_CASE("failing sink raises an I/O error") {
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    CHECK_THROWS_AS(write_series({}, out), std::ios_base::failure);
}

TEST_CASE("jsonl variant carries schema version and config echo") {
    SimConfig c;
    c.levels = 2;
    c.max_ticks = 6;
    const auto records = run(c);
    std::ostringstream out;
    write_series_jsonl(records, c, out);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == records.size() + 1);
    const auto header = nlohmann::json::parse(lines[0]);
    CHECK(header["schema_version"] == series_schema_version);
    CHECK(header["config"]["levels"] == 2);
    CHECK(header["config"]["max_ticks"] == 6);
    const auto row = nlohmann::json::parse(lines.back());
    CHECK(row["tick"] == 5);
    CHECK(row["x_abs_pa"].get<double>() == records.back().per_agent(MetricKind::Absolute));
}
