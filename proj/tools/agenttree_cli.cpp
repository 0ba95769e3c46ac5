// Command-line front end: run, sweep, scenarios.
//
// Exit codes: 0 success, 1 validation/usage/IO error, 2 run aborted on a
// non-finite state.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "agenttree/config.hpp"
#include "agenttree/experiment.hpp"
#include "agenttree/series.hpp"

namespace fs = std::filesystem;
using namespace agenttree;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_aborted = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SimConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
    std::vector<std::string> warnings;
    SimConfig config = path.empty() ? SimConfig{} : parse_config(read_file(path));
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ConfigError(kv, "--set expects key=value");
        set_config_value(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    validate_config(config, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return config;
}

void write_csv(const std::vector<MetricsRecord>& records, const fs::path& path) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    write_series(records, out);
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        SimConfig scratch;
        // Reuse the config number parser for consistent error messages.
        set_config_value(scratch, "world0", item);
        values.push_back(scratch.world0);
    }
    if (values.empty()) throw ConfigError("values", "no values given");
    return values;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical agent-tree decision simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> overrides;
    auto* run_cmd = app.add_subcommand("run", "Run one simulation and write its metric series");
    run_cmd->add_option("--config", config_path, "Config file (key = value)");
    run_cmd->add_option("--out", out_path, "Output path (default: stdout)");
    run_cmd->add_option("--set", overrides, "Override a config key: key=value");
    run_cmd->add_option("--format", format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));

    std::string sweep_config;
    std::string axis;
    std::string values_text;
    std::string out_dir;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run one simulation per axis value");
    sweep_cmd->add_option("--config", sweep_config, "Base config file");
    sweep_cmd->add_option("--axis", axis, "Config key to vary")->required();
    sweep_cmd->add_option("--values", values_text, "Comma-separated values")->required();
    sweep_cmd->add_option("--out-dir", out_dir, "Also write one CSV per value here");

    std::string scenarios_dir;
    auto* scen_cmd = app.add_subcommand("scenarios", "Run the four reference scenarios at 4 and 6 levels");
    scen_cmd->add_option("--out-dir", scenarios_dir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (*run_cmd) {
            const SimConfig config = load_config(config_path, overrides);
            const auto records = run(config);
            std::ofstream file;
            if (!out_path.empty()) {
                const fs::path p(out_path);
                if (p.has_parent_path()) fs::create_directories(p.parent_path());
                file.open(p, std::ios::binary);
                if (!file) throw std::ios_base::failure("cannot open '" + out_path + "'");
            }
            std::ostream& sink = out_path.empty() ? std::cout : file;
            if (format == "jsonl") write_series_jsonl(records, config, sink);
            else write_series(records, sink);
        } else if (*sweep_cmd) {
            const SimConfig base = load_config(sweep_config, {});
            if (!is_sweep_axis(axis)) throw ConfigError(axis, "unknown sweep axis");
            const auto values = parse_values(values_text);
            const auto results = sweep(base, axis, values);
            std::cout << axis;
            for (MetricKind k : all_metric_kinds) std::cout << ",final_x_" << metric_name(k) << "_pa";
            std::cout << ",convergence_tick,final_delta_world\n";
            for (const auto& [v, s] : results) {
                std::cout << format_double(v);
                for (double x : s.final_per_agent) std::cout << ',' << format_double(x);
                std::cout << ',' << (s.convergence_tick ? std::to_string(*s.convergence_tick) : "")
                          << ',' << format_double(s.final_delta_world) << '\n';
            }
            if (!out_dir.empty()) {
                for (double v : values) {
                    write_csv(run(with_axis_value(base, axis, v)),
                              fs::path(out_dir) / (axis + "_" + format_double(v) + ".csv"));
                }
            }
        } else if (*scen_cmd) {
            for (const auto& scenario : reference_scenarios) {
                for (int levels : scenario_levels) {
                    const fs::path p = fs::path(scenarios_dir) /
                                       (std::string(scenario.name) + "_L" + std::to_string(levels) + ".csv");
                    write_csv(run(scenario_config(scenario, levels)), p);
                    std::cerr << "wrote " << p.string() << '\n';
                }
            }
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_validation;
    } catch (const RunAborted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_aborted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_validation;
    }
    return exit_ok;
}
