#include "agenttree/series.hpp"

#include <ostream>

#include <json.hpp>

namespace agenttree {

const std::vector<std::string>& series_columns() {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c = {"tick", "t_norm", "world", "delta_world"};
        for (MetricKind k : all_metric_kinds) c.push_back("x_" + std::string(metric_name(k)));
        for (MetricKind k : all_metric_kinds) c.push_back("x_" + std::string(metric_name(k)) + "_pa");
        return c;
    }();
    return columns;
}

namespace {

void check(std::ostream& sink) {
    if (!sink) throw std::ios_base::failure("series sink write failed");
}

}  // namespace

void write_series(const std::vector<MetricsRecord>& records, std::ostream& sink) {
    sink << "# schema_version=" << series_schema_version << '\n';
    const auto& columns = series_columns();
    for (std::size_t c = 0; c < columns.size(); ++c) sink << (c ? "," : "") << columns[c];
    sink << '\n';
    check(sink);
    for (const auto& r : records) {
        sink << r.tick << ',' << format_double(r.t_norm) << ',' << format_double(r.world) << ','
             << format_double(r.delta_world);
        for (double v : r.x) sink << ',' << format_double(v);
        for (double v : r.x_pa) sink << ',' << format_double(v);
        sink << '\n';
        check(sink);
    }
    sink.flush();
    check(sink);
}

void write_series_jsonl(const std::vector<MetricsRecord>& records, const SimConfig& config,
                        std::ostream& sink) {
    nlohmann::ordered_json cfg = {
        {"world_kind", config.world_kind}, {"levels", config.levels},
        {"theta", config.theta},           {"phi", config.phi},
        {"sigma_scale", config.sigma_scale}, {"alpha_scale", config.alpha_scale},
        {"eta", config.eta},               {"psi", config.psi},
        {"epsilon", config.epsilon},       {"ratio", config.ratio},
        {"seed", config.seed},             {"world0", config.world0},
        {"max_ticks", config.effective_max_ticks()}, {"record_every", config.record_every}};
    nlohmann::ordered_json header = {{"schema_version", series_schema_version}, {"config", cfg}};
    sink << header.dump() << '\n';
    check(sink);

    const auto& columns = series_columns();
    for (const auto& r : records) {
        nlohmann::ordered_json row;
        row[columns[0]] = r.tick;
        row[columns[1]] = r.t_norm;
        row[columns[2]] = r.world;
        row[columns[3]] = r.delta_world;
        for (std::size_t k = 0; k < metric_kind_count; ++k) row[columns[4 + k]] = r.x[k];
        for (std::size_t k = 0; k < metric_kind_count; ++k) {
            row[columns[4 + metric_kind_count + k]] = r.x_pa[k];
        }
        sink << row.dump() << '\n';
        check(sink);
    }
    sink.flush();
    check(sink);
}

}  // namespace agenttree
