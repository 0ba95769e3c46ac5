#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "agenttree/config.hpp"
#include "agenttree/metrics.hpp"

namespace agenttree {

inline constexpr int series_schema_version = 1;

/// The 16 data columns in output order.
const std::vector<std::string>& series_columns();

/// CSV: a `# schema_version=N` comment line, the header row, then one row per
/// record. Reals use 17 significant digits. Throws std::ios_base::failure if
/// the sink fails.
void write_series(const std::vector<MetricsRecord>& records, std::ostream& sink);

/// Line-delimited JSON: a header object with the schema version and the
/// config echo, then one object per record keyed by the CSV column names.
void write_series_jsonl(const std::vector<MetricsRecord>& records, const SimConfig& config,
                        std::ostream& sink);

}  // namespace agenttree
