#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpc/field.hpp"
#include "gpc_cli/config.hpp"
#include "json.hpp"

namespace gpc::cli {

using Json = nlohmann::ordered_json;

struct ExperimentReport {
  Json config = Json::object();
  std::vector<std::string> columns;
  std::vector<Json> rows;  ///< objects keyed by `columns`, in column order
  Json summary = Json::object();
  Json provenance = Json::object();
  /// Field written by --dump; not part of the serialized report.
  std::optional<ScalarField> field;

  /// Appends a row; the first row fixes the column set and later rows must
  /// match it key for key.
  void add_row(Json row);
};

Json config_json(const ExperimentConfig& c);

Json to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const Json& j);

void write_json(std::ostream& out, const ExperimentReport& r);
/// Header line, then one line per row. Doubles use 17 significant digits.
void write_csv(std::ostream& out, const ExperimentReport& r);
void write_report(std::ostream& out, const ExperimentReport& r, Format f);

/// "key=value" lines for the summary.
void write_summary(std::ostream& out, const ExperimentReport& r);

std::string format_double(double v);

}  // namespace gpc::cli
