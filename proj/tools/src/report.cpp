#include "gpc_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gpc::cli {

void ExperimentReport::add_row(Json row) {
  if (!row.is_object()) throw std::logic_error("report row must be an object");
  if (columns.empty() && rows.empty()) {
    for (const auto& item : row.items()) columns.push_back(item.key());
  } else {
    std::size_t k = 0;
    for (const auto& item : row.items()) {
      if (k >= columns.size() || item.key() != columns[k]) throw std::logic_error("report row keys do not match columns");
      ++k;
    }
    if (k != columns.size()) throw std::logic_error("report row is missing columns");
  }
  rows.push_back(std::move(row));
}

Json config_json(const ExperimentConfig& config) {
  const ExperimentConfig c = resolved(config);
  Json j = Json::object();
  j["experiment"] = to_string(c.experiment);
  j["dim"] = *c.dim;
  j["grid_n"] = *c.grid_n;
  j["half_width"] = c.half_width;
  j["eps_list"] = c.eps_list;
  j["mass"] = c.mass;
  j["delta"] = c.delta;
  j["n_levels"] = c.n_levels;
  j["seed"] = c.seed;
  j["out_path"] = c.out_path;
  j["format"] = to_string(c.format);
  return j;
}

Json to_json(const ExperimentReport& r) {
  Json j = Json::object();
  j["config"] = r.config;
  j["rows"] = Json::array();
  for (const Json& row : r.rows) j["rows"].push_back(row);
  j["summary"] = r.summary;
  j["provenance"] = r.provenance;
  return j;
}

ExperimentReport report_from_json(const Json& j) {
  ExperimentReport r;
  r.config = j.at("config");
  for (const Json& row : j.at("rows")) r.add_row(row);
  r.summary = j.at("summary");
  r.provenance = j.at("provenance");
  return r;
}

void write_json(std::ostream& out, const ExperimentReport& r) { out << to_json(r).dump(2) << '\n'; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentReport& r) {
  for (std::size_t k = 0; k < r.columns.size(); ++k) out << (k ? "," : "") << r.columns[k];
  out << '\n';
  for (const Json& row : r.rows) {
    std::size_t k = 0;
    for (const auto& item : row.items()) out << (k++ ? "," : "") << csv_cell(item.value());
    out << '\n';
  }
}

void write_report(std::ostream& out, const ExperimentReport& r, Format f) {
  if (f == Format::json)
    write_json(out, r);
  else
    write_csv(out, r);
}

void write_summary(std::ostream& out, const ExperimentReport& r) {
  for (const auto& item : r.summary.items()) out << item.key() << '=' << csv_cell(item.value()) << '\n';
}

}  // namespace gpc::cli
