#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpc::cli {

enum class Experiment { isoperimetry, symmetrize, relax_demo, duality_gap, gamma_sweep, curvature, bernstein_probe };
enum class Format { csv, json };

const std::vector<std::string>& experiment_names();
std::string to_string(Experiment e);
Experiment experiment_from_string(const std::string& name);
std::string to_string(Format f);

struct ExperimentConfig {
  Experiment experiment = Experiment::isoperimetry;
  // Unset dim / grid_n resolve to per-experiment defaults (1 and 2048 unless
  // the experiment needs more dimensions).
  std::optional<int> dim;
  std::optional<int> grid_n;
  double half_width = 6.0;
  std::vector<double> eps_list{0.4, 0.2, 0.1, 0.05};
  double mass = 0.5;
  double delta = 0.02;
  int n_levels = 64;
  std::uint64_t seed = 0;
  std::string out_path;
  Format format = Format::csv;
  std::string dump_path;
};

/// Invalid configuration; `field()` names the offending flag.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Thrown by parse_args for --help; what() is the usage text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv (without the program name). Throws ConfigError on unknown
/// flags, malformed numbers, a missing --experiment or failed validation.
ExperimentConfig parse_args(const std::vector<std::string>& args);

int default_dim(Experiment e);
int default_grid_n(Experiment e);
/// Copy of `c` with dim and grid_n filled in.
ExperimentConfig resolved(const ExperimentConfig& c);

/// Throws ConfigError for out-of-range fields.
void validate(const ExperimentConfig& c);

}  // namespace gpc::cli
