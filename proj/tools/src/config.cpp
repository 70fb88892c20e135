#include "gpc_cli/config.hpp"

#include <algorithm>
#include <cmath>

#include "CLI11.hpp"

namespace gpc::cli {

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 24;

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"isoperimetry", "symmetrize", "relax-demo",     "duality-gap",
                                              "gamma-sweep",  "curvature",  "bernstein-probe"};
  return names;
}

std::string to_string(Experiment e) { return experiment_names()[static_cast<std::size_t>(e)]; }

Experiment experiment_from_string(const std::string& name) {
  const auto& names = experiment_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ConfigError("experiment", "unknown experiment '" + name + "'");
  return static_cast<Experiment>(it - names.begin());
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

int default_dim(Experiment e) {
  switch (e) {
    case Experiment::symmetrize:
    case Experiment::bernstein_probe:
      return 2;
    case Experiment::relax_demo:
      return 3;
    default:
      return 1;
  }
}

int default_grid_n(Experiment e) {
  switch (e) {
    case Experiment::symmetrize:
    case Experiment::bernstein_probe:
      return 256;
    case Experiment::relax_demo:
      return 160;
    case Experiment::curvature:
      return 256;
    default:
      return 2048;
  }
}

ExperimentConfig resolved(const ExperimentConfig& c) {
  ExperimentConfig out = c;
  if (!out.dim) out.dim = default_dim(c.experiment);
  if (!out.grid_n) out.grid_n = default_grid_n(c.experiment);
  return out;
}

void validate(const ExperimentConfig& config) {
  const ExperimentConfig c = resolved(config);
  const int dim = *c.dim;
  const int n = *c.grid_n;
  if (dim < 1 || dim > 3) throw ConfigError("dim", "must be 1, 2 or 3");
  if ((c.experiment == Experiment::symmetrize || c.experiment == Experiment::bernstein_probe) && dim < 2)
    throw ConfigError("dim", "experiment " + to_string(c.experiment) + " needs dim >= 2");
  if (n < 16) throw ConfigError("grid-n", "must be >= 16");
  if (std::pow(static_cast<double>(n), dim) > static_cast<double>(kMaxNodes))
    throw ConfigError("grid-n", "grid-n^dim exceeds 2^24 nodes");
  if (!(c.half_width >= 4.0) || !std::isfinite(c.half_width)) throw ConfigError("half-width", "must be >= 4");
  if (c.eps_list.empty()) throw ConfigError("eps-list", "must not be empty");
  for (std::size_t i = 0; i < c.eps_list.size(); ++i) {
    if (!(c.eps_list[i] > 0.0) || !std::isfinite(c.eps_list[i]))
      throw ConfigError("eps-list", "values must be positive");
    if (i > 0 && !(c.eps_list[i] < c.eps_list[i - 1]))
      throw ConfigError("eps-list", "values must be strictly decreasing");
  }
  if (!(c.mass > 0.0 && c.mass < 1.0)) throw ConfigError("mass", "must be in (0,1)");
  if (!(c.delta > 0.0 && c.delta < 0.25)) throw ConfigError("delta", "must be in (0, 1/4)");
  if (c.n_levels < 32) throw ConfigError("levels", "must be >= 32");
}

ExperimentConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Gaussian perimeter calculus experiments", "gpc"};
  ExperimentConfig c;
  std::string experiment;
  std::string format = "csv";
  int dim = 0;
  int grid_n = 0;

  app.add_option("--experiment", experiment, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(experiment_names()));
  auto* dim_opt = app.add_option("--dim", dim, "Dimension m of the cylindrical section (1-3)");
  auto* n_opt = app.add_option("--grid-n", grid_n, "Grid points per axis");
  app.add_option("--half-width", c.half_width, "Truncation half-width L")->capture_default_str();
  app.add_option("--eps-list", c.eps_list, "Comma-separated decreasing eps values")->delimiter(',');
  app.add_option("--mass", c.mass, "Gaussian volume constraint")->capture_default_str();
  app.add_option("--delta", c.delta, "Profile truncation delta")->capture_default_str();
  app.add_option("--levels", c.n_levels, "Number of levels for coarea and symmetrization")->capture_default_str();
  app.add_option("--seed", c.seed, "Seed of the random corpora")->capture_default_str();
  app.add_option("--out", c.out_path, "Report path (default: standard output)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--dump", c.dump_path, "Write the experiment's final field to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    std::string field;
    const std::string what = e.what();
    for (const std::string flag : {"experiment", "dim", "grid-n", "half-width", "eps-list", "mass", "delta",
                                   "levels", "seed", "out", "format", "dump"}) {
      if (what.find("--" + flag) != std::string::npos) {
        field = flag;
        break;
      }
    }
    throw ConfigError(field, what);
  }

  c.experiment = experiment_from_string(experiment);
  c.format = format == "json" ? Format::json : Format::csv;
  if (dim_opt->count() > 0) c.dim = dim;
  if (n_opt->count() > 0) c.grid_n = grid_n;
  validate(c);
  return c;
}

}  // namespace gpc::cli
