#pragma once

#include "gpc_cli/config.hpp"
#include "gpc_cli/report.hpp"

namespace gpc::cli {

/// Runs one experiment. Deterministic for a fixed config apart from
/// provenance.duration_seconds. Validates the config first (ConfigError);
/// other exceptions signal computation failures.
ExperimentReport run(const ExperimentConfig& config);

}  // namespace gpc::cli
