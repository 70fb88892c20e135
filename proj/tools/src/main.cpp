#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gpc/field_io.hpp"
#include "gpc_cli/config.hpp"
#include "gpc_cli/experiments.hpp"
#include "gpc_cli/report.hpp"

int main(int argc, char** argv) {
  using namespace gpc::cli;
  ExperimentConfig config;
  try {
    config = parse_args(std::vector<std::string>(argv + 1, argv + argc));
  } catch (const HelpRequested& h) {
    std::cout << h.what();
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  try {
    const ExperimentReport report = run(config);
    if (config.out_path.empty()) {
      write_report(std::cout, report, config.format);
    } else {
      std::ofstream out(config.out_path);
      if (!out) throw std::runtime_error("cannot open " + config.out_path);
      write_report(out, report, config.format);
    }
    if (!config.dump_path.empty()) {
      if (!report.field) throw std::runtime_error("experiment produces no field to dump");
      gpc::save_field(config.dump_path, *report.field);
    }
    std::ostream& echo = config.out_path.empty() ? std::cerr : std::cout;
    write_summary(echo, report);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
