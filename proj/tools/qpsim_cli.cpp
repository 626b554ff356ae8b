#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpsim/errors.hpp"
#include "qpsim/experiments.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kInvariantFailure = 1, kConfigError = 2 };

struct Common {
  std::string config;
  std::vector<std::string> overrides;
  std::string out = ".";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "JSON configuration file");
  cmd->add_option("--set", c.overrides, "Override, e.g. medium.d=2.5 (repeatable)")->take_all();
  cmd->add_option("--out", c.out, "Output directory");
}

qpsim::RunConfig load(const Common& c) {
  std::optional<fs::path> path;
  if (!c.config.empty()) path = c.config;
  return qpsim::load_config(path, c.overrides);
}

void write_text(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_single(const Common& c) {
  const qpsim::RunConfig cfg = load(c);
  const qpsim::SingleResult r = qpsim::run_single(cfg);
  qpsim::write_single_outputs(r, cfg, c.out);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "wLz " << r.budget.in.wLz << " -> " << r.budget.out.wLz << "\n"
            << "wSz " << r.budget.in.wSz << " -> " << r.budget.out.wSz << "\n"
            << "dwJz " << r.budget.dwJz << "  energy ratio " << r.energy_ratio << '\n';
  return kOk;
}

int cmd_scan(const Common& c) {
  const qpsim::RunConfig cfg = load(c);
  if (!cfg.scan) throw qpsim::ConfigError("scan: no scan section (set scan.parameter etc.)");
  const auto rows = qpsim::run_scan(cfg);
  const fs::path path = fs::path(c.out) / "scan.csv";
  write_text(path, qpsim::scan_csv(cfg.scan->parameter, rows));
  std::cout << rows.size() << " rows written to " << path.string() << '\n';
  return kOk;
}

int cmd_verify(const Common& c) {
  const qpsim::RunConfig cfg = load(c);
  const qpsim::VerifyReport report = qpsim::run_verify(cfg);
  const std::string text = qpsim::format_verify(report);
  write_text(fs::path(c.out) / "verify.txt", text);
  std::cout << text;
  return report.passed() ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-plate angular momentum simulator"};
  app.require_subcommand(1);
  Common single, scan, verify;
  add_common(app.add_subcommand("single", "Propagate one beam through the plate"), single);
  add_common(app.add_subcommand("scan", "Scan one parameter and write scan.csv"), scan);
  add_common(app.add_subcommand("verify", "Run the invariant suites and write verify.txt"), verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (app.got_subcommand("single")) return cmd_single(single);
    if (app.got_subcommand("scan")) return cmd_scan(scan);
    return cmd_verify(verify);
  } catch (const qpsim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const qpsim::SamplingError& e) {
    std::cerr << "sampling criterion '" << e.criterion() << "' violated: " << e.what() << '\n';
    return kInvariantFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariantFailure;
  }
}
