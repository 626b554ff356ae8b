#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpsim/grid.hpp"
#include "qpsim/modes.hpp"
#include "qpsim/media.hpp"
#include "qpsim/qplate.hpp"

namespace qpsim {

struct ScanSpec {
  /// One of: d, q, sigma, alpha0, ell, p, w0, n_o, n_e.
  std::string parameter = "d";
  double start = 0.5;
  double stop = 10.0;
  int steps = 40;

  std::vector<double> values() const;
};

/// Everything a run needs. Every field has a default, so an empty config
/// document is valid. Lengths are in vacuum wavelengths.
struct RunConfig {
  int n = 512;
  /// Unset means 4 w0 + 64.
  std::optional<double> half_width;

  LGIndex lg{0, 0, 100.0};
  JonesVector pol = JonesVector::left_circular();

  double n_o = 1.5;
  double n_e = 1.7;
  double d = 2.5;

  QPlateSpec plate{0.5, 0.0};
  KernelMode kernel = KernelMode::ApproxFresnel;
  PropagationOptions propagation;

  std::optional<ScanSpec> scan;
  int jobs = 1;
  bool dump_fields = true;

  /// Named bounds used by run_verify; see default_tolerances().
  std::map<std::string, double> tolerances;

  double effective_half_width() const;
  Grid grid() const;
  UniaxialMedium medium() const;
  BeamSpec beam() const { return {lg, pol}; }
  double sigma() const { return spin_degree(pol); }
  double tolerance(const std::string& name) const;
};

std::map<std::string, double> default_tolerances();

/// Parses a JSON document, then applies "dotted.key=value" overrides (value
/// parsed as JSON when possible, else taken as a string). Unknown keys and
/// invalid values raise ConfigError.
RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides = {});
RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const std::vector<std::string>& overrides = {});

/// Canonical JSON rendering (round-trips through parse_config).
std::string config_to_json(const RunConfig& cfg);

/// Copy of cfg with one scan parameter replaced. Throws ConfigError for an
/// unknown name.
RunConfig with_parameter(const RunConfig& cfg, const std::string& name, double value);

std::string to_string(KernelMode mode);
std::string to_string(FresnelForm form);

}  // namespace qpsim
