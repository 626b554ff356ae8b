#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "qpsim/config.hpp"
#include "qpsim/observables.hpp"

namespace qpsim {

/// Throws SamplingError naming the first violated criterion:
/// "mode-resolution" (w0 < 8 spacing), "edge-clearance" (half_width < 4 w0),
/// "fresnel-sampling" (real-space kernel forced or required by ExactFresnel
/// while the chirp is under-resolved), "exact-kernel-grid-cap".
void validate_sampling(const RunConfig& cfg);

struct SingleResult {
  VectorField input;
  VectorField output;
  AMBudget budget;
  DeltaPrediction prediction;
  double sigma = 0.0;
  double energy_ratio = 1.0;
  /// Form used by Fresnel kernels (Auto for ThinElement).
  FresnelForm form = FresnelForm::Auto;
  std::vector<std::string> warnings;
};

SingleResult run_single(const RunConfig& cfg);

/// Writes field_in.qpsf, field_out.qpsf and report.txt into dir (created if needed).
void write_single_outputs(const SingleResult& result, const RunConfig& cfg,
                          const std::filesystem::path& dir);

struct ScanRow {
  double value = 0.0;
  double wLz_in = 0.0;
  double wSz_in = 0.0;
  double wLz_out = 0.0;
  double wSz_out = 0.0;
  double dwLz = 0.0;
  double dwSz = 0.0;
  double dwJz = 0.0;
  double dwLz_closed = 0.0;
  double dwSz_closed = 0.0;
  double energy_ratio = 0.0;

  bool operator==(const ScanRow&) const = default;
};

ScanRow make_scan_row(double value, const SingleResult& r);

/// One run per scan value on cfg.jobs workers; rows sorted by value.
/// Throws ConfigError without a scan section. A failing point rethrows its error
/// with the point named in the message.
std::vector<ScanRow> run_scan(const RunConfig& cfg);

/// Header "parameter,value,wLz_in,...,energy_ratio" then one LF-terminated
/// line per row, floats in shortest round-trip form.
std::string scan_csv(const std::string& parameter, const std::vector<ScanRow>& rows);

struct ParsedScan {
  std::string parameter;
  std::vector<ScanRow> rows;
};
/// Inverse of scan_csv. Throws std::invalid_argument on malformed input.
ParsedScan parse_scan_csv(std::string_view text);

/// Shortest decimal text that parses back to exactly x.
std::string format_double(double x);

struct VerifyLine {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  /// "<=", ">=" or "<"; empty when the check could not be evaluated.
  std::string relation = "<=";
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyLine> lines;
  bool passed() const;
};

/// Runs the invariant suites with cfg as the base configuration. Sampling
/// checks come first; when one fails the remaining suites are skipped.
VerifyReport run_verify(const RunConfig& cfg);

/// Tab-separated: name, measured, relation+bound, PASS|FAIL, note. Header line starts with '#'.
std::string format_verify(const VerifyReport& report);

}  // namespace qpsim
