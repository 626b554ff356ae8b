#include "qpsim/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "parallel.hpp"
#include "qpsim/errors.hpp"
#include "qpsim/field_io.hpp"
#include "qpsim/modes.hpp"

namespace qpsim {

namespace {

const char* const kColumns[] = {"wLz_in", "wSz_in", "wLz_out",     "wSz_out",
                                "dwLz",   "dwSz",   "dwJz",        "dwLz_closed",
                                "dwSz_closed", "energy_ratio"};

double* row_field(ScanRow& r, int i) {
  double* fields[] = {&r.wLz_in, &r.wSz_in, &r.wLz_out,     &r.wSz_out,
                      &r.dwLz,   &r.dwSz,   &r.dwJz,        &r.dwLz_closed,
                      &r.dwSz_closed, &r.energy_ratio};
  return fields[i];
}

std::string sampling_detail(double value, double bound) {
  std::ostringstream s;
  s << value << " vs " << bound;
  return s.str();
}

}  // namespace

void validate_sampling(const RunConfig& cfg) {
  const Grid grid = cfg.grid();
  if (cfg.lg.w0 < 8.0 * grid.spacing()) {
    throw SamplingError("mode-resolution",
                        "w0 below 8 grid spacings: " + sampling_detail(cfg.lg.w0, 8.0 * grid.spacing()));
  }
  if (grid.half_width() < 4.0 * cfg.lg.w0) {
    throw SamplingError("edge-clearance", "half_width below 4 w0: " +
                                              sampling_detail(grid.half_width(), 4.0 * cfg.lg.w0));
  }
  if (cfg.kernel == KernelMode::ThinElement) return;
  const UniaxialMedium m = cfg.medium();
  if (cfg.kernel == KernelMode::ExactFresnel && grid.n() > cfg.propagation.exact_grid_cap) {
    throw SamplingError("exact-kernel-grid-cap",
                        "n = " + std::to_string(grid.n()) + " exceeds the exact-kernel cap " +
                            std::to_string(cfg.propagation.exact_grid_cap));
  }
  const bool real_space = cfg.kernel == KernelMode::ExactFresnel ||
                          cfg.propagation.form == FresnelForm::RealSpace;
  if (real_space) {
    const double s = fresnel_sampling_number(grid, max_chirp(m, cfg.kernel));
    if (s >= 1.0) {
      throw SamplingError("fresnel-sampling",
                          "chirp * spacing * diagonal / pi = " + sampling_detail(s, 1.0));
    }
  }
}

SingleResult run_single(const RunConfig& cfg) {
  validate_sampling(cfg);
  const Grid grid = cfg.grid();
  const UniaxialMedium m = cfg.medium();
  VectorField input = make_input_field(cfg.beam(), grid);
  VectorField output = qplate_propagate(input, cfg.plate, m, cfg.kernel, cfg.propagation);

  SingleResult r{std::move(input), std::move(output), {}, {}, cfg.sigma(), 1.0,
                 FresnelForm::Auto, {}};
  r.budget = am_budget(r.input, r.output);
  r.prediction = predict_delta(r.sigma, cfg.plate, m);
  r.energy_ratio = r.budget.out.energy / r.budget.in.energy;
  if (cfg.kernel != KernelMode::ThinElement) {
    r.form = resolve_fresnel_form(grid, m, cfg.kernel, cfg.propagation);
  }
  r.warnings = propagation_warnings(grid, cfg.plate, m, cfg.kernel);
  return r;
}

void write_single_outputs(const SingleResult& r, const RunConfig& cfg,
                          const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  if (cfg.dump_fields) {
    write_qpsf(dir / "field_in.qpsf", r.input);
    write_qpsf(dir / "field_out.qpsf", r.output);
  }
  std::ofstream out(dir / "report.txt", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / "report.txt").string());
  const auto line = [&](const char* key, double v) { out << key << ' ' << format_double(v) << '\n'; };
  out << "kernel " << to_string(cfg.kernel) << '\n';
  out << "fresnel_form " << to_string(r.form) << '\n';
  line("sigma", r.sigma);
  line("energy_in", r.budget.in.energy);
  line("energy_out", r.budget.out.energy);
  line("energy_ratio", r.energy_ratio);
  line("wLz_in", r.budget.in.wLz);
  line("wSz_in", r.budget.in.wSz);
  line("wJz_in", r.budget.in.wJz);
  line("wLz_out", r.budget.out.wLz);
  line("wSz_out", r.budget.out.wSz);
  line("wJz_out", r.budget.out.wJz);
  line("dwLz", r.budget.dwLz);
  line("dwSz", r.budget.dwSz);
  line("dwJz", r.budget.dwJz);
  line("dwLz_closed", r.prediction.dwLz);
  line("dwSz_closed", r.prediction.dwSz);
  line("bracket", r.prediction.bracket);
  for (const auto& w : r.warnings) out << "warning " << w << '\n';
}

ScanRow make_scan_row(double value, const SingleResult& r) {
  ScanRow row;
  row.value = value;
  row.wLz_in = r.budget.in.wLz;
  row.wSz_in = r.budget.in.wSz;
  row.wLz_out = r.budget.out.wLz;
  row.wSz_out = r.budget.out.wSz;
  row.dwLz = r.budget.dwLz;
  row.dwSz = r.budget.dwSz;
  row.dwJz = r.budget.dwJz;
  row.dwLz_closed = r.prediction.dwLz;
  row.dwSz_closed = r.prediction.dwSz;
  row.energy_ratio = r.energy_ratio;
  return row;
}

std::vector<ScanRow> run_scan(const RunConfig& cfg) {
  if (!cfg.scan) throw ConfigError("scan requested without a scan section");
  const ScanSpec& spec = *cfg.scan;
  const std::vector<double> values = spec.values();
  std::vector<ScanRow> rows(values.size());
  std::vector<std::exception_ptr> errors(values.size());

  detail::parallel_for(static_cast<int>(values.size()), cfg.jobs, [&](int i) {
    try {
      const RunConfig point = with_parameter(cfg, spec.parameter, values[i]);
      rows[i] = make_scan_row(values[i], run_single(point));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!errors[i]) continue;
    const std::string where = "scan point " + spec.parameter + "=" + format_double(values[i]) + ": ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const SamplingError& e) {
      throw SamplingError(e.criterion(), where + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.value < b.value; });
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string scan_csv(const std::string& parameter, const std::vector<ScanRow>& rows) {
  std::string out = "parameter,value";
  for (const char* c : kColumns) {
    out += ',';
    out += c;
  }
  out += '\n';
  for (ScanRow row : rows) {
    out += parameter;
    out += ',';
    out += format_double(row.value);
    for (int i = 0; i < 10; ++i) {
      out += ',';
      out += format_double(*row_field(row, i));
    }
    out += '\n';
  }
  return out;
}

ParsedScan parse_scan_csv(std::string_view text) {
  const auto split = [](std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  const auto parse = [](std::string_view cell) {
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
      throw std::invalid_argument("scan csv: bad number '" + std::string(cell) + "'");
    }
    return v;
  };

  ParsedScan parsed;
  bool header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != 12) throw std::invalid_argument("scan csv: expected 12 columns");
    if (header) {
      if (cells[0] != "parameter" || cells[1] != "value") {
        throw std::invalid_argument("scan csv: missing header");
      }
      for (int i = 0; i < 10; ++i) {
        if (cells[i + 2] != kColumns[i]) throw std::invalid_argument("scan csv: unexpected column");
      }
      header = false;
      continue;
    }
    if (parsed.parameter.empty()) {
      parsed.parameter = std::string(cells[0]);
    } else if (cells[0] != parsed.parameter) {
      throw std::invalid_argument("scan csv: mixed parameter names");
    }
    ScanRow row;
    row.value = parse(cells[1]);
    for (int i = 0; i < 10; ++i) *row_field(row, i) = parse(cells[i + 2]);
    parsed.rows.push_back(row);
  }
  if (header) throw std::invalid_argument("scan csv: empty input");
  return parsed;
}

}  // namespace qpsim
