#include "qpsim/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qpsim/errors.hpp"

namespace qpsim {

using nlohmann::json;

namespace {

const std::set<std::string> kScanParameters = {"d",  "q", "sigma", "alpha0", "ell",
                                               "p", "w0", "n_o",   "n_e"};

// Known keys and whether they hold a nested object.
const std::map<std::string, std::set<std::string>> kSchema = {
    {"grid", {"n", "half_width"}},
    {"beam", {"ell", "p", "w0", "polarization"}},
    {"medium", {"n_o", "n_e", "d"}},
    {"plate", {"q", "alpha0"}},
    {"fresnel", {"form", "normalization", "exact_grid_cap"}},
    {"scan", {"parameter", "start", "stop", "steps"}},
    {"kernel", {}},
    {"jobs", {}},
    {"dump_fields", {}},
    {"tolerances", {}},
};

void check_keys(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    auto it = kSchema.find(key);
    if (it == kSchema.end()) throw ConfigError("config: unknown key '" + key + "'");
    if (it->second.empty()) continue;
    if (!value.is_object()) throw ConfigError("config: '" + key + "' must be an object");
    for (const auto& [sub, unused] : value.items()) {
      (void)unused;
      if (!it->second.contains(sub)) {
        throw ConfigError("config: unknown key '" + key + "." + sub + "'");
      }
    }
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override '" + assignment + "' is not of the form key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = raw;

  json* node = &doc;
  std::stringstream parts(key);
  std::string part;
  std::vector<std::string> path;
  while (std::getline(parts, part, '.')) path.push_back(part);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    json& child = (*node)[path[i]];
    if (child.is_null()) child = json::object();
    node = &child;
  }
  (*node)[path.back()] = value;
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

JonesVector parse_polarization(const json& v) {
  if (v.is_number()) return JonesVector::with_spin(v.get<double>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "x") return JonesVector::linear_x();
    if (s == "y") return JonesVector::linear_y();
    if (s == "lcp") return JonesVector::left_circular();
    if (s == "rcp") return JonesVector::right_circular();
    if (s == "diagonal") return JonesVector::normalized(1.0, 1.0);
    if (s == "antidiagonal") return JonesVector::normalized(1.0, -1.0);
    throw ConfigError("config: unknown polarization '" + s + "'");
  }
  if (v.is_array() && v.size() == 4) {
    const auto c = v.get<std::vector<double>>();
    return JonesVector::normalized(cplx(c[0], c[1]), cplx(c[2], c[3]));
  }
  throw ConfigError(
      "config: polarization must be a name, a spin degree, or [a_re, a_im, b_re, b_im]");
}

KernelMode parse_kernel(const std::string& s) {
  if (s == "thin") return KernelMode::ThinElement;
  if (s == "approx") return KernelMode::ApproxFresnel;
  if (s == "exact") return KernelMode::ExactFresnel;
  throw ConfigError("config: kernel must be thin, approx or exact, got '" + s + "'");
}

FresnelForm parse_form(const std::string& s) {
  if (s == "auto") return FresnelForm::Auto;
  if (s == "real-space") return FresnelForm::RealSpace;
  if (s == "transfer-function") return FresnelForm::TransferFunction;
  throw ConfigError("config: fresnel.form must be auto, real-space or transfer-function");
}

KernelNormalization parse_normalization(const std::string& s) {
  if (s == "per-kernel") return KernelNormalization::PerKernel;
  if (s == "shared") return KernelNormalization::SharedPrefactor;
  throw ConfigError("config: fresnel.normalization must be per-kernel or shared");
}

RunConfig from_json(const json& doc) {
  check_keys(doc);
  RunConfig cfg;
  const json empty = json::object();
  const json& grid = doc.value("grid", empty);
  const json& beam = doc.value("beam", empty);
  const json& medium = doc.value("medium", empty);
  const json& plate = doc.value("plate", empty);
  const json& fresnel = doc.value("fresnel", empty);

  cfg.n = get_or(grid, "n", cfg.n);
  if (grid.contains("half_width") && !grid.at("half_width").is_null()) {
    const json& hw = grid.at("half_width");
    if (hw.is_string() && hw.get<std::string>() == "auto") {
      cfg.half_width.reset();
    } else if (hw.is_number()) {
      cfg.half_width = hw.get<double>();
    } else {
      throw ConfigError("config: grid.half_width must be a number or \"auto\"");
    }
  }

  cfg.lg.ell = get_or(beam, "ell", cfg.lg.ell);
  cfg.lg.p = get_or(beam, "p", cfg.lg.p);
  cfg.lg.w0 = get_or(beam, "w0", cfg.lg.w0);
  if (beam.contains("polarization")) cfg.pol = parse_polarization(beam.at("polarization"));

  cfg.n_o = get_or(medium, "n_o", cfg.n_o);
  cfg.n_e = get_or(medium, "n_e", cfg.n_e);
  cfg.d = get_or(medium, "d", cfg.d);

  cfg.plate.q = get_or(plate, "q", cfg.plate.q);
  cfg.plate.alpha0 = get_or(plate, "alpha0", cfg.plate.alpha0);

  cfg.kernel = parse_kernel(get_or<std::string>(doc, "kernel", "approx"));
  cfg.propagation.form = parse_form(get_or<std::string>(fresnel, "form", "auto"));
  cfg.propagation.normalization =
      parse_normalization(get_or<std::string>(fresnel, "normalization", "per-kernel"));
  cfg.propagation.exact_grid_cap =
      get_or(fresnel, "exact_grid_cap", cfg.propagation.exact_grid_cap);

  if (doc.contains("scan") && !doc.at("scan").is_null()) {
    const json& scan = doc.at("scan");
    ScanSpec s;
    s.parameter = get_or(scan, "parameter", s.parameter);
    s.start = get_or(scan, "start", s.start);
    s.stop = get_or(scan, "stop", s.stop);
    s.steps = get_or(scan, "steps", s.steps);
    if (!kScanParameters.contains(s.parameter)) {
      throw ConfigError("config: scan.parameter '" + s.parameter + "' is not scannable");
    }
    if (s.steps < 2) throw ConfigError("config: scan.steps must be at least 2");
    cfg.scan = s;
  }

  cfg.jobs = get_or(doc, "jobs", cfg.jobs);
  if (cfg.jobs < 1) throw ConfigError("config: jobs must be at least 1");
  cfg.dump_fields = get_or(doc, "dump_fields", cfg.dump_fields);

  cfg.tolerances = default_tolerances();
  if (doc.contains("tolerances")) {
    const json& tol = doc.at("tolerances");
    if (!tol.is_object()) throw ConfigError("config: tolerances must be an object");
    for (const auto& [name, value] : tol.items()) {
      if (!cfg.tolerances.contains(name)) {
        throw ConfigError("config: unknown tolerance '" + name + "'");
      }
      if (!value.is_number()) throw ConfigError("config: tolerance '" + name + "' must be a number");
      cfg.tolerances[name] = value.get<double>();
    }
  }

  // Component invariants.
  try {
    (void)cfg.grid();
    (void)cfg.medium();
    cfg.lg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

}  // namespace

std::vector<double> ScanSpec::values() const {
  std::vector<double> v(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    v[i] = i == steps - 1 ? stop : start + (stop - start) * i / (steps - 1);
  }
  return v;
}

double RunConfig::effective_half_width() const {
  return half_width.value_or(4.0 * lg.w0 + 64.0);
}

Grid RunConfig::grid() const { return Grid::make(n, effective_half_width()); }

UniaxialMedium RunConfig::medium() const { return {n_o, n_e, d}; }

double RunConfig::tolerance(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  const auto defaults = default_tolerances();
  if (auto it = defaults.find(name); it != defaults.end()) return it->second;
  throw ConfigError("unknown tolerance '" + name + "'");
}

std::map<std::string, double> default_tolerances() {
  return {
      {"parseval", 1e-12},          {"derivative_conjugation", 1e-12},
      {"quad_linearity", 1e-12},    {"input_energy", 1e-6},
      {"orbital_charge", 1e-4},     {"input_spin", 1e-6},
      {"unitarity", 1e-10},         {"composition", 1e-10},
      {"rotation", 1e-6},          {"energy_thin", 1e-12},
      {"energy", 1e-3},             {"linearity", 1e-10},
      {"antisymmetry", 2e-3},       {"thin_consistency", 1e-2},
      {"steepening", 1e-6},         {"exact_oracle", 1e-3},
      {"form_agreement", 1e-6},     {"spin_methods", 1e-3},
      {"conservation", 2e-3},       {"ratio", 1e-2},
      {"r_squared", 0.999},         {"proportionality", 1e-2},
      {"mode_independence", 1e-2},
  };
}

RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides) {
  json doc;
  const std::string text(json_text);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    doc = json::object();
  } else {
    doc = json::parse(text, nullptr, /*allow_exceptions=*/false, /*ignore_comments=*/true);
    if (doc.is_discarded()) throw ConfigError("config: not valid JSON");
  }
  for (const auto& o : overrides) apply_override(doc, o);
  return from_json(doc);
}

RunConfig load_config(const std::optional<std::filesystem::path>& path,
                      const std::vector<std::string>& overrides) {
  std::string text;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw ConfigError("config: cannot read " + path->string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return parse_config(text, overrides);
}

std::string to_string(KernelMode mode) {
  switch (mode) {
    case KernelMode::ThinElement: return "thin";
    case KernelMode::ApproxFresnel: return "approx";
    case KernelMode::ExactFresnel: return "exact";
  }
  return "?";
}

std::string to_string(FresnelForm form) {
  switch (form) {
    case FresnelForm::Auto: return "auto";
    case FresnelForm::RealSpace: return "real-space";
    case FresnelForm::TransferFunction: return "transfer-function";
  }
  return "?";
}

std::string config_to_json(const RunConfig& cfg) {
  json doc;
  doc["grid"]["n"] = cfg.n;
  if (cfg.half_width) {
    doc["grid"]["half_width"] = *cfg.half_width;
  } else {
    doc["grid"]["half_width"] = "auto";
  }
  doc["beam"] = {{"ell", cfg.lg.ell},
                 {"p", cfg.lg.p},
                 {"w0", cfg.lg.w0},
                 {"polarization",
                  {cfg.pol.a().real(), cfg.pol.a().imag(), cfg.pol.b().real(), cfg.pol.b().imag()}}};
  doc["medium"] = {{"n_o", cfg.n_o}, {"n_e", cfg.n_e}, {"d", cfg.d}};
  doc["plate"] = {{"q", cfg.plate.q}, {"alpha0", cfg.plate.alpha0}};
  doc["kernel"] = to_string(cfg.kernel);
  doc["fresnel"] = {
      {"form", to_string(cfg.propagation.form)},
      {"normalization", cfg.propagation.normalization == KernelNormalization::PerKernel
                            ? "per-kernel"
                            : "shared"},
      {"exact_grid_cap", cfg.propagation.exact_grid_cap}};
  if (cfg.scan) {
    doc["scan"] = {{"parameter", cfg.scan->parameter},
                   {"start", cfg.scan->start},
                   {"stop", cfg.scan->stop},
                   {"steps", cfg.scan->steps}};
  }
  doc["jobs"] = cfg.jobs;
  doc["dump_fields"] = cfg.dump_fields;
  doc["tolerances"] = cfg.tolerances;
  return doc.dump(2);
}

RunConfig with_parameter(const RunConfig& cfg, const std::string& name, double value) {
  RunConfig out = cfg;
  if (name == "d") {
    out.d = value;
  } else if (name == "q") {
    out.plate.q = value;
  } else if (name == "sigma") {
    out.pol = JonesVector::with_spin(std::clamp(value, -1.0, 1.0));
  } else if (name == "alpha0") {
    out.plate.alpha0 = value;
  } else if (name == "ell") {
    out.lg.ell = static_cast<int>(std::lround(value));
  } else if (name == "p") {
    out.lg.p = static_cast<int>(std::lround(value));
  } else if (name == "w0") {
    out.lg.w0 = value;
  } else if (name == "n_o") {
    out.n_o = value;
  } else if (name == "n_e") {
    out.n_e = value;
  } else {
    throw ConfigError("unknown scan parameter '" + name + "'");
  }
  return out;
}

}  // namespace qpsim
