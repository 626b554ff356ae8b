#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qpsim/errors.hpp"
#include "qpsim/experiments.hpp"
#include "qpsim/field_io.hpp"

namespace py = pybind11;
using namespace qpsim;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

CArray to_array(std::span<const cplx> values, int n) {
  CArray out({n, n});
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

std::vector<cplx> from_array(const CArray& a, int n) {
  if (a.ndim() != 2 || a.shape(0) != n || a.shape(1) != n) {
    throw std::invalid_argument("expected a square (n, n) complex array");
  }
  return {a.data(), a.data() + a.size()};
}

VectorField to_field(const CArray& vx, const CArray& vy, double half_width) {
  if (vx.ndim() != 2) throw std::invalid_argument("expected a square (n, n) complex array");
  const int n = static_cast<int>(vx.shape(0));
  return VectorField(Grid::make(n, half_width), from_array(vx, n), from_array(vy, n));
}

py::tuple to_tuple(const VectorField& f) {
  return py::make_tuple(to_array(f.vx(), f.grid().n()), to_array(f.vy(), f.grid().n()));
}

py::dict report_dict(const AMReport& r) {
  py::dict d;
  d["wLz"] = r.wLz;
  d["wSz"] = r.wSz;
  d["wJz"] = r.wJz;
  d["energy"] = r.energy;
  return d;
}

py::dict prediction_dict(const DeltaPrediction& p) {
  py::dict d;
  d["dwLz"] = p.dwLz;
  d["dwSz"] = p.dwSz;
  d["dwJz"] = p.dwJz;
  d["bracket"] = p.bracket;
  return d;
}

KernelMode parse_kernel(const std::string& name) {
  if (name == "thin") return KernelMode::ThinElement;
  if (name == "approx") return KernelMode::ApproxFresnel;
  if (name == "exact") return KernelMode::ExactFresnel;
  throw std::invalid_argument("kernel must be thin, approx or exact");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "q-plate angular momentum simulator";

  static py::exception<ConfigError> config_error(m, "ConfigError", PyExc_ValueError);
  static py::exception<SamplingError> sampling_error(m, "SamplingError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const SamplingError& e) {
      py::set_error(sampling_error, e.what());
    } catch (const ConfigError& e) {
      py::set_error(config_error, e.what());
    }
  });

  py::class_<RunConfig>(m, "Config")
      .def_readwrite("n", &RunConfig::n)
      .def_readwrite("d", &RunConfig::d)
      .def_readwrite("n_o", &RunConfig::n_o)
      .def_readwrite("n_e", &RunConfig::n_e)
      .def_readwrite("jobs", &RunConfig::jobs)
      .def_property_readonly("half_width", &RunConfig::effective_half_width)
      .def_property_readonly("sigma", &RunConfig::sigma)
      .def("to_json", [](const RunConfig& c) { return config_to_json(c); })
      .def("with_parameter", [](const RunConfig& c, const std::string& name, double value) {
        return with_parameter(c, name, value);
      })
      .def("__repr__", [](const RunConfig& c) { return "Config(" + config_to_json(c) + ")"; });

  m.def("parse_config", [](const std::string& text, const std::vector<std::string>& overrides) {
    return parse_config(text, overrides);
  }, py::arg("json_text") = "", py::arg("overrides") = std::vector<std::string>{});
  m.def("load_config", [](const std::optional<std::filesystem::path>& path, const std::vector<std::string>& overrides) {
    return load_config(path, overrides);
  }, py::arg("path") = py::none(), py::arg("overrides") = std::vector<std::string>{});

  m.def("validate_sampling", &validate_sampling, py::arg("config"));

  m.def("run_single", [](const RunConfig& cfg) {
    const SingleResult r = [&] {
      py::gil_scoped_release release;
      return run_single(cfg);
    }();
    py::dict d;
    d["input"] = to_tuple(r.input);
    d["output"] = to_tuple(r.output);
    d["before"] = report_dict(r.budget.in);
    d["after"] = report_dict(r.budget.out);
    d["dwLz"] = r.budget.dwLz;
    d["dwSz"] = r.budget.dwSz;
    d["dwJz"] = r.budget.dwJz;
    d["prediction"] = prediction_dict(r.prediction);
    d["sigma"] = r.sigma;
    d["energy_ratio"] = r.energy_ratio;
    d["form"] = to_string(r.form);
    d["warnings"] = r.warnings;
    return d;
  }, py::arg("config"));

  py::class_<ScanRow>(m, "ScanRow")
      .def_readonly("value", &ScanRow::value)
      .def_readonly("wLz_in", &ScanRow::wLz_in)
      .def_readonly("wSz_in", &ScanRow::wSz_in)
      .def_readonly("wLz_out", &ScanRow::wLz_out)
      .def_readonly("wSz_out", &ScanRow::wSz_out)
      .def_readonly("dwLz", &ScanRow::dwLz)
      .def_readonly("dwSz", &ScanRow::dwSz)
      .def_readonly("dwJz", &ScanRow::dwJz)
      .def_readonly("dwLz_closed", &ScanRow::dwLz_closed)
      .def_readonly("dwSz_closed", &ScanRow::dwSz_closed)
      .def_readonly("energy_ratio", &ScanRow::energy_ratio)
      .def("__eq__", [](const ScanRow& a, const ScanRow& b) { return a == b; });

  m.def("run_scan", [](const RunConfig& cfg) {
    py::gil_scoped_release release;
    return run_scan(cfg);
  }, py::arg("config"));
  m.def("scan_csv", &scan_csv, py::arg("parameter"), py::arg("rows"));
  m.def("parse_scan_csv", [](const std::string& text) {
    ParsedScan p = parse_scan_csv(text);
    return py::make_tuple(p.parameter, p.rows);
  });

  py::class_<VerifyLine>(m, "VerifyLine")
      .def_readonly("name", &VerifyLine::name)
      .def_readonly("measured", &VerifyLine::measured)
      .def_readonly("bound", &VerifyLine::bound)
      .def_readonly("relation", &VerifyLine::relation)
      .def_readonly("passed", &VerifyLine::pass)
      .def_readonly("note", &VerifyLine::note);
  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("lines", &VerifyReport::lines)
      .def_property_readonly("passed", &VerifyReport::passed)
      .def("__str__", [](const VerifyReport& r) { return format_verify(r); });
  m.def("run_verify", [](const RunConfig& cfg) {
    py::gil_scoped_release release;
    return run_verify(cfg);
  }, py::arg("config"));

  m.def("lg_mode", [](int ell, int p, double w0, int n, double half_width) {
    const Grid g = Grid::make(n, half_width);
    return to_array(lg_mode({ell, p, w0}, g).values(), n);
  }, py::arg("ell"), py::arg("p"), py::arg("w0"), py::arg("n"), py::arg("half_width"));

  m.def("propagate", [](const CArray& vx, const CArray& vy, double half_width, double q, double alpha0,
                        double n_o, double n_e, double d, const std::string& kernel) {
    const VectorField in = to_field(vx, vy, half_width);
    const KernelMode mode = parse_kernel(kernel);
    const UniaxialMedium medium(n_o, n_e, d);
    const VectorField out = [&] {
      py::gil_scoped_release release;
      return qplate_propagate(in, {q, alpha0}, medium, mode);
    }();
    return to_tuple(out);
  }, py::arg("vx"), py::arg("vy"), py::arg("half_width"), py::arg("q"), py::arg("alpha0") = 0.0,
     py::arg("n_o") = 1.5, py::arg("n_e") = 1.7, py::arg("d") = 2.5, py::arg("kernel") = "approx");

  m.def("am_report", [](const CArray& vx, const CArray& vy, double half_width, const std::string& method) {
    SpinMethod sm = SpinMethod::Density;
    if (method == "radial") {
      sm = SpinMethod::RadialDerivative;
    } else if (method != "density") {
      throw std::invalid_argument("method must be density or radial");
    }
    return report_dict(am_report(to_field(vx, vy, half_width), sm));
  }, py::arg("vx"), py::arg("vy"), py::arg("half_width"), py::arg("method") = "density");

  m.def("predict_delta", [](double sigma, double q, double alpha0, double n_o, double n_e, double d) {
    return prediction_dict(predict_delta(sigma, {q, alpha0}, UniaxialMedium(n_o, n_e, d)));
  }, py::arg("sigma"), py::arg("q"), py::arg("alpha0") = 0.0, py::arg("n_o") = 1.5, py::arg("n_e") = 1.7,
     py::arg("d") = 2.5);

  m.def("read_qpsf", [](const std::filesystem::path& path) {
    const VectorField f = read_qpsf(path);
    return py::make_tuple(to_array(f.vx(), f.grid().n()), to_array(f.vy(), f.grid().n()), f.grid().half_width());
  }, py::arg("path"));
  m.def("write_qpsf", [](const std::filesystem::path& path, const CArray& vx, const CArray& vy, double half_width) {
    write_qpsf(path, to_field(vx, vy, half_width));
  }, py::arg("path"), py::arg("vx"), py::arg("vy"), py::arg("half_width"));
}
