#include "qpsim/modes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

std::string format_ratio(double r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

}  // namespace

void LGIndex::validate() const {
  if (p < 0) throw std::invalid_argument("LGIndex: radial index p must be non-negative");
  if (!(w0 > 0.0) || !std::isfinite(w0)) throw std::invalid_argument("LGIndex: w0 must be positive");
}

ScalarField lg_mode(const LGIndex& idx, const Grid& grid) {
  idx.validate();
  if (idx.w0 < 8.0 * grid.spacing()) {
    throw SamplingError("mode-resolution", "waist " + format_ratio(idx.w0) +
                                               " is below 8 grid spacings (" +
                                               format_ratio(8.0 * grid.spacing()) + ")");
  }

  const unsigned m = static_cast<unsigned>(std::abs(idx.ell));
  const unsigned p = static_cast<unsigned>(idx.p);
  const double norm = std::sqrt(2.0 * std::tgamma(p + 1.0) /
                                (std::numbers::pi * std::tgamma(p + m + 1.0))) /
                      idx.w0;

  std::vector<cplx> u(grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double x = grid.x_at(i);
    const double y = grid.y_at(i);
    const double r2 = x * x + y * y;
    const double s = 2.0 * r2 / (idx.w0 * idx.w0);
    const double radial = norm * std::pow(std::sqrt(s), m) * std::assoc_laguerre(p, m, s) *
                          std::exp(-r2 / (idx.w0 * idx.w0));
    u[i] = std::polar(radial, idx.ell * std::atan2(y, x));
  }

  double peak = 0.0;
  for (const cplx& v : u) peak = std::max(peak, std::norm(v));
  double edge = 0.0;
  const int n = grid.n();
  for (int k = 0; k < n; ++k) {
    edge = std::max({edge, std::norm(u[grid.index(0, k)]), std::norm(u[grid.index(n - 1, k)]),
                     std::norm(u[grid.index(k, 0)]), std::norm(u[grid.index(k, n - 1)])});
  }
  if (!(edge <= 1e-8 * peak)) {
    throw SamplingError("edge-decay", "boundary intensity ratio " + format_ratio(edge / peak) +
                                          " exceeds 1e-8; enlarge half_width");
  }

  double energy = 0.0;
  for (const cplx& v : u) energy += std::norm(v);
  energy *= grid.cell_area();
  const double scale = 1.0 / std::sqrt(energy);
  for (cplx& v : u) v *= scale;
  return ScalarField(grid, std::move(u));
}

VectorField make_input_field(const BeamSpec& spec, const Grid& grid) {
  const ScalarField u = lg_mode(spec.lg, grid);
  std::vector<cplx> vx(grid.size());
  std::vector<cplx> vy(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vx[i] = spec.pol.a() * u[i];
    vy[i] = spec.pol.b() * u[i];
  }
  return VectorField(grid, std::move(vx), std::move(vy));
}

double spin_degree(const JonesVector& pol) {
  const cplx a = pol.a();
  const cplx b = pol.b();
  return (cplx(0.0, 1.0) * (a * std::conj(b) - std::conj(a) * b)).real();
}

}  // namespace qpsim
