#include "qpsim/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpsim {

namespace {

double checked_energy(const VectorField& f) {
  const double e = field_energy(f);
  if (!(e > 0.0)) throw std::domain_error("angular momentum of a zero-energy field is undefined");
  return e;
}

// (i/2) [v dphi v* - v* dphi v] summed over the grid, for one component.
double orbital_density_sum(std::span<const cplx> v, const Grid& g) {
  const auto [dx, dy] = spectral_gradient(v, g);
  const cplx half_i(0.0, 0.5);
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const cplx dphi = g.x_at(i) * dy[i] - g.y_at(i) * dx[i];
    sum += (half_i * (v[i] * std::conj(dphi) - std::conj(v[i]) * dphi)).real();
  }
  return sum * g.cell_area();
}

}  // namespace

double field_energy(const VectorField& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < f.grid().size(); ++i) sum += std::norm(f.vx()[i]) + std::norm(f.vy()[i]);
  return sum * f.grid().cell_area();
}

double orbital_am(const VectorField& f) {
  const double e = checked_energy(f);
  return (orbital_density_sum(f.vx(), f.grid()) + orbital_density_sum(f.vy(), f.grid())) / e;
}

double spin_am(const VectorField& f, SpinMethod method) {
  const double e = checked_energy(f);
  const Grid& g = f.grid();
  const auto vx = f.vx();
  const auto vy = f.vy();
  const cplx i_unit(0.0, 1.0);

  if (method == SpinMethod::Density) {
    double sum = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      sum += (i_unit * (vx[i] * std::conj(vy[i]) - std::conj(vx[i]) * vy[i])).real();
    }
    return sum * g.cell_area() / e;
  }

  // r^2 dr dphi d/dr P = r (d/dr P) dx dy, with d/dr = (x d/dx + y d/dy) / r.
  // No sample lies on r = 0; samples closer than 1e-12 spacing would be skipped.
  std::vector<cplx> p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    p[i] = std::conj(vx[i]) * vy[i] - vx[i] * std::conj(vy[i]);
  }
  const auto [px, py] = spectral_gradient(p, g);
  double sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.x_at(i);
    const double y = g.y_at(i);
    const double r = std::hypot(x, y);
    if (r < 1e-12 * g.spacing()) continue;
    const cplx dr = (x * px[i] + y * py[i]) / r;
    sum += (0.5 * i_unit * r * dr).real();
  }
  return sum * g.cell_area() / e;
}

AMReport am_report(const VectorField& f, SpinMethod method) {
  AMReport r;
  r.energy = checked_energy(f);
  r.wLz = orbital_am(f);
  r.wSz = spin_am(f, method);
  r.wJz = r.wLz + r.wSz;
  return r;
}

double modulation_bracket(const UniaxialMedium& m) {
  const double rho = m.beta_ratio();
  return 1.0 + rho * rho - 2.0 * rho * std::cos(m.retardance());
}

double delta_L_closed(double sigma, const QPlateSpec& plate, const UniaxialMedium& m) {
  return sigma * plate.q / (4.0 * std::numbers::pi) * modulation_bracket(m);
}

double delta_S_closed(double sigma, const UniaxialMedium& m) {
  return -sigma / (4.0 * std::numbers::pi) * modulation_bracket(m);
}

DeltaPrediction predict_delta(double sigma, const QPlateSpec& plate, const UniaxialMedium& m) {
  DeltaPrediction p;
  p.bracket = modulation_bracket(m);
  p.dwLz = delta_L_closed(sigma, plate, m);
  p.dwSz = delta_S_closed(sigma, m);
  p.dwJz = p.dwLz + p.dwSz;
  return p;
}

AMBudget am_budget(const VectorField& fin, const VectorField& fout, SpinMethod method) {
  AMBudget b;
  b.in = am_report(fin, method);
  b.out = am_report(fout, method);
  b.dwLz = b.out.wLz - b.in.wLz;
  b.dwSz = b.out.wSz - b.in.wSz;
  b.dwJz = b.dwLz + b.dwSz;
  return b;
}

}  // namespace qpsim
