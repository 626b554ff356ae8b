#include "qpsim/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qpsim {

Grid::Grid(int n, double half_width)
    : n_(n), half_width_(half_width), spacing_(2.0 * half_width / n) {}

Grid Grid::make(int n, double half_width) {
  if (n < 8) throw std::invalid_argument("grid: n must be at least 8, got " + std::to_string(n));
  if (n % 2 != 0) throw std::invalid_argument("grid: n must be even, got " + std::to_string(n));
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::invalid_argument("grid: half_width must be positive and finite");
  }
  return Grid(n, half_width);
}

Grid make_grid(int n, double half_width) { return Grid::make(n, half_width); }

double Grid::frequency(int i) const noexcept {
  const int shifted = i < n_ / 2 ? i : i - n_;
  return 2.0 * std::numbers::pi * shifted / (n_ * spacing_);
}

double Grid::diagonal() const noexcept { return 2.0 * std::numbers::sqrt2 * half_width_; }

ScalarField::ScalarField(Grid grid) : grid_(grid), values_(grid.size()) {}

ScalarField::ScalarField(Grid grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw std::invalid_argument("ScalarField: sample count does not match grid");
  }
}

VectorField::VectorField(Grid grid) : grid_(grid), vx_(grid.size()), vy_(grid.size()) {}

VectorField::VectorField(Grid grid, std::vector<cplx> vx, std::vector<cplx> vy)
    : grid_(grid), vx_(std::move(vx)), vy_(std::move(vy)) {
  if (vx_.size() != grid_.size() || vy_.size() != grid_.size()) {
    throw std::invalid_argument("VectorField: sample count does not match grid");
  }
}

VectorField::VectorField(const ScalarField& vx, const ScalarField& vy)
    : grid_(vx.grid()),
      vx_(vx.values().begin(), vx.values().end()),
      vy_(vy.values().begin(), vy.values().end()) {
  if (!(vx.grid() == vy.grid())) {
    throw std::invalid_argument("VectorField: components live on different grids");
  }
}

cplx quad_integral(std::span<const cplx> values, const Grid& grid) {
  cplx sum = 0.0;
  for (const cplx& v : values) sum += v;
  return sum * grid.cell_area();
}

cplx quad_integral(const ScalarField& f) { return quad_integral(f.values(), f.grid()); }

std::pair<std::vector<cplx>, std::vector<cplx>> spectral_gradient(std::span<const cplx> values,
                                                                  const Grid& grid) {
  const int n = grid.n();
  FftBuffer spec(grid.size());
  std::copy(values.begin(), values.end(), spec.data());
  fft2(spec, n, FftDirection::Forward);

  FftBuffer dx(grid.size());
  FftBuffer dy(grid.size());
  const cplx i_unit(0.0, 1.0);
  const double norm = 1.0 / static_cast<double>(grid.size());
  for (int row = 0; row < n; ++row) {
    const double ky = row == n / 2 ? 0.0 : grid.frequency(row);
    for (int col = 0; col < n; ++col) {
      const double kx = col == n / 2 ? 0.0 : grid.frequency(col);
      const std::size_t idx = grid.index(row, col);
      dx[idx] = i_unit * kx * spec[idx] * norm;
      dy[idx] = i_unit * ky * spec[idx] * norm;
    }
  }
  fft2(dx, n, FftDirection::Inverse);
  fft2(dy, n, FftDirection::Inverse);
  return {std::vector<cplx>(dx.data(), dx.data() + dx.size()),
          std::vector<cplx>(dy.data(), dy.data() + dy.size())};
}

ScalarField spectral_derivative(const ScalarField& f, Axis axis) {
  auto [dx, dy] = spectral_gradient(f.values(), f.grid());
  return ScalarField(f.grid(), axis == Axis::X ? std::move(dx) : std::move(dy));
}

ScalarField spectrum(const ScalarField& f) {
  FftBuffer spec(f.grid().size());
  std::copy(f.values().begin(), f.values().end(), spec.data());
  fft2(spec, f.grid().n(), FftDirection::Forward);
  std::vector<cplx> out(spec.data(), spec.data() + spec.size());
  for (cplx& v : out) v *= f.grid().cell_area();
  return ScalarField(f.grid(), std::move(out));
}

double spectral_energy(const ScalarField& spectrum_values) {
  const Grid& g = spectrum_values.grid();
  double sum = 0.0;
  for (const cplx& v : spectrum_values.values()) sum += std::norm(v);
  const double dk_over_2pi = 1.0 / (g.n() * g.spacing());
  return sum * dk_over_2pi * dk_over_2pi;
}

namespace {

// Periodic sinc (Dirichlet) weights for trigonometric interpolation on n
// equispaced samples; the Nyquist term is split symmetrically.
std::vector<double> dirichlet_weights(const Grid& g, double t) {
  const int n = g.n();
  const double period = n * g.spacing();
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    const double phase = 2.0 * std::numbers::pi * (t - g.coord(i)) / period;
    double s = 1.0;
    for (int k = 1; k < n / 2; ++k) s += 2.0 * std::cos(k * phase);
    s += std::cos((n / 2) * phase);
    w[i] = s / n;
  }
  return w;
}

}  // namespace

cplx interpolate(const ScalarField& f, double x, double y) {
  const Grid& g = f.grid();
  const auto wx = dirichlet_weights(g, x);
  const auto wy = dirichlet_weights(g, y);
  cplx sum = 0.0;
  for (int row = 0; row < g.n(); ++row) {
    cplx line = 0.0;
    for (int col = 0; col < g.n(); ++col) line += wx[col] * f(row, col);
    sum += wy[row] * line;
  }
  return sum;
}

}  // namespace qpsim
