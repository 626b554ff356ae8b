#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "qpsim/fft.hpp"

namespace qpsim {

/// Square transverse sampling grid. All lengths are in units of the vacuum
/// wavelength, so the vacuum wavenumber is exactly 2*pi.
///
/// Layout is cell-centred: x_i = (i - n/2 + 1/2) * spacing for i = 0..n-1.
/// Every coordinate has its mirror image on the grid and no sample sits on
/// the optical axis r = 0. Fields are stored row-major, the row index
/// running along y and the column index along x.
///
/// Angular frequencies follow the DFT ordering: k_i = 2*pi*i/(n*spacing) for
/// i < n/2 and k_i = 2*pi*(i - n)/(n*spacing) otherwise.
class Grid {
 public:
  /// Throws std::invalid_argument for odd n, n < 8 or half_width <= 0.
  static Grid make(int n, double half_width);

  int n() const noexcept { return n_; }
  double half_width() const noexcept { return half_width_; }
  double spacing() const noexcept { return spacing_; }
  double cell_area() const noexcept { return spacing_ * spacing_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_) * n_; }

  double coord(int i) const noexcept { return (i - n_ / 2 + 0.5) * spacing_; }
  double frequency(int i) const noexcept;

  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * n_ + col;
  }
  double x_at(std::size_t idx) const noexcept { return coord(static_cast<int>(idx % n_)); }
  double y_at(std::size_t idx) const noexcept { return coord(static_cast<int>(idx / n_)); }

  /// Length of the grid diagonal, 2*sqrt(2)*half_width.
  double diagonal() const noexcept;

  bool operator==(const Grid&) const = default;

 private:
  Grid(int n, double half_width);

  int n_;
  double half_width_;
  double spacing_;
};

Grid make_grid(int n, double half_width);

/// Complex scalar samples on a Grid.
class ScalarField {
 public:
  explicit ScalarField(Grid grid);
  /// Throws std::invalid_argument when values.size() != grid.size().
  ScalarField(Grid grid, std::vector<cplx> values);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const cplx> values() const noexcept { return values_; }
  cplx operator()(int row, int col) const { return values_[grid_.index(row, col)]; }
  cplx operator[](std::size_t i) const { return values_[i]; }

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

/// Transverse electric field v_x u_x + v_y u_y on a shared grid.
class VectorField {
 public:
  explicit VectorField(Grid grid);
  VectorField(Grid grid, std::vector<cplx> vx, std::vector<cplx> vy);
  VectorField(const ScalarField& vx, const ScalarField& vy);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const cplx> vx() const noexcept { return vx_; }
  std::span<const cplx> vy() const noexcept { return vy_; }
  ScalarField x_component() const { return ScalarField(grid_, vx_); }
  ScalarField y_component() const { return ScalarField(grid_, vy_); }

 private:
  Grid grid_;
  std::vector<cplx> vx_;
  std::vector<cplx> vy_;
};

enum class Axis { X, Y };

/// Riemann sum sum_ij f_ij * spacing^2.
cplx quad_integral(const ScalarField& f);
cplx quad_integral(std::span<const cplx> values, const Grid& grid);

/// d/dx or d/dy by multiplication with i*k in the DFT domain. The Nyquist
/// mode is dropped so that derivatives of real fields stay real.
ScalarField spectral_derivative(const ScalarField& f, Axis axis);

/// Both partial derivatives from a single forward transform.
std::pair<std::vector<cplx>, std::vector<cplx>> spectral_gradient(std::span<const cplx> values,
                                                                  const Grid& grid);

/// Continuous-transform approximation F(k) = spacing^2 * DFT(f), ordered as
/// Grid::frequency. With this normalization
///   sum |f|^2 spacing^2 == sum |F|^2 (dk / 2pi)^2,  dk = 2pi / (n spacing).
ScalarField spectrum(const ScalarField& f);

/// Fourier-side energy sum_k |F(k)|^2 (dk/2pi)^2 of a spectrum() result.
double spectral_energy(const ScalarField& spectrum_values);

/// Band-limited (trigonometric) interpolation of f at an arbitrary point.
/// O(n^2) per call; intended for tests and diagnostics.
cplx interpolate(const ScalarField& f, double x, double y);

}  // namespace qpsim
