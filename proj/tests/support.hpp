#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpsim/grid.hpp"

namespace qpsim::test {

inline double rel_l2(std::span<const cplx> a, std::span<const cplx> b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

inline double rel_l2(const VectorField& a, const VectorField& b) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < a.vx().size(); ++i) {
    num += std::norm(a.vx()[i] - b.vx()[i]) + std::norm(a.vy()[i] - b.vy()[i]);
    den += std::norm(b.vx()[i]) + std::norm(b.vy()[i]);
  }
  return std::sqrt(num / den);
}

inline std::vector<cplx> random_values(std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<cplx> v(count);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  return v;
}

// Samples g(x, y) on a grid.
template <typename F>
ScalarField sample(const Grid& grid, F&& g) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) v[i] = g(grid.x_at(i), grid.y_at(i));
  return ScalarField(grid, std::move(v));
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const cplx& z : a) m = std::max(m, std::abs(z));
  return m;
}

// Fresnel propagation of exp(-r^2/w0^2) over thickness d in index n:
// with a = 1/w0^2 and b = -i k0 n / (2 d) the output is
// (b / (a + b)) exp(-a b r^2 / (a + b)) exp(i k0 n d).
inline cplx gaussian_fresnel(double r2, double w0, double n, double d) {
  const double k0 = 2.0 * std::numbers::pi;
  const cplx a(1.0 / (w0 * w0), 0.0);
  const cplx b(0.0, -k0 * n / (2.0 * d));
  return b / (a + b) * std::exp(-a * b * r2 / (a + b)) * std::polar(1.0, k0 * n * d);
}

}  // namespace qpsim::test
