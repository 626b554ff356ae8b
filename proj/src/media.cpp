#include "qpsim/media.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpsim {

UniaxialMedium::UniaxialMedium(double n_o, double n_e, double thickness)
    : n_o_(n_o), n_e_(n_e), d_(thickness) {
  if (!(n_o > 0.0) || !(n_e > 0.0) || !std::isfinite(n_o) || !std::isfinite(n_e)) {
    throw std::invalid_argument("UniaxialMedium: refractive indices must be positive");
  }
  if (!(thickness > 0.0) || !std::isfinite(thickness)) {
    throw std::invalid_argument("UniaxialMedium: thickness must be positive");
  }
}

double UniaxialMedium::k0() noexcept { return 2.0 * std::numbers::pi; }

double UniaxialMedium::beta_o() const noexcept { return k0() * n_o_ / (2.0 * d_); }

double UniaxialMedium::beta_e() const noexcept {
  return k0() * (n_o_ * n_o_ + n_e_ * n_e_) / (4.0 * n_e_ * d_);
}

double UniaxialMedium::delta_beta_e() const noexcept {
  return k0() * (n_o_ * n_o_ - n_e_ * n_e_) / (4.0 * n_e_ * d_);
}

double UniaxialMedium::beta_ratio() const noexcept {
  return 2.0 * n_o_ * n_e_ / (n_o_ * n_o_ + n_e_ * n_e_);
}

double UniaxialMedium::retardance() const noexcept { return k0() * std::abs(n_o_ - n_e_) * d_; }

cplx k_oz(WaveVector q, const UniaxialMedium& m, Dispersion dispersion) {
  const double k = UniaxialMedium::k0() * m.n_o();
  const double q2 = q.kx * q.kx + q.ky * q.ky;
  if (dispersion == Dispersion::Paraxial) return k - q2 / (2.0 * k);
  return std::sqrt(cplx(k * k - q2, 0.0));
}

cplx k_ez(WaveVector q, double alpha, const UniaxialMedium& m, Dispersion dispersion) {
  const double k0 = UniaxialMedium::k0();
  const double along = q.kx * std::cos(alpha) + q.ky * std::sin(alpha);
  const double across = q.kx * std::sin(alpha) - q.ky * std::cos(alpha);
  const double ratio = m.n_e() / m.n_o();
  if (dispersion == Dispersion::Paraxial) {
    return k0 * m.n_e() - along * along * ratio * ratio / (2.0 * k0 * m.n_e()) -
           across * across / (2.0 * k0 * m.n_e());
  }
  const double arg =
      k0 * k0 * m.n_e() * m.n_e() - along * along * ratio * ratio - across * across;
  return std::sqrt(cplx(arg, 0.0));
}

JonesMatrix homogeneous_propagator(WaveVector q, double alpha, double z, const UniaxialMedium& m,
                                   Dispersion dispersion) {
  const cplx i_unit(0.0, 1.0);
  const cplx eo = std::exp(i_unit * k_oz(q, m, dispersion) * z);
  const cplx ee = std::exp(i_unit * k_ez(q, alpha, m, dispersion) * z);
  return JonesMatrix::identity() * (0.5 * (ee + eo)) + local_flip_matrix(alpha) * (0.5 * (ee - eo));
}

VectorField propagate_homogeneous(const VectorField& f, double alpha, double z,
                                  const UniaxialMedium& m, Dispersion dispersion) {
  const Grid& g = f.grid();
  const int n = g.n();
  FftBuffer sx(g.size());
  FftBuffer sy(g.size());
  std::copy(f.vx().begin(), f.vx().end(), sx.data());
  std::copy(f.vy().begin(), f.vy().end(), sy.data());
  fft2(sx, n, FftDirection::Forward);
  fft2(sy, n, FftDirection::Forward);

  const double norm = 1.0 / static_cast<double>(g.size());
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      const std::size_t idx = g.index(row, col);
      const JonesMatrix u = homogeneous_propagator({g.frequency(col), g.frequency(row)}, alpha, z,
                                                   m, dispersion);
      const auto [ax, ay] = u.apply(sx[idx], sy[idx]);
      sx[idx] = ax * norm;
      sy[idx] = ay * norm;
    }
  }
  fft2(sx, n, FftDirection::Inverse);
  fft2(sy, n, FftDirection::Inverse);
  return VectorField(g, std::vector<cplx>(sx.data(), sx.data() + sx.size()),
                     std::vector<cplx>(sy.data(), sy.data() + sy.size()));
}

}  // namespace qpsim
