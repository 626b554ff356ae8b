#pragma once

#include "qpsim/grid.hpp"
#include "qpsim/jones.hpp"

namespace qpsim {

/// Uniaxial slab with its optical axis in the transverse plane. Lengths in
/// wavelengths, so k0 = 2 pi.
class UniaxialMedium {
 public:
  /// Throws std::invalid_argument unless n_o, n_e and thickness are positive.
  UniaxialMedium(double n_o, double n_e, double thickness);

  double n_o() const noexcept { return n_o_; }
  double n_e() const noexcept { return n_e_; }
  double thickness() const noexcept { return d_; }

  static double k0() noexcept;
  /// k0 n_o / (2 d): ordinary Fresnel chirp.
  double beta_o() const noexcept;
  /// k0 (n_o^2 + n_e^2) / (4 n_e d): mean extraordinary chirp.
  double beta_e() const noexcept;
  /// k0 (n_o^2 - n_e^2) / (4 n_e d): astigmatic part of the extraordinary chirp.
  double delta_beta_e() const noexcept;
  /// beta_o / beta_e = 2 n_o n_e / (n_o^2 + n_e^2), at most 1.
  double beta_ratio() const noexcept;
  /// k0 |n_o - n_e| d.
  double retardance() const noexcept;

  UniaxialMedium with_thickness(double d) const { return {n_o_, n_e_, d}; }

 private:
  double n_o_;
  double n_e_;
  double d_;
};

struct WaveVector {
  double kx = 0.0;
  double ky = 0.0;
};

/// Exact square roots, or their second-order expansion about q = 0.
enum class Dispersion { Exact, Paraxial };

/// [k0^2 n_o^2 - q^2]^(1/2), principal branch (positive imaginary when evanescent).
cplx k_oz(WaveVector q, const UniaxialMedium& m, Dispersion dispersion = Dispersion::Exact);

/// [k0^2 n_e^2 - (kx cos a + ky sin a)^2 n_e^2/n_o^2 - (kx sin a - ky cos a)^2]^(1/2).
cplx k_ez(WaveVector q, double alpha, const UniaxialMedium& m,
          Dispersion dispersion = Dispersion::Exact);

/// Angular-spectrum propagator of a homogeneous slab with axis angle alpha:
///   (e^{i kez z} + e^{i koz z})/2 * 1 + (e^{i kez z} - e^{i koz z})/2 * M(alpha).
JonesMatrix homogeneous_propagator(WaveVector q, double alpha, double z, const UniaxialMedium& m,
                                   Dispersion dispersion = Dispersion::Exact);

/// FFT -> per-frequency homogeneous_propagator -> inverse FFT (periodic, no padding).
VectorField propagate_homogeneous(const VectorField& f, double alpha, double z,
                                  const UniaxialMedium& m,
                                  Dispersion dispersion = Dispersion::Exact);

}  // namespace qpsim
