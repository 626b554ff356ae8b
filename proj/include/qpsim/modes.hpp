#pragma once

#include "qpsim/grid.hpp"
#include "qpsim/jones.hpp"

namespace qpsim {

/// Laguerre-Gaussian mode indices and waist (in wavelengths).
struct LGIndex {
  int ell = 0;
  int p = 0;
  double w0 = 1.0;

  /// Throws std::invalid_argument for p < 0 or w0 <= 0.
  void validate() const;
};

struct BeamSpec {
  LGIndex lg;
  JonesVector pol = JonesVector::linear_x();
};

/// LG_{ell,p}(rho) exp(i ell phi) sampled at the waist plane:
///
///   C (sqrt2 r / w0)^|ell| L_p^|ell|(2 r^2 / w0^2) exp(-r^2 / w0^2) exp(i ell phi),
///   C = sqrt(2 p! / (pi (p + |ell|)!)) / w0,
///
/// with L_p^m the generalized Laguerre polynomial. The sampled mode is then
/// rescaled by its measured quadrature norm so that quad_integral(|u|^2) == 1
/// on the given grid. phi is counterclockwise from +x, so positive ell means
/// phase increasing counterclockwise.
///
/// Throws SamplingError("mode-resolution") if w0 < 8 * spacing and
/// SamplingError("edge-decay") if the boundary intensity exceeds 1e-8 of the
/// peak intensity.
ScalarField lg_mode(const LGIndex& idx, const Grid& grid);

/// vx = a u, vy = b u with u = lg_mode(spec.lg, grid).
VectorField make_input_field(const BeamSpec& spec, const Grid& grid);

/// sigma = i (a b* - a* b), +1 for (1, i)/sqrt2 and -1 for (1, -i)/sqrt2.
double spin_degree(const JonesVector& pol);

}  // namespace qpsim
