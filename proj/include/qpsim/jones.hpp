#pragma once

#include <complex>
#include <utility>

#include "qpsim/fft.hpp"

namespace qpsim {

/// Polarization amplitudes (a, b) of u_x and u_y, normalized to
/// |a|^2 + |b|^2 = 1 within 1e-12.
class JonesVector {
 public:
  /// Throws std::invalid_argument if the pair is not normalized.
  JonesVector(cplx a, cplx b);
  /// Rescales (a, b) to unit norm; throws for the zero vector.
  static JonesVector normalized(cplx a, cplx b);

  static JonesVector linear_x() { return {1.0, 0.0}; }
  static JonesVector linear_y() { return {0.0, 1.0}; }
  /// (1, i)/sqrt(2): spin degree +1.
  static JonesVector left_circular();
  /// (1, -i)/sqrt(2): spin degree -1.
  static JonesVector right_circular();
  /// (cos t, i sin t) with sin 2t = sigma, for sigma in [-1, 1].
  static JonesVector with_spin(double sigma);

  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }

 private:
  cplx a_;
  cplx b_;
};

/// 2x2 complex Jones operator acting on (v_x, v_y).
struct JonesMatrix {
  cplx xx{1.0}, xy{0.0}, yx{0.0}, yy{1.0};

  static JonesMatrix identity() { return {}; }

  std::pair<cplx, cplx> apply(cplx vx, cplx vy) const noexcept {
    return {xx * vx + xy * vy, yx * vx + yy * vy};
  }
  JonesMatrix operator*(const JonesMatrix& o) const noexcept {
    return {xx * o.xx + xy * o.yx, xx * o.xy + xy * o.yy, yx * o.xx + yy * o.yx,
            yx * o.xy + yy * o.yy};
  }
  JonesMatrix operator+(const JonesMatrix& o) const noexcept {
    return {xx + o.xx, xy + o.xy, yx + o.yx, yy + o.yy};
  }
  JonesMatrix operator*(cplx s) const noexcept { return {xx * s, xy * s, yx * s, yy * s}; }
  JonesMatrix adjoint() const noexcept {
    return {std::conj(xx), std::conj(yx), std::conj(xy), std::conj(yy)};
  }
  cplx determinant() const noexcept { return xx * yy - xy * yx; }
};

/// R(alpha) sigma_z R(-alpha) = [[cos 2a, sin 2a], [sin 2a, -cos 2a]]:
/// keeps the component along the optical axis and flips the orthogonal one.
JonesMatrix local_flip_matrix(double alpha);

/// 2x2 rotation by angle (counterclockwise).
JonesMatrix rotation_matrix(double angle);

}  // namespace qpsim
