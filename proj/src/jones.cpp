#include "qpsim/jones.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpsim {

JonesVector::JonesVector(cplx a, cplx b) : a_(a), b_(b) {
  const double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("JonesVector: |a|^2 + |b|^2 must equal 1");
  }
}

JonesVector JonesVector::normalized(cplx a, cplx b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("JonesVector: cannot normalize a zero vector");
  }
  return {a / norm, b / norm};
}

JonesVector JonesVector::left_circular() {
  return {(1.0 / std::numbers::sqrt2), cplx(0.0, (1.0 / std::numbers::sqrt2))};
}

JonesVector JonesVector::right_circular() {
  return {(1.0 / std::numbers::sqrt2), cplx(0.0, -(1.0 / std::numbers::sqrt2))};
}

JonesVector JonesVector::with_spin(double sigma) {
  if (!(sigma >= -1.0 && sigma <= 1.0)) {
    throw std::invalid_argument("JonesVector::with_spin: sigma must lie in [-1, 1]");
  }
  const double t = 0.5 * std::asin(sigma);
  return normalized(std::cos(t), cplx(0.0, std::sin(t)));
}

JonesMatrix local_flip_matrix(double alpha) {
  const double c = std::cos(2.0 * alpha);
  const double s = std::sin(2.0 * alpha);
  return {c, s, s, -c};
}

JonesMatrix rotation_matrix(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

}  // namespace qpsim
