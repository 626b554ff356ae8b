#include <numbers>
#include <random>

#include "doctest.h"
#include "qpsim/jones.hpp"

using namespace qpsim;

namespace {
bool near(const JonesMatrix& a, const JonesMatrix& b, double tol) {
  return std::abs(a.xx - b.xx) < tol && std::abs(a.xy - b.xy) < tol && std::abs(a.yx - b.yx) < tol &&
         std::abs(a.yy - b.yy) < tol;
}
}  // namespace

TEST_CASE("Jones vectors must be normalized") {
  CHECK_THROWS_AS(JonesVector(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(JonesVector::normalized(0.0, 0.0), std::invalid_argument);
  const JonesVector v = JonesVector::normalized(3.0, cplx(0, 4.0));
  CHECK(std::norm(v.a()) + std::norm(v.b()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("flip matrix examples") {
  CHECK(near(local_flip_matrix(0.0), {1.0, 0.0, 0.0, -1.0}, 1e-15));
  CHECK(near(local_flip_matrix(std::numbers::pi / 4), {0.0, 1.0, 1.0, 0.0}, 1e-15));
}

TEST_CASE("property: flip matrix is an involution with determinant -1") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = angle(rng);
    const JonesMatrix m = local_flip_matrix(a);
    CHECK(near(m * m, JonesMatrix::identity(), 1e-14));
    CHECK(std::abs(m.determinant() + 1.0) < 1e-14);
    CHECK(near(m, rotation_matrix(a) * local_flip_matrix(0.0) * rotation_matrix(-a), 1e-14));
  }
}

TEST_CASE("property: circular flip identity") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  const double s = 1.0 / std::numbers::sqrt2;
  for (int trial = 0; trial < 200; ++trial) {
    const double a = angle(rng);
    const auto [x, y] = local_flip_matrix(a).apply(s, cplx(0, s));
    const cplx phase = std::polar(1.0, 2 * a);
    CHECK(std::abs(x - phase * s) < 1e-14);
    CHECK(std::abs(y - phase * cplx(0, -s)) < 1e-14);
  }
}
