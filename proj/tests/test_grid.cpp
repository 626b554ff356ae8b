#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "qpsim/grid.hpp"
#include "support.hpp"

using namespace qpsim;
using qpsim::test::max_abs_diff;
using qpsim::test::sample;

TEST_CASE("make_grid spacing and validation") {
  CHECK(make_grid(256, 64).spacing() == 0.5);
  CHECK(make_grid(8, 4).spacing() == 1.0);
  CHECK_THROWS_AS(make_grid(7, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(8, -1.0), std::invalid_argument);
}

TEST_CASE("cell-centred coordinates are mirror symmetric") {
  const Grid g = make_grid(16, 3.0);
  for (int i = 0; i < g.n(); ++i) CHECK(g.coord(i) == -g.coord(g.n() - 1 - i));
  CHECK(g.coord(0) == doctest::Approx(-3.0 + g.spacing() / 2));
  CHECK(g.frequency(1) == doctest::Approx(2 * std::numbers::pi / (g.n() * g.spacing())));
  CHECK(g.frequency(g.n() / 2) == doctest::Approx(-std::numbers::pi / g.spacing()));
}

TEST_CASE("quad_integral of constants and a Gaussian") {
  const Grid g = make_grid(64, 5.0);
  CHECK(quad_integral(sample(g, [](double, double) { return cplx(1.0); })).real() ==
        doctest::Approx(100.0).epsilon(1e-14));
  CHECK(quad_integral(ScalarField(g)) == cplx(0.0));

  const Grid fine = make_grid(256, 400.0);
  const double w0 = 100.0;
  const ScalarField u = sample(fine, [&](double x, double y) {
    return cplx(std::exp(-2 * (x * x + y * y) / (w0 * w0)) * 2 / (std::numbers::pi * w0 * w0));
  });
  CHECK(std::abs(quad_integral(u).real() - 1.0) < 1e-6);
}

TEST_CASE("spectral derivatives match analytic oracles") {
  const Grid g = make_grid(128, 24.0);
  const double w0 = 4.0;
  const auto gauss = [&](double x, double y) { return std::exp(-(x * x + y * y) / (w0 * w0)); };
  const ScalarField f = sample(g, [&](double x, double y) { return cplx(gauss(x, y)); });
  const ScalarField dfx = sample(g, [&](double x, double y) { return cplx(-2 * x / (w0 * w0) * gauss(x, y)); });
  CHECK(max_abs_diff(spectral_derivative(f, Axis::X).values(), dfx.values()) < 1e-8);

  const ScalarField xf = sample(g, [&](double x, double y) { return cplx(x * gauss(x, y)); });
  const ScalarField dxf_dx =
      sample(g, [&](double x, double y) { return cplx((1 - 2 * x * x / (w0 * w0)) * gauss(x, y)); });
  const ScalarField dxf_dy =
      sample(g, [&](double x, double y) { return cplx(-2 * x * y / (w0 * w0) * gauss(x, y)); });
  CHECK(max_abs_diff(spectral_derivative(xf, Axis::X).values(), dxf_dx.values()) < 1e-8);
  CHECK(max_abs_diff(spectral_derivative(xf, Axis::Y).values(), dxf_dy.values()) < 1e-8);

  const ScalarField c = sample(g, [](double, double) { return cplx(2.5, -1.0); });
  CHECK(test::max_abs(spectral_derivative(c, Axis::X).values()) < 1e-13);
  CHECK(test::max_abs(spectral_derivative(c, Axis::Y).values()) < 1e-13);
}

TEST_CASE("property: Parseval under the documented normalization") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> pick_n(1, 4);
  std::uniform_real_distribution<double> pick_hw(0.5, 50.0);
  for (int trial = 0; trial < 40; ++trial) {
    const Grid g = make_grid(4 << pick_n(rng), pick_hw(rng));
    const ScalarField f(g, test::random_values(g.size(), rng));
    double direct = 0.0;
    for (const cplx& z : f.values()) direct += std::norm(z);
    direct *= g.cell_area();
    CHECK(std::abs(spectral_energy(spectrum(f)) - direct) <= 1e-12 * direct);
  }
}

TEST_CASE("property: derivative commutes with conjugation") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    const Grid g = make_grid(8 << (trial % 4), 1.0 + trial);
    const ScalarField f(g, test::random_values(g.size(), rng));
    std::vector<cplx> conj(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) conj[i] = std::conj(f[i]);
    for (Axis axis : {Axis::X, Axis::Y}) {
      const ScalarField a = spectral_derivative(f, axis);
      const ScalarField b = spectral_derivative(ScalarField(g, conj), axis);
      double worst = 0.0;
      for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(std::conj(a[i]) - b[i]));
      CHECK(worst <= 1e-12 * test::max_abs(a.values()));
    }
  }
}

TEST_CASE("property: quad_integral is linear") {
  std::mt19937_64 rng(303);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 30; ++trial) {
    const Grid g = make_grid(16 + 2 * trial, 0.3 + trial);
    const ScalarField f(g, test::random_values(g.size(), rng));
    const ScalarField h(g, test::random_values(g.size(), rng));
    const cplx a(normal(rng), normal(rng));
    const cplx b(normal(rng), normal(rng));
    std::vector<cplx> mix(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) mix[i] = a * f[i] + b * h[i];
    const cplx lhs = quad_integral(ScalarField(g, mix));
    const cplx rhs = a * quad_integral(f) + b * quad_integral(h);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (std::abs(a * quad_integral(f)) + std::abs(b * quad_integral(h))));
  }
}

TEST_CASE("interpolate reproduces samples and band-limited values") {
  const Grid g = make_grid(64, 16.0);
  const double w0 = 3.0;
  const ScalarField f = sample(g, [&](double x, double y) {
    return cplx(std::exp(-(x * x + y * y) / (w0 * w0)), x);
  });
  CHECK(std::abs(interpolate(f, g.coord(10), g.coord(40)) - f(40, 10)) < 1e-12);

  const ScalarField gauss = sample(g, [&](double x, double y) {
    return cplx(std::exp(-(x * x + y * y) / (w0 * w0)));
  });
  CHECK(std::abs(interpolate(gauss, 0.0, 0.0) - 1.0) < 1e-10);
  CHECK(std::abs(interpolate(gauss, 1.3, -0.7) - std::exp(-(1.69 + 0.49) / 9.0)) < 1e-10);
}

TEST_CASE("field shape mismatches are rejected") {
  const Grid g = make_grid(8, 1.0);
  CHECK_THROWS_AS(ScalarField(g, std::vector<cplx>(10)), std::invalid_argument);
  CHECK_THROWS_AS(VectorField(g, std::vector<cplx>(64), std::vector<cplx>(63)), std::invalid_argument);
  CHECK_THROWS_AS(VectorField(ScalarField(g), ScalarField(make_grid(8, 2.0))), std::invalid_argument);
}
