#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "qpsim/modes.hpp"
#include "qpsim/observables.hpp"
#include "support.hpp"

using namespace qpsim;

namespace {
constexpr double kPi = std::numbers::pi;
const Grid kGrid = make_grid(512, 464.0);
}  // namespace

TEST_CASE("orbital momentum oracles") {
  const ScalarField real = test::sample(kGrid, [](double x, double y) {
    return cplx((1 + 0.01 * x) * std::exp(-(x * x + 2 * y * y) / 1e4), 0.0);
  });
  CHECK(std::abs(orbital_am(VectorField(real, real))) < 1e-10);

  const ScalarField u0 = lg_mode({0, 0, 100.0}, kGrid);
  const ScalarField u1 = lg_mode({1, 0, 100.0}, kGrid);
  std::vector<cplx> mix(kGrid.size());
  for (std::size_t i = 0; i < kGrid.size(); ++i) mix[i] = (u0[i] + u1[i]) / std::numbers::sqrt2;
  CHECK(std::abs(orbital_am(VectorField(ScalarField(kGrid, mix), ScalarField(kGrid))) - 0.5) < 1e-4);

  CHECK_THROWS_AS(orbital_am(VectorField(kGrid)), std::domain_error);
  CHECK_THROWS_AS(spin_am(VectorField(kGrid)), std::domain_error);
}

TEST_CASE("spin momentum by both discretizations") {
  const VectorField lcp = make_input_field({{0, 0, 100.0}, JonesVector::left_circular()}, kGrid);
  CHECK(std::abs(spin_am(lcp, SpinMethod::Density) - 1.0) < 1e-6);
  CHECK(std::abs(spin_am(lcp, SpinMethod::RadialDerivative) - 1.0) < 1e-3);
  const VectorField lin = make_input_field({{2, 1, 100.0}, JonesVector::normalized(1.0, -1.0)}, kGrid);
  CHECK(std::abs(spin_am(lin, SpinMethod::Density)) < 1e-9);
  CHECK(std::abs(spin_am(lin, SpinMethod::RadialDerivative)) < 1e-9);
}

TEST_CASE("property: the spin discretizations agree on propagated fields") {
  const UniaxialMedium m(1.5, 1.7, 1.7);
  for (int ell : {0, 1, -2}) {
    for (double q : {0.5, 1.0, 2.0}) {
      const VectorField in = make_input_field({{ell, ell == 1 ? 1 : 0, 100.0}, JonesVector::with_spin(0.6)}, kGrid);
      const VectorField out = qplate_propagate(in, {q, 0.2}, m, KernelMode::ThinElement);
      for (const VectorField* f : {&in, &out}) {
        CHECK(std::abs(spin_am(*f, SpinMethod::Density) - spin_am(*f, SpinMethod::RadialDerivative)) < 1e-3);
      }
    }
  }
}

TEST_CASE("budgets of unchanged fields vanish") {
  const VectorField f = make_input_field({{1, 1, 100.0}, JonesVector::with_spin(0.3)}, kGrid);
  const AMBudget same = am_budget(f, f);
  CHECK(std::abs(same.dwLz) < 1e-12);
  CHECK(std::abs(same.dwSz) < 1e-12);
  CHECK(std::abs(same.dwJz) < 1e-12);

  std::vector<cplx> vx(f.vx().begin(), f.vx().end()), vy(f.vy().begin(), f.vy().end());
  const cplx ph = std::polar(1.0, 1.234);
  for (auto& z : vx) z *= ph;
  for (auto& z : vy) z *= ph;
  const AMBudget phased = am_budget(f, VectorField(kGrid, vx, vy));
  CHECK(std::abs(phased.dwLz) < 1e-12);
  CHECK(std::abs(phased.dwSz) < 1e-12);

  const AMReport rep = am_report(f);
  CHECK(rep.wJz == rep.wLz + rep.wSz);
  CHECK(same.dwJz == same.dwLz + same.dwSz);
}

TEST_CASE("thin-element budget follows the circular-flip oracle") {
  // Circular input through a thin plate: a fraction (1 - cos D)/2 flips spin and
  // gains 2 sigma q of orbital momentum, D the retardance.
  const VectorField in = make_input_field({{0, 0, 100.0}, JonesVector::right_circular()}, kGrid);
  for (double d : {0.7, 1.9, 2.5, 4.2}) {
    const UniaxialMedium m(1.5, 1.7, d);
    const double f = 1.0 - std::cos(m.retardance());
    const AMBudget b = am_budget(in, thin_element_apply(in, {0.5, 0.0}, m));
    CHECK(std::abs(b.dwSz - f) < 1e-6);
    CHECK(std::abs(b.dwLz + 0.5 * f) < 2e-3);
  }
}

TEST_CASE("closed-form changes") {
  const UniaxialMedium m(1.5, 1.7, 2.5);
  CHECK(delta_L_closed(0.0, {0.5, 0.0}, m) == 0.0);
  CHECK(delta_S_closed(0.0, m) == 0.0);
  const UniaxialMedium iso(1.5, 1.5, 2.5);
  CHECK(modulation_bracket(iso) == doctest::Approx(0.0));
  CHECK(std::abs(delta_L_closed(1.0, {1.0, 0.0}, iso)) < 1e-15);
  CHECK(delta_S_closed(1.0, m) < 0.0);

  const double rho = m.beta_ratio();
  CHECK(modulation_bracket(m) ==
        doctest::Approx(1 + rho * rho - 2 * rho * std::cos(m.retardance())).epsilon(1e-14));
  CHECK(delta_S_closed(1.0, m) == doctest::Approx(-modulation_bracket(m) / (4 * kPi)));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const UniaxialMedium r(1.0 + 2 * u(rng), 1.0 + 2 * u(rng), 0.1 + 20 * u(rng));
    const double q = std::round(8 * u(rng) - 4) / 2;
    const double sigma = 2 * u(rng) - 1;
    const DeltaPrediction p = predict_delta(sigma, {q, u(rng)}, r);
    const double rr = r.beta_ratio();
    CHECK(p.bracket >= (1 - rr) * (1 - rr) - 1e-15);
    CHECK(p.bracket >= 0.0);
    CHECK(std::abs(p.dwLz + q * p.dwSz) <= 1e-15 * std::abs(p.dwLz) + 1e-300);
    CHECK(p.dwJz == p.dwLz + p.dwSz);
  }
}

TEST_CASE("closed-form extrema sit at half-wave thicknesses") {
  const double dn = 0.2;
  double best_d = 0.0, best = -1.0;
  for (int i = 0; i <= 40000; ++i) {
    const double d = 0.5 + 4.0 * i / 40000;
    const double v = std::abs(delta_L_closed(1.0, {0.5, 0.0}, UniaxialMedium(1.5, 1.5 + dn, d)));
    if (v > best) {
      best = v;
      best_d = d;
    }
  }
  CHECK(best_d == doctest::Approx(1.0 / (2 * dn)).epsilon(1e-3));
}
