#pragma once

#include "qpsim/grid.hpp"
#include "qpsim/media.hpp"
#include "qpsim/qplate.hpp"

namespace qpsim {

/// Angular momenta per unit energy, multiplied by omega (dimensionless):
/// an input LG_{ell,p} with spin degree sigma reports wLz = ell, wSz = sigma.
struct AMReport {
  double wLz = 0.0;
  double wSz = 0.0;
  double wJz = 0.0;  ///< wLz + wSz
  double energy = 0.0;
};

/// Closed-form omega-scaled changes across the plate.
struct DeltaPrediction {
  double dwLz = 0.0;
  double dwSz = 0.0;
  double dwJz = 0.0;
  /// 1 + (beta_o/beta_e)^2 - 2 (beta_o/beta_e) cos(k0 |n_o - n_e| d)
  double bracket = 0.0;
};

struct AMBudget {
  AMReport in;
  AMReport out;
  double dwLz = 0.0;
  double dwSz = 0.0;
  double dwJz = 0.0;  ///< dwLz + dwSz
};

enum class SpinMethod {
  Density,           ///< integral of i (vx vy* - vx* vy)
  RadialDerivative,  ///< integral of (i/2) r^2 d/dr [vx* vy - vx vy*] dr dphi
};

/// sum |vx|^2 + |vy|^2 times the cell area.
double field_energy(const VectorField& f);

/// omega Lz / energy with d/dphi = x d/dy - y d/dx from spectral derivatives.
/// Throws std::domain_error for a zero field.
double orbital_am(const VectorField& f);

/// omega Sz / energy. Throws std::domain_error for a zero field.
double spin_am(const VectorField& f, SpinMethod method = SpinMethod::Density);

AMReport am_report(const VectorField& f, SpinMethod method = SpinMethod::Density);

/// 1 + rho^2 - 2 rho cos(k0 |n_o - n_e| d), rho = beta_o / beta_e. Never negative.
double modulation_bracket(const UniaxialMedium& m);

/// omega dLz = sigma q / (4 pi) * bracket.
double delta_L_closed(double sigma, const QPlateSpec& plate, const UniaxialMedium& m);

/// omega dSz = -sigma / (4 pi) * bracket.
double delta_S_closed(double sigma, const UniaxialMedium& m);

DeltaPrediction predict_delta(double sigma, const QPlateSpec& plate, const UniaxialMedium& m);

AMBudget am_budget(const VectorField& fin, const VectorField& fout,
                   SpinMethod method = SpinMethod::Density);

}  // namespace qpsim
