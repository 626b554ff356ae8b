#pragma once

#include <string>
#include <vector>

#include "qpsim/grid.hpp"
#include "qpsim/jones.hpp"
#include "qpsim/media.hpp"

namespace qpsim {

/// Azimuthally patterned plate with optical-axis angle alpha(phi) = q phi + alpha0.
struct QPlateSpec {
  double q = 0.5;
  double alpha0 = 0.0;

  /// True when 2q is an integer: the axis pattern then has no discontinuity
  /// line, only the central defect.
  bool axis_is_continuous() const noexcept;
  /// Empty when continuous, otherwise a human-readable warning.
  std::string warning() const;
};

enum class KernelMode {
  ThinElement,    ///< local Jones action, no diffraction
  ApproxFresnel,  ///< astigmatic term of the extraordinary kernel dropped
  ExactFresnel,   ///< full extraordinary kernel by direct quadrature (small grids)
};

/// How the shift-invariant Fresnel convolutions are evaluated.
enum class FresnelForm {
  Auto,              ///< RealSpace when the sampling criterion holds, else TransferFunction
  RealSpace,         ///< kernel sampled in real space, zero-padded FFT convolution
  TransferFunction,  ///< analytic kernel spectrum exp(-i k^2 / 4 beta) on the padded grid
};

/// Prefactor of the approximated extraordinary kernel.
///  PerKernel:       beta_e / (i pi), so the kernel integrates to a pure phase
///                   like the exact one and energy is conserved.
///  SharedPrefactor: k0 n_o / (2 pi i d) = beta_o / (i pi) for both kernels, as
///                   in the real-space output formula; the extraordinary
///                   contribution is then scaled by beta_o / beta_e.
enum class KernelNormalization { PerKernel, SharedPrefactor };

struct PropagationOptions {
  FresnelForm form = FresnelForm::Auto;
  KernelNormalization normalization = KernelNormalization::PerKernel;
  /// ExactFresnel refuses grids with n above this.
  int exact_grid_cap = 96;
};

/// q * phi + alpha0 (no wrapping of phi).
double axis_angle(const QPlateSpec& plate, double phi);

/// Azimuth of a grid point, counterclockwise from +x, in [-pi, pi).
double grid_azimuth(double x, double y);

/// Per-sample Jones action of the plate without diffraction:
///   (e^{i de} + e^{i do})/2 f + (e^{i de} - e^{i do})/2 M(alpha(phi)) f,
/// de = k0 n_e d, do = k0 n_o d. Unitary per sample.
VectorField thin_element_apply(const VectorField& f, const QPlateSpec& plate,
                               const UniaxialMedium& m);

/// exp[i k0 n_o d + i beta_o |r - rho|^2] in polar coordinates.
cplx fresnel_kernel_ordinary(double r, double phi, double rho, double varphi,
                             const UniaxialMedium& m);

/// Extraordinary kernel with alpha = alpha(varphi) taken at the source point.
/// exact: exp{i k0 n_e d + i beta_e |r - rho|^2 + i dbeta_e [r^2 cos 2(a - phi)
///        + rho^2 cos 2(a - varphi) - 2 r rho cos(2a - phi - varphi)]};
/// otherwise the bracket is dropped.
cplx fresnel_kernel_extraordinary(double r, double phi, double rho, double varphi,
                                  const QPlateSpec& plate, const UniaxialMedium& m, bool exact);

/// Largest chirp rate the real-space kernels of `mode` must resolve.
double max_chirp(const UniaxialMedium& m, KernelMode mode);

/// chirp * spacing * diagonal / pi. The sampled chirp has no aliased
/// stationary point inside the convolution window when this is below 1.
double fresnel_sampling_number(const Grid& grid, double chirp);

/// The form Auto resolves to (RealSpace or TransferFunction) for a Fresnel mode.
FresnelForm resolve_fresnel_form(const Grid& grid, const UniaxialMedium& m, KernelMode mode,
                                 const PropagationOptions& options);

/// Non-fatal conditions worth reporting (discontinuous axis pattern,
/// |dbeta_e|/beta_e above 0.1 for ApproxFresnel).
std::vector<std::string> propagation_warnings(const Grid& grid, const QPlateSpec& plate,
                                              const UniaxialMedium& m, KernelMode mode);

/// Field at the output face of the plate.
///
/// Fresnel modes evaluate
///   E(r) = sum_rho { (Fe + Fo)/2 f + (Fe - Fo)/2 M(alpha(rho)) f } prefactor * spacing^2
/// as 1/2 [Ke * (f + g) + Ko * (f - g)] with g = M(alpha) f, using zero-padded
/// (factor 2) convolutions. ExactFresnel evaluates the extraordinary half by
/// direct O(n^4) summation and requires the real-space sampling criterion.
///
/// Throws SamplingError("fresnel-sampling") if RealSpace is forced or
/// ExactFresnel is requested where the criterion fails, and
/// SamplingError("exact-kernel-grid-cap") above options.exact_grid_cap.
VectorField qplate_propagate(const VectorField& f, const QPlateSpec& plate,
                             const UniaxialMedium& m, KernelMode mode,
                             const PropagationOptions& options = {});

}  // namespace qpsim
