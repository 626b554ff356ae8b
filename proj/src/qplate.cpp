#include "qpsim/qplate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <tuple>

#include "parallel.hpp"
#include "qpsim/errors.hpp"

namespace qpsim {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

double squared_distance(double r, double phi, double rho, double varphi) {
  return r * r + rho * rho - 2.0 * r * rho * std::cos(phi - varphi);
}

// f, and g = M(alpha(phi')) f, sampled on the grid.
struct SourceTerms {
  std::vector<cplx> gx, gy;
  std::vector<double> cos_alpha, sin_alpha;
};

SourceTerms flip_sources(const VectorField& f, const QPlateSpec& plate) {
  const Grid& g = f.grid();
  SourceTerms s;
  s.gx.resize(g.size());
  s.gy.resize(g.size());
  s.cos_alpha.resize(g.size());
  s.sin_alpha.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double alpha = axis_angle(plate, grid_azimuth(g.x_at(i), g.y_at(i)));
    const auto [gx, gy] = local_flip_matrix(alpha).apply(f.vx()[i], f.vy()[i]);
    s.gx[i] = gx;
    s.gy[i] = gy;
    s.cos_alpha[i] = std::cos(alpha);
    s.sin_alpha[i] = std::sin(alpha);
  }
  return s;
}

// Places an n x n field in the top-left corner of a 2n x 2n zero buffer and
// transforms it.
FftBuffer padded_spectrum(const Grid& g, const std::vector<cplx>& values) {
  const int n = g.n();
  const int big = 2 * n;
  FftBuffer buf(static_cast<std::size_t>(big) * big);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      buf[static_cast<std::size_t>(row) * big + col] = values[g.index(row, col)];
    }
  }
  fft2(buf, big, FftDirection::Forward);
  return buf;
}

// DFT-domain multiplier of the kernel (prefactor_chirp / (i pi)) exp(i phase + i chirp R^2)
// on the padded grid. Displacement zero sits at index 0.
FftBuffer kernel_multiplier(const Grid& g, double chirp, double phase, double prefactor_chirp,
                            FresnelForm form) {
  const int n = g.n();
  const int big = 2 * n;
  const double dx = g.spacing();
  FftBuffer t(static_cast<std::size_t>(big) * big);
  auto wrapped = [big](int i) { return i < big / 2 ? i : i - big; };

  if (form == FresnelForm::RealSpace) {
    const cplx scale = prefactor_chirp / (kI * kPi) * g.cell_area();
    for (int row = 0; row < big; ++row) {
      const double y = wrapped(row) * dx;
      for (int col = 0; col < big; ++col) {
        const double x = wrapped(col) * dx;
        t[static_cast<std::size_t>(row) * big + col] =
            scale * std::polar(1.0, phase + chirp * (x * x + y * y));
      }
    }
    fft2(t, big, FftDirection::Forward);
  } else {
    const double dk = 2.0 * kPi / (big * dx);
    const double amplitude = prefactor_chirp / chirp;
    for (int row = 0; row < big; ++row) {
      const double ky = wrapped(row) * dk;
      for (int col = 0; col < big; ++col) {
        const double kx = wrapped(col) * dk;
        t[static_cast<std::size_t>(row) * big + col] =
            std::polar(amplitude, phase - (kx * kx + ky * ky) / (4.0 * chirp));
      }
    }
  }
  return t;
}

// Inverse transform of (ta * sa + tb * sb) / 2, cropped back to the n x n grid.
std::vector<cplx> combine(const Grid& g, const FftBuffer& ta, const FftBuffer& sa,
                          const FftBuffer* tb, const FftBuffer* sb) {
  const int n = g.n();
  const int big = 2 * n;
  FftBuffer acc(sa.size());
  const double norm = 0.5 / static_cast<double>(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    cplx v = ta[i] * sa[i];
    if (tb != nullptr) v += (*tb)[i] * (*sb)[i];
    acc[i] = v * norm;
  }
  fft2(acc, big, FftDirection::Inverse);
  std::vector<cplx> out(g.size());
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      out[g.index(row, col)] = acc[static_cast<std::size_t>(row) * big + col];
    }
  }
  return out;
}

void check_sampling(const Grid& grid, const UniaxialMedium& m, KernelMode mode) {
  const double number = fresnel_sampling_number(grid, max_chirp(m, mode));
  if (!(number < 1.0)) {
    std::ostringstream msg;
    msg << "chirp * spacing * diagonal / pi = " << number
        << " must be below 1 for real-space kernels; use a finer or smaller grid or a thicker plate";
    throw SamplingError("fresnel-sampling", msg.str());
  }
}

VectorField approx_fresnel(const VectorField& f, const QPlateSpec& plate, const UniaxialMedium& m,
                           FresnelForm form, KernelNormalization normalization) {
  const Grid& g = f.grid();
  const SourceTerms src = flip_sources(f, plate);
  std::vector<cplx> px(g.size()), py(g.size()), mx(g.size()), my(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    px[i] = f.vx()[i] + src.gx[i];
    py[i] = f.vy()[i] + src.gy[i];
    mx[i] = f.vx()[i] - src.gx[i];
    my[i] = f.vy()[i] - src.gy[i];
  }
  const double k0 = UniaxialMedium::k0();
  const double be = m.beta_e();
  const double bo = m.beta_o();
  const FftBuffer te = kernel_multiplier(
      g, be, k0 * m.n_e() * m.thickness(),
      normalization == KernelNormalization::PerKernel ? be : bo, form);
  const FftBuffer to = kernel_multiplier(g, bo, k0 * m.n_o() * m.thickness(), bo, form);

  const FftBuffer spx = padded_spectrum(g, px);
  const FftBuffer smx = padded_spectrum(g, mx);
  auto out_x = combine(g, te, spx, &to, &smx);
  const FftBuffer spy = padded_spectrum(g, py);
  const FftBuffer smy = padded_spectrum(g, my);
  auto out_y = combine(g, te, spy, &to, &smy);
  return VectorField(g, std::move(out_x), std::move(out_y));
}

VectorField exact_fresnel(const VectorField& f, const QPlateSpec& plate, const UniaxialMedium& m) {
  const Grid& g = f.grid();
  const SourceTerms src = flip_sources(f, plate);
  std::vector<cplx> hx(g.size()), hy(g.size()), mx(g.size()), my(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    hx[i] = f.vx()[i] + src.gx[i];
    hy[i] = f.vy()[i] + src.gy[i];
    mx[i] = f.vx()[i] - src.gx[i];
    my[i] = f.vy()[i] - src.gy[i];
  }

  // Ordinary half: shift invariant, zero-padded FFT convolution.
  const double k0 = UniaxialMedium::k0();
  const double bo = m.beta_o();
  const FftBuffer to =
      kernel_multiplier(g, bo, k0 * m.n_o() * m.thickness(), bo, FresnelForm::RealSpace);
  auto out_x = combine(g, to, padded_spectrum(g, mx), nullptr, nullptr);
  auto out_y = combine(g, to, padded_spectrum(g, my), nullptr, nullptr);

  // Extraordinary half: (beta_e + dbeta_e) R_par^2 + (beta_e - dbeta_e) R_perp^2
  // with R_par along the source-point axis; same as the polar bracket form.
  const double along = m.beta_e() + m.delta_beta_e();
  const double across = m.beta_e() - m.delta_beta_e();
  const double phase0 = k0 * m.n_e() * m.thickness();
  const cplx weight = 0.5 * bo / (kI * kPi) * g.cell_area();
  const int n = g.n();
  std::vector<double> xs(g.size()), ys(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    xs[j] = g.x_at(j);
    ys[j] = g.y_at(j);
  }

  detail::parallel_for(n, detail::default_workers(), [&](int row) {
    for (int col = 0; col < n; ++col) {
      const std::size_t out_idx = g.index(row, col);
      const double x = g.coord(col);
      const double y = g.coord(row);
      cplx sx = 0.0;
      cplx sy = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double rx = x - xs[j];
        const double ry = y - ys[j];
        const double r_par = rx * src.cos_alpha[j] + ry * src.sin_alpha[j];
        const double r_perp = -rx * src.sin_alpha[j] + ry * src.cos_alpha[j];
        const cplx k = std::polar(1.0, phase0 + along * r_par * r_par + across * r_perp * r_perp);
        sx += k * hx[j];
        sy += k * hy[j];
      }
      out_x[out_idx] += weight * sx;
      out_y[out_idx] += weight * sy;
    }
  });
  return VectorField(g, std::move(out_x), std::move(out_y));
}

}  // namespace

bool QPlateSpec::axis_is_continuous() const noexcept {
  const double twice = 2.0 * q;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

std::string QPlateSpec::warning() const {
  if (axis_is_continuous()) return {};
  std::ostringstream msg;
  msg << "q = " << q << ": 2q is not an integer, the axis pattern has a discontinuity line";
  return msg.str();
}

double axis_angle(const QPlateSpec& plate, double phi) { return plate.q * phi + plate.alpha0; }

double grid_azimuth(double x, double y) {
  const double phi = std::atan2(y, x);
  return phi >= kPi ? phi - 2.0 * kPi : phi;
}

VectorField thin_element_apply(const VectorField& f, const QPlateSpec& plate,
                               const UniaxialMedium& m) {
  const Grid& g = f.grid();
  const double k0 = UniaxialMedium::k0();
  const cplx eo = std::polar(1.0, k0 * m.n_o() * m.thickness());
  const cplx ee = std::polar(1.0, k0 * m.n_e() * m.thickness());
  const cplx keep = 0.5 * (ee + eo);
  const cplx flip = 0.5 * (ee - eo);
  std::vector<cplx> vx(g.size()), vy(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double alpha = axis_angle(plate, grid_azimuth(g.x_at(i), g.y_at(i)));
    const JonesMatrix u = JonesMatrix::identity() * keep + local_flip_matrix(alpha) * flip;
    std::tie(vx[i], vy[i]) = u.apply(f.vx()[i], f.vy()[i]);
  }
  return VectorField(g, std::move(vx), std::move(vy));
}

cplx fresnel_kernel_ordinary(double r, double phi, double rho, double varphi,
                             const UniaxialMedium& m) {
  const double k0 = UniaxialMedium::k0();
  return std::polar(1.0, k0 * m.n_o() * m.thickness() +
                             m.beta_o() * squared_distance(r, phi, rho, varphi));
}

cplx fresnel_kernel_extraordinary(double r, double phi, double rho, double varphi,
                                  const QPlateSpec& plate, const UniaxialMedium& m, bool exact) {
  const double k0 = UniaxialMedium::k0();
  double phase = k0 * m.n_e() * m.thickness() + m.beta_e() * squared_distance(r, phi, rho, varphi);
  if (exact) {
    const double a = axis_angle(plate, varphi);
    phase += m.delta_beta_e() * (r * r * std::cos(2.0 * (a - phi)) +
                                 rho * rho * std::cos(2.0 * (a - varphi)) -
                                 2.0 * r * rho * std::cos(2.0 * a - phi - varphi));
  }
  return std::polar(1.0, phase);
}

double max_chirp(const UniaxialMedium& m, KernelMode mode) {
  const double approx = std::max(m.beta_o(), m.beta_e());
  if (mode != KernelMode::ExactFresnel) return approx;
  return std::max(approx, m.beta_e() + std::abs(m.delta_beta_e()));
}

double fresnel_sampling_number(const Grid& grid, double chirp) {
  return chirp * grid.spacing() * grid.diagonal() / kPi;
}

FresnelForm resolve_fresnel_form(const Grid& grid, const UniaxialMedium& m, KernelMode mode,
                                 const PropagationOptions& options) {
  if (mode == KernelMode::ExactFresnel) return FresnelForm::RealSpace;
  if (options.form != FresnelForm::Auto) return options.form;
  return fresnel_sampling_number(grid, max_chirp(m, mode)) < 1.0 ? FresnelForm::RealSpace
                                                                 : FresnelForm::TransferFunction;
}

std::vector<std::string> propagation_warnings(const Grid& grid, const QPlateSpec& plate,
                                              const UniaxialMedium& m, KernelMode mode) {
  (void)grid;
  std::vector<std::string> out;
  if (auto w = plate.warning(); !w.empty()) out.push_back(std::move(w));
  if (mode == KernelMode::ApproxFresnel) {
    const double ratio = std::abs(m.delta_beta_e()) / m.beta_e();
    if (ratio > 0.1) {
      std::ostringstream msg;
      msg << "|dbeta_e|/beta_e = " << ratio << " exceeds 0.1; the approximate kernel is inaccurate";
      out.push_back(msg.str());
    }
  }
  return out;
}

VectorField qplate_propagate(const VectorField& f, const QPlateSpec& plate,
                             const UniaxialMedium& m, KernelMode mode,
                             const PropagationOptions& options) {
  switch (mode) {
    case KernelMode::ThinElement:
      return thin_element_apply(f, plate, m);
    case KernelMode::ApproxFresnel: {
      const FresnelForm form = resolve_fresnel_form(f.grid(), m, mode, options);
      if (form == FresnelForm::RealSpace) check_sampling(f.grid(), m, mode);
      return approx_fresnel(f, plate, m, form, options.normalization);
    }
    case KernelMode::ExactFresnel: {
      if (f.grid().n() > options.exact_grid_cap) {
        throw SamplingError("exact-kernel-grid-cap",
                            "ExactFresnel is O(n^4); n = " + std::to_string(f.grid().n()) +
                                " exceeds the cap of " + std::to_string(options.exact_grid_cap));
      }
      check_sampling(f.grid(), m, mode);
      return exact_fresnel(f, plate, m);
    }
  }
  throw std::invalid_argument("qplate_propagate: unknown kernel mode");
}

}  // namespace qpsim
