#include "sympolar/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "sympolar/rng.hpp"

namespace sympolar::oracle {

namespace {

void require_single_dof(int n, const char* who) {
  if (n != 1) {
    throw std::invalid_argument(std::string(who) + ": quadrature oracle covers one degree of freedom only");
  }
}

void require_centered(const MixedGaussian& rho, const char* who) {
  for (double c : rho.z0) {
    if (c != 0.0) {
      throw std::invalid_argument(std::string(who) + ": state must be centered");
    }
  }
}

std::vector<double> unit_gaussian_direction(Rng& rng, int d) {
  std::vector<double> u(d);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int i = 0; i < d; ++i) {
      u[i] = rng.normal();
      norm2 += u[i] * u[i];
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : u) v *= inv;
  return u;
}

// Trapezoid weights are uniform here: integrands decay below 1e-14 at the
// grid ends, so the half-weight end correction is immaterial.
template <typename F>
double trapezoid(double lo, double hi, int npts, F&& f) {
  const double h = (hi - lo) / npts;
  double acc = 0.5 * (f(lo) + f(hi));
  for (int k = 1; k < npts; ++k) acc += f(lo + k * h);
  return acc * h;
}

}  // namespace

bool support_membership(const Ellipsoid& e, const std::vector<double>& p) {
  if (static_cast<int>(p.size()) != e.dim()) {
    throw std::invalid_argument("support_membership: point has wrong dimension");
  }
  const Mat ainv = posdef_inverse(e.shape()).mat();
  const double sup = std::sqrt(e.hbar() * quad_form(ainv, p));
  return sup <= e.hbar();
}

bool mc_containment(const Ellipsoid& inner, const Ellipsoid& outer, const OracleConfig& cfg) {
  if (inner.dim() != outer.dim()) {
    throw std::invalid_argument("mc_containment: dimensions differ");
  }
  const int d = inner.dim();
  const Mat half = sym_pow(inner.shape(), -0.5).mat();
  const double r = std::sqrt(inner.hbar());
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const std::vector<double> u = unit_gaussian_direction(rng, d);
    std::vector<double> z = half * u;
    for (double& v : z) v *= r;
    if (!outer.member(z, 1e-9)) return false;
  }
  return true;
}

AgreementReport mc_projection(const Ellipsoid& omega, CoordPlane tag, const OracleConfig& cfg) {
  const int n = omega.dof();
  const double hbar = omega.hbar();
  const Mat& m = omega.shape_mat();
  const BlockSplit blocks = block_split(m);

  // Membership via the library path.
  const Ellipsoid proj = project(omega, tag);

  // Independent path: minimize the full quadratic over the complementary
  // coordinates. For base x the minimizer solves M_PP p = -M_PX x; for base
  // p it solves M_XX x = -M_XP p.
  const Mat& base_base = (tag == CoordPlane::X) ? blocks.xx : blocks.pp;
  const Mat& base_comp = (tag == CoordPlane::X) ? blocks.px : blocks.xp;
  const Mat& comp_comp = (tag == CoordPlane::X) ? blocks.pp : blocks.xx;
  const Mat comp_inv = inverse(comp_comp);

  // The projection is contained in the ball of radius sqrt(hbar/eig_min(M)):
  // the minimized quadratic still dominates eig_min(M) |x|^2. Sample a
  // slightly larger ball to probe both verdicts.
  const double eig_min = sym_eigen(SymMatrix(m)).values.front();
  const double radius = 1.2 * std::sqrt(hbar / eig_min);

  Rng rng(cfg.seed);
  AgreementReport report;
  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<double> x = unit_gaussian_direction(rng, n);
    const double r = radius * std::pow(rng.uniform(), 1.0 / n);
    for (double& v : x) v *= r;

    const double q_lib = quad_form(proj.shape_mat(), x);
    const std::vector<double> rhs = base_comp * x;
    std::vector<double> comp = comp_inv * rhs;
    for (double& v : comp) v = -v;
    const double q_min = quad_form(base_base, x) + 2.0 * dot(rhs, comp) +
                         quad_form(comp_comp, comp);

    ++report.samples;
    if (std::abs(q_lib - hbar) <= 1e-9 * hbar || std::abs(q_min - hbar) <= 1e-9 * hbar) {
      ++report.boundary_skipped;
      continue;
    }
    if ((q_lib <= hbar) != (q_min <= hbar)) ++report.disagreements;
  }
  return report;
}

double wigner_numeric(const PureGaussian& psi, const std::vector<double>& z,
                      const OracleConfig& cfg) {
  require_single_dof(psi.dof(), "wigner_numeric");
  if (z.size() != 2) {
    throw std::invalid_argument("wigner_numeric: phase-space point must be 2-dimensional");
  }
  const double hbar = psi.hbar;
  const double x = z[0], p = z[1];
  // |psi(x + y/2) psi(x - y/2)| decays like exp(-X y^2 / (4 hbar)).
  const double decay = 2.0 * std::sqrt(hbar / psi.x.mat()(0, 0));
  const double half_width = cfg.grid_extent * decay;
  const int npts = 64 * cfg.quadrature_order;

  std::complex<double> acc = 0.0;
  const double h = 2.0 * half_width / npts;
  for (int k = 0; k <= npts; ++k) {
    const double y = -half_width + k * h;
    const std::complex<double> val = wavefunction_eval(psi, {x + 0.5 * y}) *
                                     std::conj(wavefunction_eval(psi, {x - 0.5 * y})) *
                                     std::exp(std::complex<double>(0.0, -p * y / hbar));
    acc += (k == 0 || k == npts) ? 0.5 * val : val;
  }
  acc *= h;
  return acc.real() / (2.0 * std::numbers::pi * hbar);
}

MoyalCheck moyal_numeric(const PureGaussian& psi, const PureGaussian& phi,
                         const OracleConfig& cfg) {
  require_single_dof(psi.dof(), "moyal_numeric");
  require_single_dof(phi.dof(), "moyal_numeric");
  if (psi.hbar != phi.hbar) {
    throw std::invalid_argument("moyal_numeric: states carry different hbar");
  }
  const double hbar = psi.hbar;

  const Mat gsum = wigner_matrix(psi).mat() + wigner_matrix(phi).mat();
  const double lam_min = sym_eigen(SymMatrix(gsum)).values.front();
  const double half_width = cfg.grid_extent * std::sqrt(hbar / lam_min);
  const int npts = 8 * cfg.quadrature_order;
  const double h = 2.0 * half_width / npts;

  // W psi * W phi = (pi hbar)^{-2} exp(-(G1 + G2) z.z / hbar).
  const double pref = std::pow(std::numbers::pi * hbar, -2.0);
  double lhs = 0.0;
  for (int i = 0; i <= npts; ++i) {
    const double x = -half_width + i * h;
    const double wx = (i == 0 || i == npts) ? 0.5 : 1.0;
    for (int j = 0; j <= npts; ++j) {
      const double p = -half_width + j * h;
      const double wp = (j == 0 || j == npts) ? 0.5 : 1.0;
      const double q = gsum(0, 0) * x * x + 2.0 * gsum(0, 1) * x * p + gsum(1, 1) * p * p;
      lhs += wx * wp * pref * std::exp(-q / hbar);
    }
  }
  lhs *= h * h;

  const double xsum = psi.x.mat()(0, 0) + phi.x.mat()(0, 0);
  const double hw1 = cfg.grid_extent * std::sqrt(2.0 * hbar / xsum);
  const int npts1 = 64 * cfg.quadrature_order;
  std::complex<double> overlap = 0.0;
  const double h1 = 2.0 * hw1 / npts1;
  for (int k = 0; k <= npts1; ++k) {
    const double x = -hw1 + k * h1;
    const std::complex<double> val =
        std::conj(wavefunction_eval(psi, {x})) * wavefunction_eval(phi, {x});
    overlap += (k == 0 || k == npts1) ? 0.5 * val : val;
  }
  overlap *= h1;

  MoyalCheck out;
  out.lhs = lhs;
  out.rhs = std::norm(overlap) / (2.0 * std::numbers::pi * hbar);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double marginal_numeric(const MixedGaussian& rho, double x, const OracleConfig& cfg) {
  require_single_dof(rho.dof(), "marginal_numeric");
  require_centered(rho, "marginal_numeric");
  const Mat sinv = posdef_inverse(rho.sigma).mat();
  const double norm = std::pow(2.0 * std::numbers::pi, -1.0) / std::sqrt(posdef_det(rho.sigma));

  // Complete the square in p: conditional center and width of the slice.
  const double center = -sinv(0, 1) * x / sinv(1, 1);
  const double width = 1.0 / std::sqrt(sinv(1, 1));
  const double half_width = cfg.grid_extent * width;
  const int npts = 64 * cfg.quadrature_order;

  auto slice = [&](double p) {
    const double q = sinv(0, 0) * x * x + 2.0 * sinv(0, 1) * x * p + sinv(1, 1) * p * p;
    return norm * std::exp(-0.5 * q);
  };
  return trapezoid(center - half_width, center + half_width, npts, slice);
}

double pde_residual(const PureGaussian& psi, const OracleConfig& cfg) {
  require_single_dof(psi.dof(), "pde_residual");
  (void)cfg;
  const double hbar = psi.hbar;
  const double x_coef = psi.x.mat()(0, 0);
  const double y_coef = psi.y.mat()(0, 0);

  const double range = 4.0 * std::sqrt(hbar / x_coef);
  const double h = 1e-3 * std::sqrt(hbar);
  const int half = static_cast<int>(std::ceil(range / h));
  const int lo = -half - 2, hi = half + 2;  // two-point halo for the stencil

  std::vector<std::complex<double>> psi_vals(hi - lo + 1);
  for (int k = lo; k <= hi; ++k) {
    psi_vals[k - lo] = wavefunction_eval(psi, {k * h});
  }
  const double psi_max = std::abs(wavefunction_eval(psi, {0.0}));

  const std::complex<double> i_unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = -half; k <= half; ++k) {
    const int c = k - lo;
    const std::complex<double> d2 =
        (-psi_vals[c - 2] + 16.0 * psi_vals[c - 1] - 30.0 * psi_vals[c] +
         16.0 * psi_vals[c + 1] - psi_vals[c + 2]) /
        (12.0 * h * h);
    const std::complex<double> d1 =
        (psi_vals[c - 2] - 8.0 * psi_vals[c - 1] + 8.0 * psi_vals[c + 1] - psi_vals[c + 2]) /
        (12.0 * h);
    const double x = k * h;
    const std::complex<double> hpsi =
        -hbar * hbar * d2 - i_unit * hbar * y_coef * (2.0 * x * d1 + psi_vals[c]) +
        (x_coef * x_coef + y_coef * y_coef) * x * x * psi_vals[c] -
        hbar * x_coef * psi_vals[c];
    worst = std::max(worst, std::abs(hpsi));
  }
  return worst / psi_max;
}

TomographyCurves tomography_numeric(const MixedGaussian& rho, const OracleConfig& cfg) {
  require_single_dof(rho.dof(), "tomography_numeric");
  require_centered(rho, "tomography_numeric");
  const double hbar = rho.hbar;
  const Mat sinv = posdef_inverse(rho.sigma).mat();
  const double norm = std::pow(2.0 * std::numbers::pi, -1.0) / std::sqrt(posdef_det(rho.sigma));
  auto density = [&](double x, double p) {
    const double q = sinv(0, 0) * x * x + 2.0 * sinv(0, 1) * x * p + sinv(1, 1) * p * p;
    return norm * std::exp(-0.5 * q);
  };

  // rho(0, p/2) decays like exp(-sinv_pp p^2 / 8).
  const double sigma_p = 1.0 / std::sqrt(sinv(1, 1));
  const double hw_p = 2.0 * cfg.grid_extent * sigma_p;
  const int npts_p = 64 * cfg.quadrature_order;

  const double sigma_x = std::sqrt(rho.sigma.mat()(0, 0));
  const int npts_x = 128;

  TomographyCurves out;
  out.grid.reserve(npts_x + 1);
  for (int k = 0; k <= npts_x; ++k) {
    out.grid.push_back(-4.0 * sigma_x + 8.0 * sigma_x * k / npts_x);
  }

  for (double x : out.grid) {
    // Plain-kernel transform of the even slice p -> rho(0, p/2); evenness
    // reduces the kernel to a cosine.
    const double lhs = trapezoid(-hw_p, hw_p, npts_p, [&](double p) {
      return density(0.0, 0.5 * p) * std::cos(p * x / hbar);
    });

    const double center = -sinv(0, 1) * x / sinv(1, 1);
    const double hw_m = cfg.grid_extent / std::sqrt(sinv(1, 1));
    const double rhs = 2.0 * trapezoid(center - hw_m, center + hw_m, npts_p,
                                       [&](double p) { return density(x, p); });

    out.lhs_curve.push_back(lhs);
    out.rhs_curve.push_back(rhs);
    out.max_gap = std::max(out.max_gap, std::abs(lhs - rhs));
  }
  return out;
}

}  // namespace sympolar::oracle
