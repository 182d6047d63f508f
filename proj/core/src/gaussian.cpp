#include "sympolar/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sympolar {

namespace {

// Real symmetric embedding of the Hermitian matrix Re + i*Im:
// [[Re, -Im], [Im, Re]]. Its spectrum is that of the Hermitian matrix,
// doubled.
Mat hermitian_embedding(const Mat& re, const Mat& im) {
  const int d = re.rows();
  Mat e(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      e(i, j) = re(i, j);
      e(i, d + j) = -im(i, j);
      e(d + i, j) = im(i, j);
      e(d + i, d + j) = re(i, j);
    }
  }
  return e;
}

}  // namespace

PureGaussian::PureGaussian(PosDefMatrix x_in, SymMatrix y_in, double hbar_in)
    : x(std::move(x_in)), y(std::move(y_in)), hbar(hbar_in) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("PureGaussian: X and Y dimensions differ");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("PureGaussian: hbar must be positive");
  }
}

MixedGaussian::MixedGaussian(PosDefMatrix sigma_in, std::vector<double> z0_in, double hbar_in)
    : sigma(std::move(sigma_in)), z0(std::move(z0_in)), hbar(hbar_in) {
  if (sigma.dim() % 2 != 0) {
    throw std::invalid_argument("MixedGaussian: covariance must have even dimension");
  }
  if (static_cast<int>(z0.size()) != sigma.dim()) {
    throw std::invalid_argument("MixedGaussian: center has wrong dimension");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("MixedGaussian: hbar must be positive");
  }
}

MixedGaussian MixedGaussian::centered(PosDefMatrix sigma, double hbar) {
  std::vector<double> z0(sigma.dim(), 0.0);
  return MixedGaussian(std::move(sigma), std::move(z0), hbar);
}

double MixedGaussian::density(const std::vector<double>& z) const {
  const int d = sigma.dim();
  if (static_cast<int>(z.size()) != d) {
    throw std::invalid_argument("density: point has wrong dimension");
  }
  std::vector<double> dz(d);
  for (int i = 0; i < d; ++i) dz[i] = z[i] - z0[i];
  const Mat sinv = posdef_inverse(sigma).mat();
  const int n = d / 2;
  const double norm = std::pow(2.0 * std::numbers::pi, -n) / std::sqrt(posdef_det(sigma));
  return norm * std::exp(-0.5 * quad_form(sinv, dz));
}

PosDefMatrix wigner_matrix(const PureGaussian& psi) {
  const Mat& x = psi.x.mat();
  const Mat& y = psi.y.mat();
  const Mat xinv = posdef_inverse(psi.x).mat();
  const Mat yxinv = y * xinv;
  const Mat g = assemble_blocks(x + yxinv * y, yxinv, xinv * y, xinv);
  return PosDefMatrix(SymMatrix(g));
}

std::complex<double> wavefunction_eval(const PureGaussian& psi, const std::vector<double>& x) {
  const int n = psi.dof();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("wavefunction_eval: point has wrong dimension");
  }
  const double amp = std::pow(std::numbers::pi * psi.hbar, -0.25 * n) *
                     std::pow(posdef_det(psi.x), 0.25);
  const double re = quad_form(psi.x.mat(), x) / (2.0 * psi.hbar);
  const double im = quad_form(psi.y.mat(), x) / (2.0 * psi.hbar);
  return amp * std::exp(std::complex<double>(-re, -im));
}

double wigner_eval(const PureGaussian& psi, const std::vector<double>& z) {
  const int n = psi.dof();
  if (static_cast<int>(z.size()) != 2 * n) {
    throw std::invalid_argument("wigner_eval: point has wrong dimension");
  }
  const Mat g = wigner_matrix(psi).mat();
  return std::pow(std::numbers::pi * psi.hbar, -n) * std::exp(-quad_form(g, z) / psi.hbar);
}

Ellipsoid to_blob(const PureGaussian& psi) {
  return Ellipsoid(wigner_matrix(psi), psi.hbar);
}

PureGaussian from_blob(const Ellipsoid& omega, double tol) {
  const BlobReport report = is_blob(omega, tol);
  if (!report.is_blob) {
    throw std::invalid_argument("from_blob: ellipsoid matrix is not symplectic");
  }
  const BlockSplit g = block_split(omega.shape_mat());
  const Mat x = inverse(g.pp);
  const Mat y = g.xp * x;
  return PureGaussian(PosDefMatrix(SymMatrix(x)), SymMatrix(y, std::max(tol, kDefaultAsym)),
                      omega.hbar());
}

PureGaussian pushforward(const PureGaussian& psi, const SymplecticMatrix& s) {
  if (s.dof() != psi.dof()) {
    throw std::invalid_argument("pushforward: symplectic matrix dimension mismatch");
  }
  const Mat sinv = s.inverse().mat();
  const Mat g = wigner_matrix(psi).mat();
  const Mat gprime = sinv.transpose() * g * sinv;
  return from_blob(Ellipsoid(PosDefMatrix(SymMatrix(gprime)), psi.hbar));
}

QuantumVerdict quantum_check(const MixedGaussian& rho, double tol) {
  const int n = rho.dof();
  const Mat& sig = rho.sigma.mat();
  const Mat j = standard_J(n);

  const SymEigen herm = sym_eigen(SymMatrix(hermitian_embedding(sig, (rho.hbar / 2.0) * j)));
  const double min_herm = herm.values.front();
  const std::vector<double> lam = symplectic_eigenvalues(rho.sigma);
  const double min_sympl = lam.front();

  const double band = tol * std::max(rho.hbar, sig.frobenius());
  const bool herm_pass = min_herm >= -band;
  const bool sympl_pass = min_sympl >= rho.hbar / 2.0 - band;
  if (herm_pass != sympl_pass) {
    // The two criteria are equivalent; they may only split inside a thin
    // numerical band around the boundary.
    const bool near_h = std::abs(min_herm) <= 1e3 * band;
    const bool near_s = std::abs(min_sympl - rho.hbar / 2.0) <= 1e3 * band;
    if (!near_h && !near_s) {
      throw std::logic_error("quantum_check: Hermitian and symplectic criteria disagree");
    }
  }
  QuantumVerdict v;
  v.is_quantum = herm_pass && sympl_pass;
  v.min_hermitian_eig = min_herm;
  v.min_sympl_eig_of_sigma = min_sympl;
  v.purity = purity(rho);
  return v;
}

double purity(const MixedGaussian& rho) {
  const int n = rho.dof();
  return std::pow(rho.hbar / 2.0, n) / std::sqrt(posdef_det(rho.sigma));
}

Ellipsoid covariance_ellipsoid(const MixedGaussian& rho) {
  const Mat m = (rho.hbar / 2.0) * posdef_inverse(rho.sigma).mat();
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), rho.hbar);
}

XMarginal x_marginal(const MixedGaussian& rho, double tol) {
  const int n = rho.dof();
  const Mat sigma_xx = block_split(rho.sigma.mat()).xx;

  // Independent route through M = (hbar/2) Sigma^{-1}: Sigma_XX =
  // (hbar/2)(M/M_PP)^{-1}.
  const PosDefMatrix m(SymMatrix((rho.hbar / 2.0) * posdef_inverse(rho.sigma).mat()));
  const Mat schur_route =
      (rho.hbar / 2.0) * inverse(schur_complement(m, SchurAgainst::PP).mat());
  const double gap = (sigma_xx - schur_route).frobenius();
  if (gap > tol * std::max(1.0, sigma_xx.frobenius())) {
    throw std::logic_error("x_marginal: covariance block and Schur route disagree");
  }

  XMarginal out{PosDefMatrix(SymMatrix(sigma_xx)), 0.0};
  out.normalizer = std::pow(2.0 * std::numbers::pi, -0.5 * n) /
                   std::sqrt(posdef_det(out.sigma_xx));
  return out;
}

TomographyResult tomography_pure_test(const MixedGaussian& rho, double tol) {
  const PosDefMatrix m(SymMatrix((rho.hbar / 2.0) * posdef_inverse(rho.sigma).mat()));
  const Mat mpp = block_split(m.mat()).pp;
  const Mat lhs = inverse(mpp);
  const Mat rhs = schur_complement(m, SchurAgainst::PP).mat();
  TomographyResult r;
  r.residuals.first = (lhs - rhs).frobenius();
  r.residuals.second = std::abs(determinant(m.mat()) - 1.0);
  r.is_pure = r.residuals.first <= tol;
  return r;
}

double fermi_symbol(const PureGaussian& psi, const std::vector<double>& z) {
  const int n = psi.dof();
  if (static_cast<int>(z.size()) != 2 * n) {
    throw std::invalid_argument("fermi_symbol: point has wrong dimension");
  }
  std::vector<double> x(z.begin(), z.begin() + n);
  std::vector<double> p(z.begin() + n, z.end());
  const std::vector<double> yx = psi.y.mat() * x;
  double kinetic = 0.0;
  for (int i = 0; i < n; ++i) {
    const double c = p[i] + yx[i];
    kinetic += c * c;
  }
  const Mat x2 = psi.x.mat() * psi.x.mat();
  double trace_x = 0.0;
  for (int i = 0; i < n; ++i) trace_x += psi.x.mat()(i, i);
  return kinetic + quad_form(x2, x) - psi.hbar * trace_x;
}

}  // namespace sympolar
