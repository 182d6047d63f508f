#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "sympolar/ellipsoid.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

// Squeezed/rotated Gaussian wavefunction
//   psi(x) = (pi*hbar)^{-n/4} (det X)^{1/4} exp(-(X + iY) x.x / (2*hbar)),
// X positive definite, Y symmetric.
struct PureGaussian {
  PureGaussian(PosDefMatrix x, SymMatrix y, double hbar);
  int dof() const { return x.dim(); }

  PosDefMatrix x;
  SymMatrix y;
  double hbar;
};

// Gaussian density operator described by its covariance matrix and center.
// The center is carried for evaluation but ignored by every geometric
// predicate; second moments do not see it.
struct MixedGaussian {
  MixedGaussian(PosDefMatrix sigma, std::vector<double> z0, double hbar);
  static MixedGaussian centered(PosDefMatrix sigma, double hbar);
  int dof() const { return sigma.dim() / 2; }

  // Phase-space density (2pi)^{-n} (det Sigma)^{-1/2}
  // exp(-Sigma^{-1}(z-z0).(z-z0)/2); integrates to 1.
  double density(const std::vector<double>& z) const;

  PosDefMatrix sigma;
  std::vector<double> z0;
  double hbar;
};

struct QuantumVerdict {
  bool is_quantum = false;
  double min_hermitian_eig = 0.0;       // min eig of Sigma + (i hbar/2) J
  double min_sympl_eig_of_sigma = 0.0;  // compared against hbar/2
  double purity = 0.0;
};

// Phase-space Gaussian matrix G with W psi(z) = (pi*hbar)^{-n} e^{-G z.z/hbar}:
// G = [[X + Y X^{-1} Y, Y X^{-1}], [X^{-1} Y, X^{-1}]]. Symmetric, symplectic,
// det G = 1.
PosDefMatrix wigner_matrix(const PureGaussian& psi);

std::complex<double> wavefunction_eval(const PureGaussian& psi, const std::vector<double>& x);

// Closed-form Wigner function value at a phase-space point.
double wigner_eval(const PureGaussian& psi, const std::vector<double>& z);

// The state's phase-space concentration ellipsoid {G z.z <= hbar}; always a
// quantum blob, and the map is a bijection onto centered blobs.
Ellipsoid to_blob(const PureGaussian& psi);

// Inverse of to_blob: X = (G_PP)^{-1}, Y = G_XP (G_PP)^{-1}. Throws
// std::invalid_argument when the ellipsoid is not a blob within tol.
PureGaussian from_blob(const Ellipsoid& omega, double tol = kDefaultSymp);

// Linear symplectic action on the state, realized on the Wigner matrix as
// G' = S^{-T} G S^{-1}.
PureGaussian pushforward(const PureGaussian& psi, const SymplecticMatrix& s);

// Positivity certificate for the covariance matrix. Evaluates both the
// Hermitian condition min eig(Sigma + (i hbar/2) J) >= 0 (through the real
// 4n x 4n embedding) and the spectral condition min sympl. eig(Sigma) >=
// hbar/2. The two must agree away from the boundary; a disagreement beyond
// the tolerance band throws std::logic_error.
QuantumVerdict quantum_check(const MixedGaussian& rho, double tol = kDefaultRecon);

// Tr(rho^2) = (hbar/2)^n (det Sigma)^{-1/2}. Values above 1 indicate a
// non-quantum covariance and are returned as-is for diagnosis.
double purity(const MixedGaussian& rho);

// Ellipsoid {M z.z <= hbar} with M = (hbar/2) Sigma^{-1}; quantized exactly
// when the state is quantum.
Ellipsoid covariance_ellipsoid(const MixedGaussian& rho);

struct XMarginal {
  PosDefMatrix sigma_xx;
  double normalizer;  // (2 pi)^{-n/2} (det Sigma_XX)^{-1/2}
};

// Position-space marginal of the density: covariance block Sigma_XX. Also
// evaluated through the Schur route (hbar/2)(M/M_PP)^{-1}; the two must
// agree within tol or a std::logic_error is thrown.
XMarginal x_marginal(const MixedGaussian& rho, double tol = 1e-9);

struct TomographyResult {
  bool is_pure = false;
  // ||M_PP^{-1} - M/M_PP||_F and |det M - 1|, for M = (hbar/2) Sigma^{-1}.
  std::pair<double, double> residuals{0.0, 0.0};
};

// Closed-form version of the tomographic purity criterion: the position
// marginal determines the state exactly when M_PP^{-1} = M/M_PP, which in
// turn forces det M = 1.
TomographyResult tomography_pure_test(const MixedGaussian& rho, double tol = 1e-9);

// Phase-space symbol H(x,p) = |p + Yx|^2 + X^2 x.x - hbar Tr X whose zero
// set is the energy shell on which psi concentrates.
double fermi_symbol(const PureGaussian& psi, const std::vector<double>& z);

}  // namespace sympolar
