#pragma once

#include <cstdint>
#include <vector>

#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/matcore.hpp"

// Sampling- and quadrature-based re-derivations of the closed forms in the
// library. Every routine here is deliberately independent of the code path
// it checks: membership goes through support functions or direct
// minimization, transforms through trapezoid sums, derivatives through
// finite differences. All results are deterministic for a fixed config.
namespace sympolar::oracle {

struct OracleConfig {
  int samples = 20000;
  std::uint64_t seed = 0;
  int quadrature_order = 64;  // trapezoid grids use 64 * quadrature_order points
  double grid_extent = 8.0;   // integration half-width in decay-length units
};

// Membership of p in the dual of E via the support function:
// sup { p.x : A x.x <= hbar } = sqrt(hbar * A^{-1} p.p) <= hbar.
bool support_membership(const Ellipsoid& e, const std::vector<double>& p);

// Samples the boundary of `inner` (Gaussian directions mapped through
// M^{-1/2}) and reports whether every sample lies in `outer` (1e-9 slack).
bool mc_containment(const Ellipsoid& inner, const Ellipsoid& outer, const OracleConfig& cfg);

struct AgreementReport {
  int samples = 0;
  int disagreements = 0;
  int boundary_skipped = 0;
};

// For sampled base-plane points x, compares membership in the projected
// ellipsoid against direct minimization of the full quadratic over the
// complementary variables. Points within 1e-9 (relative) of either boundary
// are skipped.
AgreementReport mc_projection(const Ellipsoid& omega, CoordPlane tag, const OracleConfig& cfg);

// Trapezoid evaluation of the Wigner integral
// (2 pi hbar)^{-1} \int e^{-i p y / hbar} psi(x + y/2) conj(psi(x - y/2)) dy
// for one degree of freedom.
double wigner_numeric(const PureGaussian& psi, const std::vector<double>& z,
                      const OracleConfig& cfg);

struct MoyalCheck {
  double lhs = 0.0;       // \int W psi * W phi over phase space
  double rhs = 0.0;       // (2 pi hbar)^{-1} |<psi|phi>|^2
  double residual = 0.0;  // |lhs - rhs|
};

// Overlap identity for one degree of freedom, both sides by quadrature.
MoyalCheck moyal_numeric(const PureGaussian& psi, const PureGaussian& phi,
                         const OracleConfig& cfg);

// Quadrature of rho(x, .) for one degree of freedom; to be compared against
// the closed-form position marginal.
double marginal_numeric(const MixedGaussian& rho, double x, const OracleConfig& cfg);

// Residual max |H_op psi| / max |psi| of the second-order ODE the
// generalized Gaussian satisfies,
//   -hbar^2 psi'' - i hbar Y (2 x psi' + psi) + (X^2 + Y^2) x^2 psi
//     - hbar X psi = 0  (one degree of freedom),
// with 4th-order central differences on a fine grid.
double pde_residual(const PureGaussian& psi, const OracleConfig& cfg);

struct TomographyCurves {
  std::vector<double> grid;
  std::vector<double> lhs_curve;  // Fourier transform of p -> rho(0, p/2)
  std::vector<double> rhs_curve;  // 2^n * position marginal
  double max_gap = 0.0;
};

// Numerical form of the tomographic purity identity for one degree of
// freedom. The transform uses the plain kernel \int e^{-i p x / hbar} f(p) dp;
// with that convention the two curves coincide exactly on pure states.
TomographyCurves tomography_numeric(const MixedGaussian& rho, const OracleConfig& cfg);

}  // namespace sympolar::oracle
