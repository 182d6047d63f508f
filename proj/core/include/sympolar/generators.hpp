#pragma once

#include <cstdint>
#include <vector>

#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/rng.hpp"
#include "sympolar/symplectic.hpp"

// Seeded random inputs for the property suites: orthogonal and positive
// definite matrices with controlled spectra, ellipsoids with prescribed
// symplectic eigenvalues, and Gaussian states on either side of the
// quantum boundary.
namespace sympolar::gen {

Mat random_orthogonal(int d, Rng& rng);

SymMatrix random_symmetric(int d, double scale, Rng& rng);

// Q diag(e) Q^T with eigenvalues drawn uniformly from [eig_lo, eig_hi].
PosDefMatrix random_posdef(int d, double eig_lo, double eig_hi, Rng& rng);

std::vector<double> random_vector(int d, double scale, Rng& rng);

// Generic ellipsoid whose shape matrix has eigenvalues in [eig_lo, eig_hi].
Ellipsoid random_ellipsoid(int dim, double hbar, double eig_lo, double eig_hi, Rng& rng);

// Phase-space ellipsoid with prescribed symplectic spectrum:
// M = S^T diag(lambda, lambda) S for a random symplectic S, so that
// symplectic_eigenvalues(M) returns exactly `lambda` (sorted).
Ellipsoid ellipsoid_with_spectrum(const std::vector<double>& lambda, double hbar, Rng& rng);

PureGaussian random_pure_gaussian(int n, double hbar, Rng& rng);

// Centered covariance with prescribed symplectic spectrum (hbar/2) * nu:
// Sigma = (hbar/2) S^T diag(nu, nu) S. nu = 1 everywhere gives a pure state;
// any nu > 1 gives a mixed one; any nu < 1 breaks the quantum condition.
MixedGaussian sigma_with_spectrum(const std::vector<double>& nu, double hbar, Rng& rng);

}  // namespace sympolar::gen
