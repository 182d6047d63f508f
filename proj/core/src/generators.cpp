#include "sympolar/generators.hpp"

#include <stdexcept>

namespace sympolar::gen {

Mat random_orthogonal(int d, Rng& rng) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
  return orthonormalize_columns(g);
}

SymMatrix random_symmetric(int d, double scale, Rng& rng) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = scale * rng.uniform(-1.0, 1.0);
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = m(j, i) = scale * rng.uniform(-1.0, 1.0);
    }
  }
  return SymMatrix(m);
}

PosDefMatrix random_posdef(int d, double eig_lo, double eig_hi, Rng& rng) {
  if (!(0.0 < eig_lo && eig_lo <= eig_hi)) {
    throw std::invalid_argument("random_posdef: eigenvalue range must be positive");
  }
  const Mat q = random_orthogonal(d, rng);
  std::vector<double> e(d);
  for (double& v : e) v = rng.uniform(eig_lo, eig_hi);
  const Mat m = q * Mat::diag(e) * q.transpose();
  return PosDefMatrix(SymMatrix(m));
}

std::vector<double> random_vector(int d, double scale, Rng& rng) {
  std::vector<double> v(d);
  for (double& x : v) x = scale * rng.uniform(-1.0, 1.0);
  return v;
}

Ellipsoid random_ellipsoid(int dim, double hbar, double eig_lo, double eig_hi, Rng& rng) {
  return Ellipsoid(random_posdef(dim, eig_lo, eig_hi, rng), hbar);
}

Ellipsoid ellipsoid_with_spectrum(const std::vector<double>& lambda, double hbar, Rng& rng) {
  const int n = static_cast<int>(lambda.size());
  const SymplecticMatrix s = random_symplectic(n, rng.next_u64());
  std::vector<double> d(2 * n);
  for (int j = 0; j < n; ++j) d[j] = d[n + j] = lambda[j];
  const Mat m = s.mat().transpose() * Mat::diag(d) * s.mat();
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), hbar);
}

PureGaussian random_pure_gaussian(int n, double hbar, Rng& rng) {
  PosDefMatrix x = random_posdef(n, 0.4, 2.5, rng);
  SymMatrix y = random_symmetric(n, 0.8, rng);
  return PureGaussian(std::move(x), std::move(y), hbar);
}

MixedGaussian sigma_with_spectrum(const std::vector<double>& nu, double hbar, Rng& rng) {
  const int n = static_cast<int>(nu.size());
  const SymplecticMatrix s = random_symplectic(n, rng.next_u64());
  std::vector<double> d(2 * n);
  for (int j = 0; j < n; ++j) d[j] = d[n + j] = 0.5 * hbar * nu[j];
  const Mat sigma = s.mat().transpose() * Mat::diag(d) * s.mat();
  return MixedGaussian::centered(PosDefMatrix(SymMatrix(sigma)), hbar);
}

}  // namespace sympolar::gen
