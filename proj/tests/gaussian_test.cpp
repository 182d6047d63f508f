#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/generators.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/rng.hpp"
#include "sympolar/symplectic.hpp"

using namespace sympolar;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(const Mat& a, const Mat& b) {
  const double scale = std::max({a.frobenius(), b.frobenius(), 1e-300});
  return (a - b).frobenius() / scale;
}

PureGaussian pure1(double x, double y, double hbar = 1.0) {
  return PureGaussian(PosDefMatrix(Mat{{x}}), SymMatrix(Mat{{y}}), hbar);
}

}  // namespace

TEST_CASE("wigner matrix: frozen value and structural invariants") {
  const PosDefMatrix g = wigner_matrix(pure1(1.0, 1.0));
  CHECK(rel_diff(g.mat(), Mat{{2.0, 1.0}, {1.0, 1.0}}) < 1e-14);

  Rng rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const PureGaussian psi = gen::random_pure_gaussian(n, 1.0, rng);
    const PosDefMatrix gm = wigner_matrix(psi);
    CHECK(is_symplectic(gm.mat(), 1e-9));
    CHECK(posdef_det(gm) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("wavefunction evaluation: frozen value") {
  const std::complex<double> val = wavefunction_eval(pure1(1.0, 1.0), {1.0});
  const double mag = std::pow(kPi, -0.25) * std::exp(-0.5);
  CHECK(val.real() == doctest::Approx(mag * std::cos(0.5)).epsilon(1e-14));
  CHECK(val.imag() == doctest::Approx(-mag * std::sin(0.5)).epsilon(1e-14));

  // Ground state is real positive at the origin and normalized in closed form.
  const std::complex<double> origin = wavefunction_eval(pure1(1.0, 0.0), {0.0});
  CHECK(origin.real() == doctest::Approx(std::pow(kPi, -0.25)).epsilon(1e-14));
  CHECK(origin.imag() == 0.0);
}

TEST_CASE("wigner evaluation: frozen values") {
  // At the origin every pure Gaussian attains (pi hbar)^{-n}.
  CHECK(wigner_eval(pure1(1.0, 0.0), {0.0, 0.0}) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(wigner_eval(pure1(2.5, 0.7), {0.0, 0.0}) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));

  // Ground state at z = (1, 0): (1/pi) e^{-1}.
  CHECK(wigner_eval(pure1(1.0, 0.0), {1.0, 0.0}) ==
        doctest::Approx(std::exp(-1.0) / kPi).epsilon(1e-13));

  // hbar enters both the prefactor and the exponent.
  const double hbar = 0.5;
  CHECK(wigner_eval(pure1(1.0, 0.0, hbar), {0.0, 0.0}) ==
        doctest::Approx(1.0 / (kPi * hbar)).epsilon(1e-13));
}

TEST_CASE("blob bijection: frozen values and round trips") {
  const PureGaussian psi = from_blob(
      Ellipsoid(PosDefMatrix(Mat{{2.0, 1.0}, {1.0, 1.0}}), 1.0));
  CHECK(psi.x.mat()(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(psi.y.mat()(0, 0) == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(
      from_blob(Ellipsoid(PosDefMatrix(Mat::diag({2.0, 2.0})), 1.0)),
      std::invalid_argument);

  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const PureGaussian in = gen::random_pure_gaussian(n, 1.0, rng);
    const PureGaussian out = from_blob(to_blob(in));
    CHECK(rel_diff(out.x.mat(), in.x.mat()) < 1e-9);
    CHECK(rel_diff(out.y.mat(), in.y.mat()) < 1e-9);
  }
}

TEST_CASE("pushforward by a symplectic map: frozen value and covariance law") {
  const PureGaussian moved =
      pushforward(pure1(1.0, 0.0), SymplecticMatrix(Mat::diag({2.0, 0.5})));
  CHECK(moved.x.mat()(0, 0) == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(moved.y.mat()(0, 0)) < 1e-13);

  Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 2);
    const PureGaussian psi = gen::random_pure_gaussian(n, 1.0, rng);
    const SymplecticMatrix s = random_symplectic(n, rng.next_u64());
    const PureGaussian phi = pushforward(psi, s);
    // G transforms by inverse congruence, so the blob maps forward by S.
    const Mat expected =
        s.inverse().mat().transpose() * wigner_matrix(psi).mat() * s.inverse().mat();
    CHECK(rel_diff(wigner_matrix(phi).mat(), expected) < 1e-9);
  }
}

TEST_CASE("quantum condition on covariance matrices: frozen verdicts") {
  // Boundary: Sigma = (hbar/2) I is the ground state.
  const QuantumVerdict boundary =
      quantum_check(MixedGaussian::centered(PosDefMatrix(Mat::diag({0.5, 0.5})), 1.0));
  CHECK(boundary.is_quantum);
  CHECK(std::abs(boundary.min_hermitian_eig) < 1e-9);
  CHECK(boundary.min_sympl_eig_of_sigma == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(boundary.purity == doctest::Approx(1.0).epsilon(1e-12));

  // Too tight: Sigma = (hbar/4) I violates the uncertainty bound.
  const QuantumVerdict tight =
      quantum_check(MixedGaussian::centered(PosDefMatrix(Mat::diag({0.25, 0.25})), 1.0));
  CHECK_FALSE(tight.is_quantum);
  CHECK(tight.min_hermitian_eig < -0.1);

  // Thermal-like: Sigma = hbar I is quantum with purity 1/2.
  const QuantumVerdict warm =
      quantum_check(MixedGaussian::centered(PosDefMatrix(Mat::identity(2)), 1.0));
  CHECK(warm.is_quantum);
  CHECK(warm.purity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(warm.min_sympl_eig_of_sigma == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("purity closed form") {
  CHECK(purity(MixedGaussian::centered(PosDefMatrix(Mat::identity(2)), 1.0)) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(purity(MixedGaussian::centered(PosDefMatrix(Mat::diag({0.5, 0.5})), 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // Purity above 1 flags a non-quantum covariance but is still reported.
  CHECK(purity(MixedGaussian::centered(PosDefMatrix(Mat::diag({0.25, 0.25})), 1.0)) ==
        doctest::Approx(2.0).epsilon(1e-13));

  Rng rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    std::vector<double> nu(n);
    double expected = 1.0;
    for (int k = 0; k < n; ++k) {
      nu[k] = rng.uniform(1.0, 3.0);
      expected /= nu[k];
    }
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
    CHECK(purity(rho) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("covariance ellipsoid: frozen value and quantization link") {
  const Ellipsoid cov = covariance_ellipsoid(
      MixedGaussian::centered(PosDefMatrix(Mat::identity(2)), 1.0));
  CHECK(rel_diff(cov.shape_mat(), Mat::diag({0.5, 0.5})) < 1e-14);
  CHECK(is_quantized(cov));

  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 2);
    std::vector<double> nu(n);
    bool quantum = true;
    for (int k = 0; k < n; ++k) {
      nu[k] = rng.uniform(0.5, 2.0);
      if (nu[k] < 1.0) quantum = false;
    }
    // Stay off the boundary band.
    bool near_boundary = false;
    for (double v : nu) near_boundary |= std::abs(v - 1.0) < 0.05;
    if (near_boundary) continue;
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
    CHECK(is_quantized(covariance_ellipsoid(rho)) == quantum);
    CHECK(quantum_check(rho).is_quantum == quantum);
  }
}

TEST_CASE("position marginal: frozen value and Schur cross-check") {
  const XMarginal ground =
      x_marginal(MixedGaussian::centered(PosDefMatrix(Mat::diag({0.5, 0.5})), 1.0));
  CHECK(ground.sigma_xx.mat()(0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(ground.normalizer == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-13));

  Rng rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    std::vector<double> nu(n);
    for (int k = 0; k < n; ++k) nu[k] = rng.uniform(1.0, 2.5);
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
    // The call itself cross-checks the Schur route and throws on mismatch.
    CHECK_NOTHROW(x_marginal(rho));
    CHECK(rel_diff(x_marginal(rho).sigma_xx.mat(),
                   block_split(rho.sigma.mat()).xx) < 1e-13);
  }
}

TEST_CASE("closed-form tomographic purity test: frozen verdicts") {
  // Ground state: pure.
  const TomographyResult ground = tomography_pure_test(
      MixedGaussian::centered(PosDefMatrix(Mat::diag({0.5, 0.5})), 1.0));
  CHECK(ground.is_pure);
  CHECK(ground.residuals.first < 1e-12);
  CHECK(ground.residuals.second < 1e-12);

  // Squeezed pure state via a blob matrix: Sigma = (hbar/2) G^{-1}.
  const Mat g{{2.0, 1.0}, {1.0, 1.0}};
  const TomographyResult squeezed = tomography_pure_test(
      MixedGaussian::centered(PosDefMatrix(0.5 * inverse(g)), 1.0));
  CHECK(squeezed.is_pure);

  // Thermal-like Sigma = I at hbar = 1: mixed.
  const TomographyResult warm = tomography_pure_test(
      MixedGaussian::centered(PosDefMatrix(Mat::identity(2)), 1.0));
  CHECK_FALSE(warm.is_pure);
  CHECK(warm.residuals.first > 1.0);
  CHECK(warm.residuals.second == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("tomography agrees with purity and the blob predicate") {
  Rng rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 2);
    const bool make_pure = trial % 2 == 0;
    std::vector<double> nu(n, 1.0);
    if (!make_pure) {
      for (int k = 0; k < n; ++k) nu[k] = rng.uniform(1.15, 2.5);
    }
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
    const TomographyResult t = tomography_pure_test(rho);
    CHECK(t.is_pure == make_pure);
    CHECK((std::abs(purity(rho) - 1.0) < 1e-9) == make_pure);
    CHECK(is_blob(covariance_ellipsoid(rho)).is_blob == make_pure);
  }
}

TEST_CASE("quadratic phase-space symbol: frozen values") {
  CHECK(fermi_symbol(pure1(1.0, 0.0), {0.0, 0.0}) == doctest::Approx(-1.0));
  CHECK(fermi_symbol(pure1(1.0, 0.0), {1.0, 0.0}) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(fermi_symbol(pure1(1.0, 1.0), {1.0, 1.0}) == doctest::Approx(4.0));

  // The symbol vanishes on the concentration shell |p + Yx|^2 + X^2 x.x = hbar Tr X.
  const PureGaussian psi = pure1(2.0, 0.5);
  const double x = 0.3;
  // Solve for p on the shell: (p + 0.5 x)^2 = 2 - 4 x^2.
  const double p = std::sqrt(2.0 - 4.0 * x * x) - 0.5 * x;
  CHECK(fermi_symbol(psi, {x, p}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gaussian density evaluates the normal law") {
  const MixedGaussian rho =
      MixedGaussian::centered(PosDefMatrix(Mat::identity(2)), 1.0);
  CHECK(rho.density({0.0, 0.0}) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));
  CHECK(rho.density({1.0, 0.0}) ==
        doctest::Approx(std::exp(-0.5) / (2.0 * kPi)).epsilon(1e-13));

  const MixedGaussian shifted(PosDefMatrix(Mat::identity(2)), {1.0, 0.0}, 1.0);
  CHECK(shifted.density({1.0, 0.0}) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-13));
}
