#include "sympolar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sympolar/capacity.hpp"
#include "sympolar/ellipsoid.hpp"
#include "sympolar/gaussian.hpp"
#include "sympolar/generators.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/oracle.hpp"
#include "sympolar/rng.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

namespace {

struct Counts {
  int prop1, prop3, thm1_each, thm3_bodies, thm3_planes, yaron, clinmax;
  int thm2_each, thm2_numeric_each, moyal_closed, moyal_numeric, fermi;
};

constexpr Counts kFull{200, 500, 500, 100, 100, 200, 200, 500, 10, 200, 20, 20};
constexpr Counts kQuick{25, 60, 60, 20, 20, 30, 30, 60, 3, 30, 5, 5};

// Distinct per-key seed streams so each check is invariant under suite
// composition.
Rng key_rng(std::uint64_t seed, std::uint64_t salt) { return Rng(seed ^ salt); }

void track(CheckResult& c, bool ok, double residual) {
  (ok ? c.pass : c.fail) += 1;
  c.max_residual = std::max(c.max_residual, residual);
}

// Spectrum helpers: bounded away from the blob/quantization boundary at 1
// so that boolean comparisons never sit inside a tolerance band.
std::vector<double> quantized_spectrum(int n, Rng& rng) {
  std::vector<double> lam(n);
  for (double& v : lam) v = rng.uniform(0.3, 0.97);
  return lam;
}

std::vector<double> superunit_spectrum(int n, Rng& rng) {
  std::vector<double> lam(n);
  for (double& v : lam) v = rng.uniform(1.03, 2.5);
  return lam;
}

std::vector<double> mixed_nonquantized_spectrum(int n, Rng& rng) {
  std::vector<double> lam(n);
  for (int j = 0; j + 1 < n; ++j) lam[j] = rng.uniform(0.3, 2.5);
  lam[n - 1] = rng.uniform(1.05, 2.5);  // at least one above 1
  return lam;
}

CheckResult check_prop1(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Prop1", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x50726f7031ull);
  for (int i = 0; i < counts.prop1; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 4);
    const Ellipsoid x(gen::random_posdef(n, 0.3, 3.0, rng), 1.0);
    const Ellipsoid john = john_of_product(x);

    const bool blob = is_blob(john).is_blob;
    const double proj_x =
        (project(john, CoordPlane::X).shape_mat() - x.shape_mat()).frobenius();
    const double proj_p =
        (project(john, CoordPlane::P).shape_mat() - polar_dual(x).shape_mat()).frobenius();
    const double scale = std::max(1.0, x.shape_mat().frobenius());
    const double residual = std::max(proj_x, proj_p) / scale;
    track(c, blob && residual <= 1e-9, residual);
  }
  return c;
}

CheckResult check_prop3(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Prop3", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x50726f7033ull);
  for (int i = 0; i < counts.prop3; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const bool want_quantized = (i % 2 == 0);
    const bool want_blob = (i % 10 == 0);

    std::vector<double> lam;
    if (want_blob) {
      lam.assign(n, 1.0);
    } else if (want_quantized) {
      lam = quantized_spectrum(n, rng);
    } else {
      lam = mixed_nonquantized_spectrum(n, rng);
    }
    const Ellipsoid omega = gen::ellipsoid_with_spectrum(lam, 1.0, rng);
    const Ellipsoid dual = symplectic_polar_dual(omega);

    const bool quantized = is_quantized(omega, 1e-9);
    const bool dual_inside = contains(omega, dual, 1e-9);
    const bool blob = is_blob(omega).is_blob;
    const bool fixed_point = approx_equal(dual, omega, 1e-9);

    const bool ok = (quantized == (want_quantized || want_blob)) &&
                    (dual_inside == quantized) && (blob == want_blob) &&
                    (fixed_point == blob);
    const double residual =
        want_blob ? (dual.shape_mat() - omega.shape_mat()).frobenius() : 0.0;
    track(c, ok, residual);
  }
  return c;
}

CheckResult check_thm1(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Thm1", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x54686d31ull);
  for (int i = 0; i < 2 * counts.thm1_each; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const bool want_blob = (i % 2 == 0);
    Ellipsoid omega = want_blob
                          ? blob_from_symplectic(random_symplectic(n, rng.next_u64()), 1.0)
                          : gen::ellipsoid_with_spectrum(mixed_nonquantized_spectrum(n, rng),
                                                         1.0, rng);
    const Thm1Result t = thm1_check(omega, 1e-8);
    const bool blob = is_blob(omega).is_blob;
    const bool ok = (t.holds == blob) && (blob == want_blob);
    const double residual =
        want_blob ? (t.lhs.shape_mat() - t.rhs.shape_mat()).frobenius() : 0.0;
    track(c, ok, residual);
  }
  return c;
}

CheckResult check_thm3(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Thm3", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x54686d33ull);
  for (int i = 0; i < 2 * counts.thm3_bodies; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const bool want_quantized = (i % 2 == 0);
    const std::vector<double> lam =
        want_quantized ? quantized_spectrum(n, rng) : superunit_spectrum(n, rng);
    const Ellipsoid omega = gen::ellipsoid_with_spectrum(lam, 1.0, rng);

    bool ok = true;
    double residual = 0.0;
    for (int k = 0; k < counts.thm3_planes; ++k) {
      const LagrangianPlane plane = random_lagrangian(n, rng.next_u64());
      const Thm3Result t = thm3_check(omega, plane, 1e-9);
      if (t.included != want_quantized) ok = false;
    }
    if (!want_quantized) {
      // Plane aligned with the Williamson axes: the inclusion must fail
      // there in particular, every symplectic eigenvalue being above 1.
      const Williamson w = williamson(omega.shape());
      const Mat s0inv = w.s0.inverse().mat();
      Mat basis(2 * n, n);
      for (int r = 0; r < 2 * n; ++r)
        for (int col = 0; col < n; ++col) basis(r, col) = s0inv(r, col);
      const Thm3Result t = thm3_check(omega, LagrangianPlane(basis), 1e-9);
      if (t.included) ok = false;
      std::vector<double> d(2 * n);
      for (int j = 0; j < n; ++j) d[j] = d[n + j] = w.lambda[j];
      residual = (w.s0.mat().transpose() * Mat::diag(d) * w.s0.mat() - omega.shape_mat())
                     .frobenius();
    }
    track(c, ok, residual);
  }
  return c;
}

CheckResult check_yaron3(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Eq-yaron3", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x7961726f6e33ull);
  for (int i = 0; i < counts.yaron; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 4);
    const double hbar = (i % 3 == 0) ? 0.5 + rng.uniform() : 1.0;
    const Ellipsoid x(gen::random_posdef(n, 0.3, 3.0, rng), hbar);
    const CapacityResult r = cmax_product(x, polar_dual(x));
    const double residual = std::abs(r.value - 4.0 * hbar) / (4.0 * hbar);
    track(c, residual <= 1e-9, residual);
  }
  return c;
}

CheckResult check_clinmax(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Eq-clinmax", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x636c696e6d6178ull);
  for (int i = 0; i < counts.clinmax; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 4);
    const double hbar = (i % 3 == 0) ? 0.5 + rng.uniform() : 1.0;
    const Ellipsoid x(gen::random_posdef(n, 0.3, 3.0, rng), hbar);
    const double target = std::numbers::pi * hbar;
    const CapacityResult r = cmin_lin_product_xxdual(x);
    const double residual = std::abs(r.value - target) / target;
    track(c, residual <= 1e-9, residual);
  }
  return c;
}

CheckResult check_thm2(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Thm2", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x54686d32ull);

  for (int i = 0; i < 2 * counts.thm2_each; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const bool want_pure = (i % 2 == 0);
    std::vector<double> nu(n, 1.0);
    if (!want_pure) {
      for (int j = 0; j + 1 < n; ++j) nu[j] = rng.uniform(1.0, 3.0);
      nu[n - 1] = rng.uniform(1.3, 3.0);
    }
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);

    const TomographyResult t = tomography_pure_test(rho, 1e-9);
    const bool pure_by_purity = std::abs(purity(rho) - 1.0) <= 1e-9;
    const bool pure_by_blob = is_blob(covariance_ellipsoid(rho)).is_blob;
    const bool ok = (t.is_pure == want_pure) && (pure_by_purity == want_pure) &&
                    (pure_by_blob == want_pure);
    track(c, ok, want_pure ? t.residuals.first : 0.0);
  }

  // Numeric form of the same dichotomy, one degree of freedom.
  oracle::OracleConfig cfg;
  for (int i = 0; i < 2 * counts.thm2_numeric_each; ++i) {
    const bool want_pure = (i % 2 == 0);
    std::vector<double> nu{want_pure ? 1.0 : rng.uniform(1.5, 3.0)};
    const MixedGaussian rho = gen::sigma_with_spectrum(nu, 1.0, rng);
    const double gap = oracle::tomography_numeric(rho, cfg).max_gap;
    const bool ok = want_pure ? (gap <= 1e-5) : (gap >= 1e-2);
    track(c, ok, want_pure ? gap : 0.0);
  }
  return c;
}

CheckResult check_moyal(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Moyal", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x4d6f79616cull);

  // Closed form: the squared Wigner function integrates to (2 pi hbar)^{-n}
  // because det G = 1.
  for (int i = 0; i < counts.moyal_closed; ++i) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const double hbar = (i % 3 == 0) ? 0.5 + rng.uniform() : 1.0;
    const PureGaussian psi = gen::random_pure_gaussian(n, hbar, rng);
    const double det_g = determinant(wigner_matrix(psi).mat());
    const double closed = std::pow(std::numbers::pi * hbar, -2.0 * n) *
                          std::pow(std::numbers::pi * hbar / 2.0, n) / std::sqrt(det_g);
    const double target = std::pow(2.0 * std::numbers::pi * hbar, -n);
    const double residual = std::abs(closed - target) / target;
    track(c, residual <= 1e-9, residual);
  }

  oracle::OracleConfig cfg;
  for (int i = 0; i < counts.moyal_numeric; ++i) {
    const PureGaussian psi = gen::random_pure_gaussian(1, 1.0, rng);
    const PureGaussian phi = gen::random_pure_gaussian(1, 1.0, rng);
    const oracle::MoyalCheck m = oracle::moyal_numeric(psi, phi, cfg);
    track(c, m.residual <= 1e-5, m.residual);
  }
  return c;
}

CheckResult check_fermi(std::uint64_t seed, const Counts& counts) {
  CheckResult c{"Fermi-PDE", 0, 0, 0.0};
  Rng rng = key_rng(seed, 0x4665726d69ull);
  oracle::OracleConfig cfg;
  for (int i = 0; i < counts.fermi; ++i) {
    const PureGaussian psi = gen::random_pure_gaussian(1, 1.0, rng);
    const double residual = oracle::pde_residual(psi, cfg);
    track(c, residual <= 1e-6, residual);
  }
  return c;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (c.fail > 0 || c.pass == 0) return false;
  }
  return !checks.empty();
}

VerifyReport run_verify(Suite suite, std::uint64_t seed, Level level) {
  const Counts& counts = (level == Level::kFull) ? kFull : kQuick;
  VerifyReport report;
  const bool geometry = suite == Suite::kGeometry || suite == Suite::kAll;
  const bool capacity = suite == Suite::kCapacity || suite == Suite::kAll;
  const bool gaussian = suite == Suite::kGaussian || suite == Suite::kAll;

  if (geometry) {
    report.checks.push_back(check_prop1(seed, counts));
    report.checks.push_back(check_prop3(seed, counts));
    report.checks.push_back(check_thm1(seed, counts));
    report.checks.push_back(check_thm3(seed, counts));
  }
  if (capacity) {
    report.checks.push_back(check_yaron3(seed, counts));
    report.checks.push_back(check_clinmax(seed, counts));
  }
  if (gaussian) {
    report.checks.push_back(check_thm2(seed, counts));
    report.checks.push_back(check_moyal(seed, counts));
    report.checks.push_back(check_fermi(seed, counts));
  }
  return report;
}

}  // namespace sympolar
