#include "sympolar/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sympolar {

CapacityResult capacity_ellipsoid(const Ellipsoid& omega) {
  omega.dof();
  const std::vector<double> lam = symplectic_eigenvalues(omega.shape());
  return CapacityResult{std::numbers::pi * omega.hbar() / lam.back(),
                        CapacityFormula::kEllipsoid};
}

CapacityResult cmax_product(const Ellipsoid& x, const Ellipsoid& p, double tol) {
  if (x.dim() != p.dim()) {
    throw std::invalid_argument("cmax_product: factor dimensions differ");
  }
  if (x.hbar() != p.hbar()) {
    throw std::invalid_argument("cmax_product: factors carry different hbar");
  }
  const Mat& c = p.shape_mat();
  const Mat root = mat_sqrt(x.shape()).mat();
  const SymEigen eig = sym_eigen(SymMatrix(root * c * root));
  const double mu_max = eig.values.back();
  if (!(mu_max > 0.0)) {
    throw std::runtime_error("cmax_product: conjugated form lost positivity");
  }
  const double lambda_star = 1.0 / std::sqrt(mu_max);

  // Re-check the reduction: lambda * X^hbar has matrix lambda^{-2} A^{-1},
  // and containment in P is the Loewner bound C <= lambda^{-2} A^{-1}.
  const Mat ainv = posdef_inverse(x.shape()).mat();
  const Mat at_opt = (1.0 / (lambda_star * lambda_star)) * ainv;
  const double scale = std::max({c.frobenius(), at_opt.frobenius(), 1e-300});
  if (!loewner_leq(p.shape().sym(), SymMatrix(at_opt), tol * scale)) {
    throw std::runtime_error("cmax_product: optimum fails the containment it should saturate");
  }
  const double lambda_over = lambda_star * (1.0 + 10.0 * tol);
  const Mat beyond = (1.0 / (lambda_over * lambda_over)) * ainv;
  if (loewner_leq(p.shape().sym(), SymMatrix(beyond), 0.0)) {
    throw std::runtime_error("cmax_product: containment persists past the computed supremum");
  }
  return CapacityResult{4.0 * x.hbar() * lambda_star, CapacityFormula::kProductCmax};
}

CapacityResult cmin_lin_product_xxdual(const Ellipsoid& x, double tol) {
  const double target = std::numbers::pi * x.hbar();
  const double value = capacity_ellipsoid(john_of_product(x)).value;
  if (std::abs(value - target) > tol * target) {
    throw std::runtime_error("cmin_lin_product_xxdual: inscribed-ball capacity deviates from pi*hbar");
  }
  return CapacityResult{value, CapacityFormula::kProductCminLin};
}

}  // namespace sympolar
