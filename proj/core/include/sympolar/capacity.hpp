#pragma once

#include "sympolar/ellipsoid.hpp"
#include "sympolar/matcore.hpp"

namespace sympolar {

enum class CapacityFormula { kEllipsoid, kProductCmax, kProductCminLin };

struct CapacityResult {
  double value = 0.0;  // area units, hbar-scaled
  CapacityFormula formula_used = CapacityFormula::kEllipsoid;
};

// Closed-form ellipsoid capacity pi*hbar / lambda_max^omega. All linear
// capacities coincide on ellipsoids, so no family tag is needed.
CapacityResult capacity_ellipsoid(const Ellipsoid& omega);

// Largest capacity of the product X x P, X and P sharing hbar:
// 4*hbar*lambda* with lambda* = sup { lambda > 0 : lambda * X^hbar is
// contained in P }. For matrices A, C the supremum is
// (max eig A^{1/2} C A^{1/2})^{-1/2}; the reduction is re-verified by
// explicit Loewner containment at lambda* (must hold) and just above it
// (must fail). Throws std::runtime_error if either re-check contradicts
// the eigenvalue reduction.
CapacityResult cmax_product(const Ellipsoid& x, const Ellipsoid& p,
                            double tol = kDefaultRecon);

// Smallest linear capacity of X x X^hbar, always pi*hbar; evaluated through
// the inscribed-ellipsoid route (capacity of john_of_product) and checked
// against pi*hbar before returning.
CapacityResult cmin_lin_product_xxdual(const Ellipsoid& x, double tol = 1e-8);

}  // namespace sympolar
