#pragma once

#include <cstdint>
#include <vector>

#include "sympolar/matcore.hpp"

namespace sympolar {

// Global conventions: phase-space points are ordered z = (x, p) and the
// standard form is J = [ 0 I ; -I 0 ], so that w(z, z') = J z . z'.

struct SymplecticContext {
  int n = 1;          // degrees of freedom; phase space has dimension 2n
  double hbar = 1.0;  // > 0
  Tolerances tol{};
};

Mat standard_J(int n);

// True iff ||S^T J S - J||_F <= tol. Throws on odd dimension.
bool is_symplectic(const Mat& s, double tol = kDefaultSymp);

// Member of Sp(n). Construction enforces ||S^T J S - J||_F <= tol * ||S||_F^2.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Mat s, double tol = kDefaultSymp);

  const Mat& mat() const { return s_; }
  int dof() const { return s_.rows() / 2; }

  // Group inverse -J S^T J; exact up to rounding, no elimination involved.
  SymplecticMatrix inverse() const;

 private:
  Mat s_;
};

// Symplectic eigenvalues of a positive definite M on R^{2n}: the moduli of
// the eigenvalues of JM, returned ascending. Computed from the symmetric
// reduction -K^2 with K = M^{1/2} J M^{1/2}, whose spectrum carries each
// squared symplectic eigenvalue twice. Throws std::runtime_error if the
// sorted spectrum fails to pair.
std::vector<double> symplectic_eigenvalues(const PosDefMatrix& m);

// Williamson normal form M = S0^T diag(L, L) S0 with S0 symplectic and L the
// ascending symplectic eigenvalues. The postcondition is re-verified
// numerically before returning; failure throws std::runtime_error.
struct Williamson {
  SymplecticMatrix s0;
  std::vector<double> lambda;
};
Williamson williamson(const PosDefMatrix& m);

// Deterministic random element of Sp(n): a fixed-length product of the
// generators diag(L^{-1}, L^T), symmetric shears [ I 0 ; P I ], and J, with
// entries drawn from the seeded stream. Factors are kept mild so that the
// symplectic condition number stays moderate.
SymplecticMatrix random_symplectic(int n, std::uint64_t seed);

// Modified Gram-Schmidt orthonormalization of the columns; throws
// std::invalid_argument on rank deficiency.
Mat orthonormalize_columns(const Mat& b);

// Completes a matrix with orthonormal columns to a full orthonormal basis;
// returned matrix holds the complementary columns.
Mat orthonormal_complement(const Mat& b);

// True iff B^T J B == 0 within tol and the columns are independent; input is
// a 2n x n basis. Rank deficiency throws std::invalid_argument.
bool is_lagrangian(const Mat& basis, double tol = kDefaultRecon);

// Lagrangian plane of R^{2n}, stored as a 2n x n orthonormal basis. The
// constructor orthonormalizes its input (span is preserved, so isotropy is
// too) and verifies isotropy.
class LagrangianPlane {
 public:
  explicit LagrangianPlane(Mat basis, double tol = kDefaultRecon);

  const Mat& basis() const { return basis_; }
  int dof() const { return basis_.cols(); }

  static LagrangianPlane coordinate_x(int n);  // span of the x axes
  static LagrangianPlane coordinate_p(int n);  // span of the p axes

 private:
  Mat basis_;
};

// Image of the x-coordinate plane under random_symplectic(n, seed).
LagrangianPlane random_lagrangian(int n, std::uint64_t seed);

}  // namespace sympolar
