#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sympolar/matcore.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

// Centered ellipsoid { z in R^d : M z . z <= hbar }. All geometry below is
// for centered bodies; duality is hbar-sensitive, so operands must carry the
// same hbar.
class Ellipsoid {
 public:
  Ellipsoid(PosDefMatrix m, double hbar);

  int dim() const { return m_.dim(); }
  int dof() const;  // d/2; throws std::invalid_argument on odd dimension
  const PosDefMatrix& shape() const { return m_; }
  const Mat& shape_mat() const { return m_.mat(); }
  double hbar() const { return hbar_; }

  // Membership with relative slack on the defining inequality.
  bool member(const std::vector<double>& z, double slack = 0.0) const;

 private:
  PosDefMatrix m_;
  double hbar_;
};

// Polar dual: matrix A -> A^{-1}, same hbar, same dimension.
Ellipsoid polar_dual(const Ellipsoid& x);

// Symplectic polar dual of a phase-space ellipsoid: matrix M -> -J M^{-1} J.
Ellipsoid symplectic_polar_dual(const Ellipsoid& omega);

// Image L(E): matrix M -> L^{-T} M L^{-1}. Throws on singular L.
Ellipsoid linear_image(const Ellipsoid& e, const Mat& l);

enum class CoordPlane { X, P };

// Orthogonal projection. Coordinate tags use the Schur complements M/M_PP
// (tag X) and M/M_XX (tag P). A general subspace with orthonormal basis B
// uses the Schur complement of the C-block of R^T M R, R = [B C]; the result
// lives in B-coordinates.
Ellipsoid project(const Ellipsoid& omega, CoordPlane tag);
Ellipsoid project(const Ellipsoid& e, const Mat& basis);
Ellipsoid project(const Ellipsoid& omega, const LagrangianPlane& plane);

// Intersection with a subspace: tag X -> M_XX, tag P -> M_PP, general basis
// B -> B^T M B in B-coordinates.
Ellipsoid intersect(const Ellipsoid& omega, CoordPlane tag);
Ellipsoid intersect(const Ellipsoid& e, const Mat& basis);
Ellipsoid intersect(const Ellipsoid& omega, const LagrangianPlane& plane);

// inner \subset outer <=> M_outer <= M_inner (Loewner). Throws on
// mismatched dimension or hbar.
bool contains(const Ellipsoid& outer, const Ellipsoid& inner, double tol = kDefaultRecon);

// Same shape matrix within tol * max(||A||, ||B||) and same hbar.
bool approx_equal(const Ellipsoid& a, const Ellipsoid& b, double tol = kDefaultRecon);

// John ellipsoid of the product X x X^hbar: matrix diag(A, A^{-1}).
Ellipsoid john_of_product(const Ellipsoid& x);

// Quantum blob S(B^{2n}(sqrt(hbar))): matrix (S S^T)^{-1}.
Ellipsoid blob_from_symplectic(const SymplecticMatrix& s, double hbar);

struct BlobReport {
  bool is_blob = false;
  double cond0_residual = 0.0;                  // ||M_PP (M/M_PP) - I||_F
  std::pair<double, double> rs_residuals{0, 0}; // ||M_XX M_PP - M_XP^2 - I||_F, ||M_PX M_PP - M_PP M_XP||_F
  std::optional<SymplecticMatrix> witness_s;    // S with (S S^T)^{-1} = M when is_blob
};

// A centered phase-space ellipsoid is a quantum blob iff its matrix is
// symplectic. The report carries the block-identity residuals and, for
// blobs, a witness S recovered through the Williamson factorization.
BlobReport is_blob(const Ellipsoid& omega, double tol = kDefaultSymp);

// Quantized (contains a quantum blob) iff max symplectic eigenvalue <= 1.
bool is_quantized(const Ellipsoid& omega, double tol = kDefaultRecon);

// Projection/intersection duality: lhs = polar_dual(project(Omega, X)),
// rhs = intersect(Omega, P); holds iff the two matrices agree (relative).
// Holds exactly when Omega is a quantum blob.
struct Thm1Result {
  bool holds;
  Ellipsoid lhs;
  Ellipsoid rhs;
};
Thm1Result thm1_check(const Ellipsoid& omega, double tol = 1e-8);

// Dual-intersection criterion on a Lagrangian plane with basis B:
// D = B^T M B, D' = B^T (-J M^{-1} J) B; included iff D <= D' (the dual's
// intersection sits inside Omega's), equal iff also D' <= D.
struct Thm3Result {
  bool included;
  bool equal;
};
Thm3Result thm3_check(const Ellipsoid& omega, const LagrangianPlane& plane,
                      double tol = kDefaultRecon);

}  // namespace sympolar
