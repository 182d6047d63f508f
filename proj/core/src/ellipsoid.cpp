#include "sympolar/ellipsoid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sympolar {

namespace {

void require_same_frame(const Ellipsoid& a, const Ellipsoid& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("ellipsoid dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
  }
  // Duality scales with hbar, so cross-hbar comparisons signal a caller bug.
  if (a.hbar() != b.hbar()) {
    throw std::invalid_argument("ellipsoid hbar values differ; normalize before comparing");
  }
}

}  // namespace

Ellipsoid::Ellipsoid(PosDefMatrix m, double hbar) : m_(std::move(m)), hbar_(hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw std::invalid_argument("ellipsoid requires hbar > 0");
  }
}

int Ellipsoid::dof() const {
  if (dim() % 2 != 0) {
    throw std::invalid_argument("phase-space ellipsoid requires even dimension");
  }
  return dim() / 2;
}

bool Ellipsoid::member(const std::vector<double>& z, double slack) const {
  if (static_cast<int>(z.size()) != dim()) {
    throw std::invalid_argument("membership point has wrong dimension");
  }
  return quad_form(m_.mat(), z) <= hbar_ * (1.0 + slack);
}

Ellipsoid polar_dual(const Ellipsoid& x) {
  return Ellipsoid(posdef_inverse(x.shape()), x.hbar());
}

Ellipsoid symplectic_polar_dual(const Ellipsoid& omega) {
  const int n = omega.dof();
  const Mat j = standard_J(n);
  const Mat minv = posdef_inverse(omega.shape()).mat();
  const Mat dual = -1.0 * (j * minv * j);
  return Ellipsoid(PosDefMatrix(SymMatrix(dual)), omega.hbar());
}

Ellipsoid linear_image(const Ellipsoid& e, const Mat& l) {
  if (l.rows() != e.dim() || l.cols() != e.dim()) {
    throw std::invalid_argument("linear image: matrix dimension mismatch");
  }
  const Mat linv = inverse(l);  // throws on singular L
  const Mat m = linv.transpose() * e.shape_mat() * linv;
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), e.hbar());
}

Ellipsoid project(const Ellipsoid& omega, CoordPlane tag) {
  omega.dof();
  const PosDefMatrix s = (tag == CoordPlane::X)
                             ? schur_complement(omega.shape(), SchurAgainst::PP)
                             : schur_complement(omega.shape(), SchurAgainst::XX);
  return Ellipsoid(s, omega.hbar());
}

Ellipsoid project(const Ellipsoid& e, const Mat& basis) {
  const int d = e.dim();
  const int k = basis.cols();
  if (basis.rows() != d || k <= 0 || k > d) {
    throw std::invalid_argument("projection basis has wrong shape");
  }
  const Mat b = orthonormalize_columns(basis);
  if (k == d) {
    const Mat m = b.transpose() * e.shape_mat() * b;
    return Ellipsoid(PosDefMatrix(SymMatrix(m)), e.hbar());
  }
  const Mat c = orthonormal_complement(b);
  const Mat r = hcat(b, c);
  const Mat full = r.transpose() * e.shape_mat() * r;
  // Schur complement of the trailing (complement) block: the projection onto
  // span(B) of {full w . w <= hbar} in B-coordinates.
  Mat a(k, k), off(k, d - k), cc(d - k, d - k);
  for (int i = 0; i < k; ++i)
    for (int jj = 0; jj < k; ++jj) a(i, jj) = full(i, jj);
  for (int i = 0; i < k; ++i)
    for (int jj = 0; jj < d - k; ++jj) off(i, jj) = full(i, k + jj);
  for (int i = 0; i < d - k; ++i)
    for (int jj = 0; jj < d - k; ++jj) cc(i, jj) = full(k + i, k + jj);
  const Mat s = a - off * inverse(cc) * off.transpose();
  return Ellipsoid(PosDefMatrix(SymMatrix(s)), e.hbar());
}

Ellipsoid project(const Ellipsoid& omega, const LagrangianPlane& plane) {
  return project(omega, plane.basis());
}

Ellipsoid intersect(const Ellipsoid& omega, CoordPlane tag) {
  const BlockSplit blocks = block_split(omega.shape_mat());
  const Mat& m = (tag == CoordPlane::X) ? blocks.xx : blocks.pp;
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), omega.hbar());
}

Ellipsoid intersect(const Ellipsoid& e, const Mat& basis) {
  if (basis.rows() != e.dim()) {
    throw std::invalid_argument("intersection basis has wrong row count");
  }
  const Mat b = orthonormalize_columns(basis);
  const Mat m = b.transpose() * e.shape_mat() * b;
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), e.hbar());
}

Ellipsoid intersect(const Ellipsoid& omega, const LagrangianPlane& plane) {
  return intersect(omega, plane.basis());
}

bool contains(const Ellipsoid& outer, const Ellipsoid& inner, double tol) {
  require_same_frame(outer, inner);
  return loewner_leq(outer.shape().sym(), inner.shape().sym(), tol);
}

bool approx_equal(const Ellipsoid& a, const Ellipsoid& b, double tol) {
  require_same_frame(a, b);
  const double scale = std::max({a.shape_mat().frobenius(), b.shape_mat().frobenius(), 1e-300});
  return (a.shape_mat() - b.shape_mat()).frobenius() <= tol * scale;
}

Ellipsoid john_of_product(const Ellipsoid& x) {
  const int n = x.dim();
  const Mat& a = x.shape_mat();
  const Mat ainv = posdef_inverse(x.shape()).mat();
  Mat m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(n + i, n + j) = ainv(i, j);
    }
  }
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), x.hbar());
}

Ellipsoid blob_from_symplectic(const SymplecticMatrix& s, double hbar) {
  const Mat ssT = s.mat() * s.mat().transpose();
  const Mat m = inverse(ssT);
  return Ellipsoid(PosDefMatrix(SymMatrix(m)), hbar);
}

BlobReport is_blob(const Ellipsoid& omega, double tol) {
  const int n = omega.dof();
  const Mat& m = omega.shape_mat();
  BlobReport report;
  report.is_blob = is_symplectic(m, tol);

  const BlockSplit blocks = block_split(m);
  const Mat eye = Mat::identity(n);
  report.rs_residuals.first = (blocks.xx * blocks.pp - blocks.xp * blocks.xp - eye).frobenius();
  report.rs_residuals.second = (blocks.px * blocks.pp - blocks.pp * blocks.xp).frobenius();
  report.cond0_residual =
      (blocks.pp * schur_complement(omega.shape(), SchurAgainst::PP).mat() - eye)
          .frobenius();

  if (report.is_blob) {
    const Williamson w = williamson(omega.shape());
    std::vector<double> d_inv_root(2 * n);
    for (int j = 0; j < n; ++j) {
      d_inv_root[j] = 1.0 / std::sqrt(w.lambda[j]);
      d_inv_root[n + j] = d_inv_root[j];
    }
    // For a blob all Williamson eigenvalues are 1 up to tol, so this product
    // is symplectic to the same order and satisfies (S S^T)^{-1} = M exactly.
    const Mat s = w.s0.inverse().mat() * Mat::diag(d_inv_root);
    report.witness_s = SymplecticMatrix(s, std::max(tol, kDefaultSymp));
  }
  return report;
}

bool is_quantized(const Ellipsoid& omega, double tol) {
  omega.dof();
  const std::vector<double> lam = symplectic_eigenvalues(omega.shape());
  return lam.back() <= 1.0 + tol;
}

Thm1Result thm1_check(const Ellipsoid& omega, double tol) {
  Ellipsoid lhs = polar_dual(project(omega, CoordPlane::X));
  Ellipsoid rhs = intersect(omega, CoordPlane::P);
  const bool holds = approx_equal(lhs, rhs, tol);
  return Thm1Result{holds, std::move(lhs), std::move(rhs)};
}

Thm3Result thm3_check(const Ellipsoid& omega, const LagrangianPlane& plane, double tol) {
  if (plane.basis().rows() != omega.dim()) {
    throw std::invalid_argument("plane/ellipsoid dimension mismatch");
  }
  const Mat& b = plane.basis();
  const Mat d = b.transpose() * omega.shape_mat() * b;
  const Mat dual = symplectic_polar_dual(omega).shape_mat();
  const Mat dprime = b.transpose() * dual * b;
  Thm3Result r{};
  r.included = loewner_leq(SymMatrix(d), SymMatrix(dprime), tol);
  r.equal = r.included && loewner_leq(SymMatrix(dprime), SymMatrix(d), tol);
  return r;
}

}  // namespace sympolar
