#pragma once

#include <initializer_list>
#include <vector>

namespace sympolar {

// Default numeric tolerances. All comparison tolerances can be overridden
// per call; these are the values used when none is supplied.
struct Tolerances {
  double recon = 1e-9;         // relative reconstruction / agreement checks
  double symp = 1e-9;          // symplectic membership, scaled by ||S||_F^2
  double posdef_floor = 1e-12; // smallest eigenvalue floor, relative to largest
  double asym = 1e-8;          // tolerated constructor asymmetry, relative
};

inline constexpr double kDefaultRecon = 1e-9;
inline constexpr double kDefaultSymp = 1e-9;
inline constexpr double kDefaultPosDefFloor = 1e-12;
inline constexpr double kDefaultAsym = 1e-8;

// Dense row-major matrix of doubles. Sized at construction; all binary
// operations require conforming dimensions and throw std::invalid_argument
// otherwise.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols);
  Mat(std::initializer_list<std::initializer_list<double>> rows);

  static Mat identity(int d);
  static Mat diag(const std::vector<double>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Mat transpose() const;
  double frobenius() const;
  double max_abs() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(double s, const Mat& a);
Mat operator*(const Mat& a, double s);
std::vector<double> operator*(const Mat& a, const std::vector<double>& v);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);
// Quadratic form  m z . z  for square m.
double quad_form(const Mat& m, const std::vector<double>& z);

Mat hcat(const Mat& a, const Mat& b);
Mat block_of(const Mat& m, int r0, int c0, int nr, int nc);
// [ xx xp ; px pp ] from four conforming blocks.
Mat assemble_blocks(const Mat& xx, const Mat& xp, const Mat& px, const Mat& pp);

// General inverse by Gauss-Jordan elimination with partial pivoting.
// Throws std::invalid_argument on singular input.
Mat inverse(const Mat& m);
// Determinant by LU factorization with partial pivoting.
double determinant(const Mat& m);

// Symmetric matrix. The constructor replaces the input by (M + M^T)/2 and
// rejects input whose asymmetry exceeds 1e-8 * ||M||_F.
class SymMatrix {
 public:
  explicit SymMatrix(Mat m, double asym_tol = kDefaultAsym);
  static SymMatrix from_diag(const std::vector<double>& d);

  const Mat& mat() const { return mat_; }
  int dim() const { return mat_.rows(); }

 private:
  Mat mat_;
};

// Symmetric positive definite matrix. Construction verifies, via the Jacobi
// eigensolver, that the smallest eigenvalue exceeds 1e-12 times the largest.
class PosDefMatrix {
 public:
  explicit PosDefMatrix(SymMatrix s, double floor = kDefaultPosDefFloor);
  explicit PosDefMatrix(Mat m, double floor = kDefaultPosDefFloor);

  const SymMatrix& sym() const { return sym_; }
  const Mat& mat() const { return sym_.mat(); }
  int dim() const { return sym_.dim(); }

 private:
  SymMatrix sym_;
};

// Dimension-paired split of an even-dimensional matrix into n x n blocks,
// ordering (x, p): M = [ xx xp ; px pp ].
struct BlockSplit {
  Mat xx, xp, px, pp;
};
BlockSplit block_split(const Mat& m);

// Eigendecomposition of a symmetric matrix: values ascending, the k-th
// column of `vectors` is the eigenvector of values[k].
struct SymEigen {
  std::vector<double> values;
  Mat vectors;
};

// Cyclic Jacobi rotations. Convergence: off-diagonal Frobenius norm at most
// 1e-13 * ||A||_F, at most 100 sweeps; throws std::runtime_error if the
// threshold is not reached. Self-contained by design: the geometric layers
// must not depend on an external solver.
SymEigen sym_eigen(const SymMatrix& a);

// Spectral power A^p through the eigendecomposition; requires positive
// definiteness, so every power is well defined.
PosDefMatrix sym_pow(const PosDefMatrix& a, double p);
PosDefMatrix mat_sqrt(const PosDefMatrix& a);
PosDefMatrix posdef_inverse(const PosDefMatrix& a);
double posdef_det(const PosDefMatrix& a);

// Loewner order: true iff the smallest eigenvalue of (b - a) is >= -tol.
bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol = kDefaultRecon);

enum class SchurAgainst { PP, XX };

// Schur complement M/M_PP = M_XX - M_XP M_PP^{-1} M_PX (and symmetrically
// against the XX block). Result of a positive definite input is positive
// definite.
PosDefMatrix schur_complement(const PosDefMatrix& m, SchurAgainst against);

// Inverse of an even-dimensional positive definite matrix assembled from the
// two Schur complements:
//   [  (M/M_PP)^{-1}               -(M/M_PP)^{-1} M_XP M_PP^{-1} ]
//   [ -M_PP^{-1} M_PX (M/M_PP)^{-1} (M/M_XX)^{-1}                ]
Mat block_inverse(const PosDefMatrix& m);

}  // namespace sympolar
