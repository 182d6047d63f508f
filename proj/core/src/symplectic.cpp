#include "sympolar/symplectic.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "sympolar/rng.hpp"

namespace sympolar {

Mat standard_J(int n) {
  if (n < 1) throw std::invalid_argument("standard_J: n must be positive");
  Mat j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

bool is_symplectic(const Mat& s, double tol) {
  if (!s.square() || s.rows() % 2 != 0)
    throw std::invalid_argument("is_symplectic: matrix must be square of even dimension");
  const Mat j = standard_J(s.rows() / 2);
  return (s.transpose() * j * s - j).frobenius() <= tol;
}

SymplecticMatrix::SymplecticMatrix(Mat s, double tol) : s_(std::move(s)) {
  if (!s_.square() || s_.rows() % 2 != 0)
    throw std::invalid_argument("SymplecticMatrix: matrix must be square of even dimension");
  const double fro = s_.frobenius();
  const Mat j = standard_J(s_.rows() / 2);
  const double defect = (s_.transpose() * j * s_ - j).frobenius();
  if (defect > tol * fro * fro)
    throw std::invalid_argument("SymplecticMatrix: matrix is not symplectic within tolerance");
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  const Mat j = standard_J(dof());
  return SymplecticMatrix(-1.0 * (j * s_.transpose() * j));
}

std::vector<double> symplectic_eigenvalues(const PosDefMatrix& m) {
  if (m.dim() % 2 != 0)
    throw std::invalid_argument("symplectic_eigenvalues: matrix dimension must be even");
  const int n = m.dim() / 2;
  const Mat root = mat_sqrt(m).mat();
  const Mat k = root * standard_J(n) * root;
  const SymEigen eig = sym_eigen(SymMatrix(-1.0 * (k * k)));

  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = eig.values[static_cast<std::size_t>(2 * i)];
    const double b = eig.values[static_cast<std::size_t>(2 * i + 1)];
    if (b - a > 1e-6 * std::max(std::fabs(b), 1e-300))
      throw std::runtime_error("symplectic_eigenvalues: spectrum of -K^2 fails to pair");
    out[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.5 * (a + b), 0.0));
  }
  return out;
}

Williamson williamson(const PosDefMatrix& m) {
  if (m.dim() % 2 != 0) throw std::invalid_argument("williamson: matrix dimension must be even");
  const int n = m.dim() / 2;
  const int d = m.dim();
  const Mat j = standard_J(n);
  const Mat root = mat_sqrt(m).mat();
  const Mat inv_root = sym_pow(m, -0.5).mat();

  // K' = M^{-1/2} J M^{-1/2} is antisymmetric with eigenvalues +-i/lambda_j;
  // -K'^2 is symmetric with each 1/lambda_j^2 twice.
  const Mat kp = inv_root * j * inv_root;
  const SymEigen eig = sym_eigen(SymMatrix(-1.0 * (kp * kp)));

  // Pair each eigenspace into (u, v = -K'u/|K'u|); then with R = [U | V],
  // R^T K' R = [ 0 L^{-1} ; -L^{-1} 0 ]. Clusters of equal eigenvalues are
  // processed greedily, each new u orthogonalized against the pairs already
  // chosen from its cluster. Walking the spectrum of -K'^2 downward gives
  // lambda ascending.
  Mat u_cols(d, n);
  Mat v_cols(d, n);
  std::vector<double> lambda(static_cast<std::size_t>(n));
  int out = 0;
  int i = d - 1;
  while (i >= 0) {
    int lo = i;
    while (lo > 0 && eig.values[static_cast<std::size_t>(lo - 1)] >
                         (1.0 - 1e-8) * eig.values[static_cast<std::size_t>(i)])
      --lo;
    const int cluster_size = i - lo + 1;
    if (cluster_size % 2 != 0) throw std::runtime_error("williamson: odd eigenvalue cluster");
    std::vector<std::vector<double>> chosen;  // u, v, u, v, ... of this cluster
    for (int pair = 0; pair < cluster_size / 2; ++pair) {
      // Residual of each raw cluster column against the pairs chosen so far;
      // the largest one is a valid next u (the chosen pairs span an even
      // subspace of the eigenspace, so some column keeps norm >= 1/sqrt(m)).
      std::vector<double> u;
      double best = -1.0;
      for (int col = i; col >= lo; --col) {
        std::vector<double> cand(static_cast<std::size_t>(d));
        for (int r = 0; r < d; ++r) cand[static_cast<std::size_t>(r)] = eig.vectors(r, col);
        for (const auto& c : chosen) {
          const double proj = dot(cand, c);
          for (int r = 0; r < d; ++r)
            cand[static_cast<std::size_t>(r)] -= proj * c[static_cast<std::size_t>(r)];
        }
        const double cn = norm2(cand);
        if (cn > best) {
          best = cn;
          u = std::move(cand);
        }
      }
      if (best < 1e-6) throw std::runtime_error("williamson: eigenvector pairing failed");
      for (double& x : u) x /= best;
      const std::vector<double> w = kp * u;
      const double mu = norm2(w);
      if (mu <= 0.0) throw std::runtime_error("williamson: degenerate pairing vector");
      std::vector<double> v(static_cast<std::size_t>(d));
      for (int r = 0; r < d; ++r)
        v[static_cast<std::size_t>(r)] = -w[static_cast<std::size_t>(r)] / mu;
      for (int r = 0; r < d; ++r) {
        u_cols(r, out) = u[static_cast<std::size_t>(r)];
        v_cols(r, out) = v[static_cast<std::size_t>(r)];
      }
      lambda[static_cast<std::size_t>(out)] = 1.0 / mu;
      ++out;
      chosen.push_back(std::move(u));
      chosen.push_back(std::move(v));
    }
    i = lo - 1;
  }
  if (out != n) throw std::runtime_error("williamson: eigenvector pairing failed");

  // S0 = D^{-1/2} R^T M^{1/2} with D = diag(L, L); then M = S0^T D S0 and
  // S0 is symplectic.
  std::vector<double> d_inv_root(static_cast<std::size_t>(d));
  std::vector<double> d_diag(static_cast<std::size_t>(d));
  for (int q = 0; q < n; ++q) {
    d_inv_root[static_cast<std::size_t>(q)] = 1.0 / std::sqrt(lambda[static_cast<std::size_t>(q)]);
    d_inv_root[static_cast<std::size_t>(n + q)] = d_inv_root[static_cast<std::size_t>(q)];
    d_diag[static_cast<std::size_t>(q)] = lambda[static_cast<std::size_t>(q)];
    d_diag[static_cast<std::size_t>(n + q)] = lambda[static_cast<std::size_t>(q)];
  }
  const Mat r = hcat(u_cols, v_cols);
  const Mat s0 = Mat::diag(d_inv_root) * r.transpose() * root;

  const double recon = (s0.transpose() * Mat::diag(d_diag) * s0 - m.mat()).frobenius();
  if (recon > 1e-7 * m.mat().frobenius())
    throw std::runtime_error("williamson: postcondition verification failed");
  return Williamson{SymplecticMatrix(s0, 1e-7), lambda};
}

SymplecticMatrix random_symplectic(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_symplectic: n must be positive");
  Rng rng(seed);
  const Mat j = standard_J(n);
  const Mat id = Mat::identity(n);
  Mat s = Mat::identity(2 * n);
  for (int round = 0; round < 2; ++round) {
    Mat l = id;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) l(a, b) += (0.4 / n) * rng.uniform(-1.0, 1.0);
    const Mat zero(n, n);
    s = assemble_blocks(inverse(l), zero, zero, l.transpose()) * s;

    Mat p(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        const double v = rng.uniform(-0.5, 0.5) / std::sqrt(static_cast<double>(n));
        p(a, b) = v;
        p(b, a) = v;
      }
    s = assemble_blocks(id, zero, p, id) * s;
    s = j * s;
  }
  return SymplecticMatrix(s);
}

Mat orthonormalize_columns(const Mat& b) {
  const int rows = b.rows();
  const int cols = b.cols();
  Mat q = b;
  for (int c = 0; c < cols; ++c) {
    for (int prev = 0; prev < c; ++prev) {
      double proj = 0.0;
      for (int r = 0; r < rows; ++r) proj += q(r, c) * q(r, prev);
      for (int r = 0; r < rows; ++r) q(r, c) -= proj * q(r, prev);
    }
    double nrm = 0.0;
    for (int r = 0; r < rows; ++r) nrm += q(r, c) * q(r, c);
    nrm = std::sqrt(nrm);
    if (nrm < 1e-10)
      throw std::invalid_argument("orthonormalize_columns: columns are rank deficient");
    for (int r = 0; r < rows; ++r) q(r, c) /= nrm;
  }
  return q;
}

Mat orthonormal_complement(const Mat& b) {
  const int rows = b.rows();
  const int cols = b.cols();
  if (cols >= rows) throw std::invalid_argument("orthonormal_complement: no room to complete");
  Mat full(rows, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) full(r, c) = b(r, c);
  int have = cols;
  for (int axis = 0; axis < rows && have < rows; ++axis) {
    std::vector<double> e(static_cast<std::size_t>(rows), 0.0);
    e[static_cast<std::size_t>(axis)] = 1.0;
    for (int c = 0; c < have; ++c) {
      double proj = 0.0;
      for (int r = 0; r < rows; ++r) proj += e[static_cast<std::size_t>(r)] * full(r, c);
      for (int r = 0; r < rows; ++r) e[static_cast<std::size_t>(r)] -= proj * full(r, c);
    }
    const double nrm = norm2(e);
    if (nrm < 1e-6) continue;
    for (int r = 0; r < rows; ++r) full(r, have) = e[static_cast<std::size_t>(r)] / nrm;
    ++have;
  }
  if (have != rows) throw std::runtime_error("orthonormal_complement: completion failed");
  return block_of(full, 0, cols, rows, rows - cols);
}

bool is_lagrangian(const Mat& basis, double tol) {
  if (basis.rows() % 2 != 0 || basis.cols() != basis.rows() / 2)
    throw std::invalid_argument("is_lagrangian: basis must be 2n x n");
  orthonormalize_columns(basis);  // rank check; throws when deficient
  const Mat j = standard_J(basis.rows() / 2);
  return (basis.transpose() * j * basis).frobenius() <= tol;
}

LagrangianPlane::LagrangianPlane(Mat basis, double tol) {
  if (basis.rows() % 2 != 0 || basis.cols() != basis.rows() / 2)
    throw std::invalid_argument("LagrangianPlane: basis must be 2n x n");
  basis_ = orthonormalize_columns(basis);
  const Mat j = standard_J(basis_.rows() / 2);
  if ((basis_.transpose() * j * basis_).frobenius() > tol)
    throw std::invalid_argument("LagrangianPlane: basis is not isotropic");
}

LagrangianPlane LagrangianPlane::coordinate_x(int n) {
  Mat b(2 * n, n);
  for (int i = 0; i < n; ++i) b(i, i) = 1.0;
  return LagrangianPlane(b);
}

LagrangianPlane LagrangianPlane::coordinate_p(int n) {
  Mat b(2 * n, n);
  for (int i = 0; i < n; ++i) b(n + i, i) = 1.0;
  return LagrangianPlane(b);
}

LagrangianPlane random_lagrangian(int n, std::uint64_t seed) {
  const SymplecticMatrix s = random_symplectic(n, seed);
  return LagrangianPlane(s.mat() * LagrangianPlane::coordinate_x(n).basis());
}

}  // namespace sympolar
