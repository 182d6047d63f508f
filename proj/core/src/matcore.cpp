#include "sympolar/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sympolar {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows > 0 && cols > 0, "Mat: dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Mat::Mat(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  require(rows_ > 0, "Mat: empty initializer");
  cols_ = static_cast<int>(rows.begin()->size());
  require(cols_ > 0, "Mat: empty initializer row");
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    require(static_cast<int>(r.size()) == cols_, "Mat: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(int d) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::diag(const std::vector<double>& d) {
  Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Mat::frobenius() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

double Mat::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "Mat+: dimension mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "Mat-: dimension mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Mat operator-(const Mat& a) { return -1.0 * a; }

Mat operator*(const Mat& a, const Mat& b) {
  require(a.cols() == b.rows(), "Mat*: dimension mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Mat operator*(double s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

Mat operator*(const Mat& a, double s) { return s * a; }

std::vector<double> operator*(const Mat& a, const std::vector<double>& v) {
  require(a.cols() == static_cast<int>(v.size()), "Mat*vec: dimension mismatch");
  std::vector<double> r(static_cast<std::size_t>(a.rows()), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * v[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

double quad_form(const Mat& m, const std::vector<double>& z) {
  require(m.square(), "quad_form: matrix must be square");
  return dot(m * z, z);
}

Mat hcat(const Mat& a, const Mat& b) {
  require(a.rows() == b.rows(), "hcat: row mismatch");
  Mat c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

Mat block_of(const Mat& m, int r0, int c0, int nr, int nc) {
  require(r0 >= 0 && c0 >= 0 && nr > 0 && nc > 0 && r0 + nr <= m.rows() && c0 + nc <= m.cols(),
          "block_of: block out of range");
  Mat b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

Mat assemble_blocks(const Mat& xx, const Mat& xp, const Mat& px, const Mat& pp) {
  require(xx.rows() == xp.rows() && px.rows() == pp.rows() && xx.cols() == px.cols() &&
              xp.cols() == pp.cols(),
          "assemble_blocks: block dimension mismatch");
  Mat m(xx.rows() + px.rows(), xx.cols() + xp.cols());
  for (int i = 0; i < xx.rows(); ++i) {
    for (int j = 0; j < xx.cols(); ++j) m(i, j) = xx(i, j);
    for (int j = 0; j < xp.cols(); ++j) m(i, xx.cols() + j) = xp(i, j);
  }
  for (int i = 0; i < px.rows(); ++i) {
    for (int j = 0; j < px.cols(); ++j) m(xx.rows() + i, j) = px(i, j);
    for (int j = 0; j < pp.cols(); ++j) m(xx.rows() + i, xx.cols() + j) = pp(i, j);
  }
  return m;
}

Mat inverse(const Mat& m) {
  require(m.square(), "inverse: matrix must be square");
  const int d = m.rows();
  Mat a = m;
  Mat inv = Mat::identity(d);
  const double tiny = std::max(m.max_abs(), 1.0) * 1e-14 * d;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (std::fabs(a(piv, col)) <= tiny) throw std::invalid_argument("inverse: singular matrix");
    if (piv != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const double p = a(col, col);
    for (int j = 0; j < d; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

double determinant(const Mat& m) {
  require(m.square(), "determinant: matrix must be square");
  const int d = m.rows();
  Mat a = m;
  double det = 1.0;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    for (int r = col + 1; r < d; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      det = -det;
      for (int j = 0; j < d; ++j) std::swap(a(piv, j), a(col, j));
    }
    det *= a(col, col);
    for (int r = col + 1; r < d; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < d; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

SymMatrix::SymMatrix(Mat m, double asym_tol) {
  require(m.square(), "SymMatrix: matrix must be square");
  const double fro = m.frobenius();
  const double asym = (m - m.transpose()).frobenius();
  if (asym > asym_tol * std::max(fro, 1e-300))
    throw std::invalid_argument("SymMatrix: input is not symmetric within tolerance");
  mat_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::from_diag(const std::vector<double>& d) { return SymMatrix(Mat::diag(d)); }

PosDefMatrix::PosDefMatrix(SymMatrix s, double floor) : sym_(std::move(s)) {
  const SymEigen eig = sym_eigen(sym_);
  const double lo = eig.values.front();
  const double hi = eig.values.back();
  if (!(hi > 0.0) || lo <= floor * hi)
    throw std::invalid_argument("PosDefMatrix: matrix is not positive definite");
}

PosDefMatrix::PosDefMatrix(Mat m, double floor) : PosDefMatrix(SymMatrix(std::move(m)), floor) {}

BlockSplit block_split(const Mat& m) {
  require(m.square() && m.rows() % 2 == 0, "block_split: matrix must be square of even dimension");
  const int n = m.rows() / 2;
  return BlockSplit{block_of(m, 0, 0, n, n), block_of(m, 0, n, n, n), block_of(m, n, 0, n, n),
                    block_of(m, n, n, n, n)};
}

namespace {

double off_diag_norm(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

SymEigen sym_eigen(const SymMatrix& sym) {
  const int d = sym.dim();
  Mat a = sym.mat();
  Mat v = Mat::identity(d);
  const double fro = a.frobenius();
  if (fro == 0.0) return SymEigen{std::vector<double>(static_cast<std::size_t>(d), 0.0), v};

  const double threshold = 1e-13 * fro;
  const int max_sweeps = 100;
  int sweep = 0;
  while (off_diag_norm(a) > threshold) {
    if (sweep++ >= max_sweeps)
      throw std::runtime_error("sym_eigen: Jacobi iteration did not converge in 100 sweeps");
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(p, r) = a(r, p);
          a(r, q) = arq + s * (arp - tau * arq);
          a(q, r) = a(r, q);
        }
        for (int r = 0; r < d; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  SymEigen out;
  out.values.resize(static_cast<std::size_t>(d));
  out.vectors = Mat(d, d);
  for (int k = 0; k < d; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src);
    for (int r = 0; r < d; ++r) out.vectors(r, k) = v(r, src);
  }
  return out;
}

PosDefMatrix sym_pow(const PosDefMatrix& a, double p) {
  const SymEigen eig = sym_eigen(a.sym());
  std::vector<double> d(eig.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = std::pow(eig.values[i], p);
  const Mat r = eig.vectors * Mat::diag(d) * eig.vectors.transpose();
  return PosDefMatrix(SymMatrix(r));
}

PosDefMatrix mat_sqrt(const PosDefMatrix& a) { return sym_pow(a, 0.5); }

PosDefMatrix posdef_inverse(const PosDefMatrix& a) { return sym_pow(a, -1.0); }

double posdef_det(const PosDefMatrix& a) {
  const SymEigen eig = sym_eigen(a.sym());
  double det = 1.0;
  for (double v : eig.values) det *= v;
  return det;
}

bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol) {
  require(a.dim() == b.dim(), "loewner_leq: dimension mismatch");
  const SymMatrix diff(b.mat() - a.mat());
  const SymEigen eig = sym_eigen(diff);
  return eig.values.front() >= -tol;
}

PosDefMatrix schur_complement(const PosDefMatrix& m, SchurAgainst against) {
  const BlockSplit blocks = block_split(m.mat());
  // Principal blocks of a positive definite matrix are positive definite.
  if (against == SchurAgainst::PP) {
    const Mat pp_inv = posdef_inverse(PosDefMatrix(SymMatrix(blocks.pp))).mat();
    return PosDefMatrix(SymMatrix(blocks.xx - blocks.xp * pp_inv * blocks.px));
  }
  const Mat xx_inv = posdef_inverse(PosDefMatrix(SymMatrix(blocks.xx))).mat();
  return PosDefMatrix(SymMatrix(blocks.pp - blocks.px * xx_inv * blocks.xp));
}

Mat block_inverse(const PosDefMatrix& m) {
  const BlockSplit blocks = block_split(m.mat());
  const Mat pp_inv = posdef_inverse(PosDefMatrix(SymMatrix(blocks.pp))).mat();
  const Mat s_pp_inv = posdef_inverse(schur_complement(m, SchurAgainst::PP)).mat();
  const Mat s_xx_inv = posdef_inverse(schur_complement(m, SchurAgainst::XX)).mat();
  const Mat xp = -1.0 * (s_pp_inv * blocks.xp * pp_inv);
  const Mat px = -1.0 * (pp_inv * blocks.px * s_pp_inv);
  return assemble_blocks(s_pp_inv, xp, px, s_xx_inv);
}

}  // namespace sympolar
