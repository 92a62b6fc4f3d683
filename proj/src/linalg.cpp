#include "wavset/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace wavset {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const Matrix& input, int max_sweeps) {
  const Eigen::Index n = input.rows();
  Matrix a = (input + input.adjoint()) / 2.0;
  Matrix v = Matrix::Identity(n, n);
  const double stop = 1e-12 * std::max(1.0, a.norm());
  int sweep = 0;
  for (; sweep < max_sweeps && off_diagonal_norm(a) >= stop; ++sweep) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase out a(p,q), then a real rotation annihilates it.
        const std::complex<double> phase = std::conj(a(p, q)) / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotation block [[j00, j01], [j10, j11]] acting on columns p, q.
        const std::complex<double> j00 = c, j01 = s, j10 = -s * phase, j11 = c * phase;
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * j00 + akq * j10;
          a(k, q) = akp * j01 + akq * j11;
          const auto vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * j00 + vkq * j10;
          v(k, q) = vkp * j01 + vkq * j11;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const auto apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
          a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]).real();
    out.vectors.col(i) = v.col(order[i]);
  }
  out.sweeps = sweep;
  return out;
}

Matrix spectral_apply(const HermitianEigen& e, const std::function<std::complex<double>(double)>& f) {
  Vector d(e.values.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(e.values(i));
  return e.vectors * d.asDiagonal() * e.vectors.adjoint();
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() && max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())) <= tol;
}

double max_abs(const Matrix& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

Matrix nullspace(const Matrix& a, double rel_tol) {
  const Eigen::Index n = a.cols();
  if (a.rows() == 0) return Matrix::Identity(n, n);
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * (sv.size() ? sv(0) : 0.0);
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
  return svd.matrixV().rightCols(n - r);
}

int numerical_rank(const Matrix& a, double rel_tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  const double cut = rel_tol * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > cut && sv(r) > 0.0) ++r;
  return r;
}

double condition_number(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

Vector random_vector(int n, Rng& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = {g(rng), g(rng)};
  return v;
}

Vector random_unit_vector(int n, Rng& rng) { return random_vector(n, rng).normalized(); }

Matrix random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = {g(rng), g(rng)};
  return m;
}

Matrix random_unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

Matrix random_hermitian(int n, Rng& rng) {
  Matrix m = random_matrix(n, n, rng);
  return (m + m.adjoint()) / 2.0;
}

}  // namespace wavset
