#include "wavset/frames.hpp"

#include "wavset/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace wavset {

Matrix frame_operator(const Matrix& f) { return f * f.adjoint(); }

FrameBounds frame_bounds(const Matrix& f) {
  const auto e = hermitian_eigen(frame_operator(f));
  double lower = e.values(0);
  const double upper = e.values(e.values.size() - 1);
  if (lower < 1e-12 * std::max(1.0, upper)) lower = 0.0;
  return {lower, upper, lower > 0.0};
}

bool is_parseval(const Matrix& f, double tol) {
  const auto n = f.rows();
  const auto e = hermitian_eigen(frame_operator(f) - Matrix::Identity(n, n));
  return std::max(std::abs(e.values(0)), std::abs(e.values(n - 1))) <= tol;
}

Matrix naimark_complement(const Matrix& f, double tol) {
  if (!is_parseval(f, tol)) throw Error(ErrorCode::Precondition, "Naimark complement needs a Parseval frame");
  const auto n = f.rows(), k = f.cols();
  Eigen::HouseholderQR<Matrix> qr(f.adjoint());
  const Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  Matrix g = q.rightCols(k - n).adjoint();
  Matrix stacked(k, k);
  stacked << f, g;
  if (!is_unitary(stacked, tol)) throw Error(ErrorCode::Internal, "Naimark assembly is not unitary");
  return g;
}

bool strongly_disjoint(const Matrix& f, const Matrix& g, double tol) {
  if (f.cols() != g.cols()) throw Error(ErrorCode::InvalidInput, "frames must have the same number of vectors");
  return max_abs(g * f.adjoint()) <= tol;
}

std::pair<Vector, Vector> multiplex(const Matrix& f, const Matrix& g, const Vector& x, const Vector& y) {
  if (f.cols() != g.cols()) throw Error(ErrorCode::InvalidInput, "frames must have the same number of vectors");
  if (x.size() != f.rows() || y.size() != g.rows()) throw Error(ErrorCode::InvalidInput, "vector size mismatch");
  const Vector c = f.adjoint() * x + g.adjoint() * y;
  return {f * c, g * c};
}

std::pair<Vector, Vector> multiplex_roundtrip(const Matrix& f, const Matrix& g, const Vector& x, const Vector& y,
                                              double tol) {
  if (!is_parseval(f, tol) || !is_parseval(g, tol))
    throw Error(ErrorCode::Precondition, "multiplexing needs Parseval frames");
  if (!strongly_disjoint(f, g, tol)) throw Error(ErrorCode::Precondition, "frames are not strongly disjoint");
  return multiplex(f, g, x, y);
}

bool majorization_check(std::vector<double> eigs, std::vector<double> weights, double tol) {
  auto negative = [](double v) { return v < 0.0; };
  if (std::any_of(eigs.begin(), eigs.end(), negative) || std::any_of(weights.begin(), weights.end(), negative))
    throw Error(ErrorCode::InvalidInput, "majorization inputs must be non-negative");
  const std::size_t n = std::max(eigs.size(), weights.size());
  eigs.resize(n, 0.0);
  weights.resize(n, 0.0);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  std::sort(weights.begin(), weights.end(), std::greater<>());
  double se = 0.0, sw = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    se += eigs[i];
    sw += weights[i];
    if (se < sw - tol) return false;
  }
  return std::abs(se - sw) <= tol;
}

namespace {

// Real orthogonal Q with (Qᵀ diag(a) Q)_ii = c_i, for a and c sorted
// decreasingly with a majorizing c. Each step is a T-transform: rotate in
// the plane (j, k) with j the last index where the diagonal exceeds its
// target and k the first later index where it falls short, moving the
// smaller of the two gaps.
Eigen::MatrixXd schur_horn_rotation(const std::vector<double>& a, const std::vector<double>& c) {
  const int n = static_cast<int>(a.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = a[i];
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  const double scale = std::max(1.0, std::accumulate(a.begin(), a.end(), 0.0));
  const double eps = 1e-14 * scale;
  std::vector<double> d = a;
  for (int step = 0; step < n; ++step) {
    int j = -1;
    for (int i = 0; i < n; ++i)
      if (d[i] > c[i] + eps) j = i;
    if (j < 0) break;
    int k = -1;
    for (int i = j + 1; i < n && k < 0; ++i)
      if (d[i] < c[i] - eps) k = i;
    if (k < 0) break;  // only rounding residue left
    const double delta = std::min(d[j] - c[j], c[k] - d[k]);
    const double target = d[j] - delta;
    // m'_jj = mid + r·cos(2θ - φ)
    const double mid = (m(j, j) + m(k, k)) / 2.0;
    const double half = (m(j, j) - m(k, k)) / 2.0;
    const double r = std::hypot(half, m(j, k));
    const double phi = std::atan2(m(j, k), half);
    const double ratio = r > 0.0 ? std::clamp((target - mid) / r, -1.0, 1.0) : 1.0;
    const double theta = (phi + std::acos(ratio)) / 2.0;
    Eigen::MatrixXd g = Eigen::MatrixXd::Identity(n, n);
    g(j, j) = std::cos(theta);
    g(k, j) = std::sin(theta);
    g(j, k) = -std::sin(theta);
    g(k, k) = std::cos(theta);
    m = g.transpose() * m * g;
    q = q * g;
    d[j] -= delta;
    d[k] += delta;
  }
  return q;
}

}  // namespace

RankOneDecomposition weighted_decomposition(const Matrix& b, const std::vector<double>& weights) {
  if (!is_hermitian(b, 1e-12)) throw Error(ErrorCode::InvalidInput, "matrix must be Hermitian");
  if (weights.empty()) throw Error(ErrorCode::InvalidInput, "weights must be nonempty");
  for (double w : weights)
    if (!(w > 0.0)) throw Error(ErrorCode::InvalidInput, "weights must be positive");
  const int n = static_cast<int>(b.rows());
  const int m = static_cast<int>(weights.size());
  const auto e = hermitian_eigen(b);
  const double top = std::max(1.0, std::abs(e.values(n - 1)));
  if (e.values(0) < -1e-10 * top) throw Error(ErrorCode::InvalidInput, "matrix must be positive semidefinite");

  // Eigenpairs in decreasing order, small negative rounding clamped.
  std::vector<double> lambda(n);
  Matrix v(n, n);
  for (int i = 0; i < n; ++i) {
    lambda[i] = std::max(0.0, e.values(n - 1 - i));
    v.col(i) = e.vectors.col(n - 1 - i);
  }
  const double trace = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(trace - total) > 1e-8) throw Error(ErrorCode::Infeasible, "weights do not sum to the trace");
  if (!majorization_check(lambda, weights, 1e-8))
    throw Error(ErrorCode::Infeasible, "eigenvalues do not majorize the weights");

  const int size = std::max(n, m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return weights[x] > weights[y]; });
  std::vector<double> a(size, 0.0), c(size, 0.0);
  for (int i = 0; i < n; ++i) a[i] = lambda[i];
  for (int i = 0; i < m; ++i) c[i] = weights[order[i]];
  // Match totals exactly so rounding cannot leave a gap with no partner.
  const double drift = std::accumulate(a.begin(), a.end(), 0.0) - std::accumulate(c.begin(), c.end(), 0.0);
  a[0] -= drift;

  const Eigen::MatrixXd q = schur_horn_rotation(a, c);
  RankOneDecomposition out;
  out.weights = weights;
  out.units = Matrix::Zero(n, m);
  for (int i = 0; i < m; ++i) {
    Vector col(n);
    for (int r = 0; r < n; ++r) col(r) = std::sqrt(std::max(0.0, a[r])) * q(r, i);
    out.units.col(order[i]) = (v * col).normalized();
  }
  Matrix recon = Matrix::Zero(n, n);
  for (int i = 0; i < m; ++i) recon += weights[i] * out.units.col(i) * out.units.col(i).adjoint();
  out.residual = max_abs(b - recon);
  return out;
}

RankOneDecomposition projection_decomposition(const Matrix& b, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "k must be positive");
  if (std::abs(b.trace().real() - k) > 1e-8) throw Error(ErrorCode::InvalidInput, "trace(B) must equal k");
  return weighted_decomposition(b, std::vector<double>(k, 1.0));
}

EtfResult etf_construct(const Matrix& t, int k) {
  const int n = static_cast<int>(t.rows());
  if (k < n) throw Error(ErrorCode::InvalidInput, "ETF length must be at least the dimension");
  if (!is_hermitian(t, 1e-12)) throw Error(ErrorCode::InvalidInput, "T must be Hermitian");
  const auto e = hermitian_eigen(t);
  if (e.values(0) <= 1e-12 * std::max(1.0, std::abs(e.values(n - 1))))
    throw Error(ErrorCode::Precondition, "T must be positive and invertible");
  const Matrix inv_sq = spectral_apply(e, [](double l) { return std::complex<double>(1.0 / (l * l)); });
  const double bound = k / inv_sq.trace().real();
  Matrix s = bound * inv_sq;
  s = (s + s.adjoint()) / 2.0;
  // Pin the trace exactly to k before decomposing.
  s += Matrix::Identity(n, n) * ((k - s.trace().real()) / n);
  const auto dec = projection_decomposition(s, k);
  return {t * dec.units, bound};
}

Matrix random_parseval_frame(int n, int k, Rng& rng) { return random_unitary(k, rng).topRows(n); }

Matrix random_positive(int n, double trace, Rng& rng) {
  const Matrix g = random_matrix(n, n, rng);
  Matrix p = g * g.adjoint() + 0.1 * Matrix::Identity(n, n);
  p *= trace / p.trace().real();
  return (p + p.adjoint()) / 2.0;
}

}  // namespace wavset
