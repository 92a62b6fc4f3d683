#pragma once

#include "wavset/linalg.hpp"

#include <utility>
#include <vector>

namespace wavset {

// A frame of k vectors in ℂ^n is stored as its n×k synthesis matrix: the
// vectors are the columns.

/// F F*
Matrix frame_operator(const Matrix& f);

struct FrameBounds {
  double lower;  // clamped to 0 below 1e-12·upper
  double upper;
  bool is_frame;
};
FrameBounds frame_bounds(const Matrix& f);

/// Spectral norm of F F* - I is at most tol.
bool is_parseval(const Matrix& f, double tol = 1e-10);

/// The (k-n)×k frame G whose columns complete those of a Parseval F to an
/// orthonormal basis of ℂ^k: the stacked matrix [F; G] is unitary.
Matrix naimark_complement(const Matrix& f, double tol = 1e-10);

/// G F* = 0
bool strongly_disjoint(const Matrix& f, const Matrix& g, double tol = 1e-10);

/// One coefficient stream c = F*x + G*y, decoded as (F c, G c).
std::pair<Vector, Vector> multiplex(const Matrix& f, const Matrix& g, const Vector& x, const Vector& y);
/// multiplex with its preconditions enforced: F, G Parseval and strongly
/// disjoint.
std::pair<Vector, Vector> multiplex_roundtrip(const Matrix& f, const Matrix& g, const Vector& x, const Vector& y,
                                              double tol = 1e-10);

/// Sorted partial sums of eigs dominate those of weights (shorter list padded
/// with zeros) and the totals agree.
bool majorization_check(std::vector<double> eigs, std::vector<double> weights, double tol = 1e-10);

struct RankOneDecomposition {
  std::vector<double> weights;
  Matrix units;  // n×m, unit columns
  double residual;  // max |B - Σ c_i u_i u_i*|
};

/// B = Σ c_i u_i u_i* with unit u_i, by Schur-Horn synthesis. Throws
/// Infeasible when trace or majorization fails.
RankOneDecomposition weighted_decomposition(const Matrix& b, const std::vector<double>& weights);
/// All weights 1; requires trace(B) = k.
RankOneDecomposition projection_decomposition(const Matrix& b, int k);

struct EtfResult {
  Matrix frame;  // n×k, columns T x_j with unit x_j
  double bound;  // k / trace(T^{-2})
};
EtfResult etf_construct(const Matrix& t, int k);

/// First n rows of a random k×k unitary.
Matrix random_parseval_frame(int n, int k, Rng& rng);
/// Random positive definite matrix with trace exactly `trace`.
Matrix random_positive(int n, double trace, Rng& rng);

}  // namespace wavset
