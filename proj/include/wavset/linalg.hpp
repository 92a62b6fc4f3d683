#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace wavset {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

/// Rank and nullspace threshold, relative to the largest singular value.
inline constexpr double kRankTol = 1e-10;

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  Matrix vectors;          // orthonormal columns, matching values
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a Hermitian matrix. Stops once the
/// off-diagonal Frobenius norm drops below 1e-12·max(1, ‖A‖_F).
HermitianEigen hermitian_eigen(const Matrix& a, int max_sweeps = 100);

/// f applied to the spectrum: V·diag(f(λ))·V*.
Matrix spectral_apply(const HermitianEigen& e, const std::function<std::complex<double>(double)>& f);

bool is_hermitian(const Matrix& a, double tol = 1e-12);
bool is_unitary(const Matrix& u, double tol = 1e-10);
double max_abs(const Matrix& a);

/// Orthonormal basis (columns) of the nullspace, via SVD.
Matrix nullspace(const Matrix& a, double rel_tol = kRankTol);
int numerical_rank(const Matrix& a, double rel_tol = kRankTol);
/// σ_max/σ_min; infinity for singular input.
double condition_number(const Matrix& a);

Vector random_vector(int n, Rng& rng);
Vector random_unit_vector(int n, Rng& rng);
Matrix random_matrix(int rows, int cols, Rng& rng);
/// Haar-distributed: QR of a complex Gaussian matrix with R's phases removed.
Matrix random_unitary(int n, Rng& rng);
Matrix random_hermitian(int n, Rng& rng);

}  // namespace wavset
