#pragma once

#include "wavset/linalg.hpp"

#include <string_view>
#include <vector>

namespace wavset {

/// Finite unitary system: elements[0] is the identity.
struct UnitarySystem {
  int dim = 0;
  std::vector<Matrix> elements;
};

/// Validates unitarity (1e-10) and that the first element is the identity.
UnitarySystem make_system(std::vector<Matrix> elements);

/// Left regular representation L_g e_h = e_{g·h} of a group given by its
/// Cayley table (entries are element indices). The identity element comes
/// first; the remaining elements keep table order.
UnitarySystem regular_representation(const std::vector<std::vector<int>>& table);

/// Closed under products (up to tol).
bool is_semigroup(const UnitarySystem& u, double tol = 1e-10);

/// {U x : U ∈ system} is orthonormal to tol.
bool is_wandering_vector(const UnitarySystem& u, const Vector& x, double tol = 1e-10);
/// Wandering and the orbit spans the whole space.
bool is_complete_wandering_vector(const UnitarySystem& u, const Vector& x, double tol = 1e-10);

struct OperatorSubspaceBasis {
  int dim = 0;
  std::vector<Matrix> basis;  // orthonormal in the Frobenius inner product
};

/// {A : (A U - U A) x = 0 for every element U}
OperatorSubspaceBasis local_commutant(const UnitarySystem& u, const Vector& x, double rel_tol = kRankTol);
/// {A : A U = U A for every element U}
OperatorSubspaceBasis commutant(const UnitarySystem& u, double rel_tol = kRankTol);
/// Frobenius distance from m to the span of the basis.
double span_residual(const OperatorSubspaceBasis& s, const Matrix& m);
/// Random element of the span, with complex Gaussian coefficients.
Matrix random_element(const OperatorSubspaceBasis& s, Rng& rng);

/// The V with V(U_i ψ) = U_i η for all i. Requires complete wandering ψ, η.
Matrix interpolation_unitary(const UnitarySystem& u, const Vector& psi, const Vector& eta, double tol = 1e-10);

inline constexpr double kRieszConditionLimit = 1e8;
/// ψ1 + λψ2 is a complete Riesz vector: its orbit matrix is square and has
/// condition number below 1e8.
bool riesz_combination_check(const UnitarySystem& u, const Vector& psi1, const Vector& psi2,
                             std::complex<double> lambda);

struct PairTestResult {
  bool rho_is_wandering;
  bool v_squared_is_identity;
};
/// ρ = cos α·ψ + i sin α·η is tested for wandering, and V² = I is tested
/// separately.
PairTestResult interpolation_pair_test(const UnitarySystem& u, const Vector& psi, const Vector& eta, double alpha,
                                       double tol = 1e-10);

enum class FrameVectorKind { Wandering, ParsevalFrameVector, Neither };
std::string_view frame_vector_kind_name(FrameVectorKind k);

struct FrameVectorReport {
  FrameVectorKind kind;
  /// The A in the local commutant at ψ with Aψ = x.
  Matrix a;
  /// A A* is a projection (A a partial isometry); A A* = I when complete.
  bool partial_isometry;
  bool complete;
};
/// psi must be a complete wandering vector for u.
FrameVectorReport parseval_frame_vector_check(const UnitarySystem& u, const Vector& psi, const Vector& x,
                                              double tol = 1e-10);

/// Columns U_i x.
Matrix orbit_matrix(const UnitarySystem& u, const Vector& x);

/// exp(iH)ψ for a random Hermitian H in the commutant: another complete
/// wandering vector whenever ψ is one.
Vector random_commutant_rotation(const UnitarySystem& u, const Vector& psi, Rng& rng);
/// I - 2P for P a random spectral projection of a Hermitian commutant
/// element; a symmetry in the commutant.
Matrix random_commutant_symmetry(const UnitarySystem& u, Rng& rng);

/// {I, L_1 D_1, ..., L_{n-1} D_{n-1}}: cyclic shifts twisted by random
/// diagonal phases. Not closed under products, yet e_0 stays a complete
/// wandering vector.
UnitarySystem twisted_shift_system(int n, Rng& rng);

/// Cayley table of ℤ_n.
std::vector<std::vector<int>> cyclic_group_table(int n);

}  // namespace wavset
