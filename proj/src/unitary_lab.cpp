#include "wavset/unitary_lab.hpp"

#include "wavset/error.hpp"

#include <cmath>
#include <numbers>

namespace wavset {

UnitarySystem make_system(std::vector<Matrix> elements) {
  if (elements.empty()) throw Error(ErrorCode::InvalidInput, "unitary system needs at least the identity");
  const auto n = elements.front().rows();
  for (const auto& m : elements) {
    if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::InvalidInput, "system elements differ in size");
    if (!is_unitary(m)) throw Error(ErrorCode::InvalidInput, "system element is not unitary");
  }
  if (max_abs(elements.front() - Matrix::Identity(n, n)) > 1e-10)
    throw Error(ErrorCode::InvalidInput, "first system element must be the identity");
  return {static_cast<int>(n), std::move(elements)};
}

std::vector<std::vector<int>> cyclic_group_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) t[g][h] = (g + h) % n;
  return t;
}

UnitarySystem regular_representation(const std::vector<std::vector<int>>& table) {
  const int k = static_cast<int>(table.size());
  if (k == 0) throw Error(ErrorCode::InvalidInput, "empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::InvalidInput, "group table must be square");
    for (int v : row)
      if (v < 0 || v >= k) throw Error(ErrorCode::InvalidInput, "group table entry out of range");
  }
  int e = -1;
  for (int g = 0; g < k && e < 0; ++g) {
    bool ok = true;
    for (int h = 0; h < k && ok; ++h) ok = table[g][h] == h && table[h][g] == h;
    if (ok) e = g;
  }
  if (e < 0) throw Error(ErrorCode::InvalidInput, "group table has no identity");
  for (int g = 0; g < k; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < k; ++h) has_inverse = has_inverse || (table[g][h] == e && table[h][g] == e);
    if (!has_inverse) throw Error(ErrorCode::InvalidInput, "group table element without inverse");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::InvalidInput, "group table is not associative");

  std::vector<int> order{e};
  for (int g = 0; g < k; ++g)
    if (g != e) order.push_back(g);
  std::vector<Matrix> elements;
  for (int g : order) {
    Matrix m = Matrix::Zero(k, k);
    for (int h = 0; h < k; ++h) m(table[g][h], h) = 1.0;
    elements.push_back(std::move(m));
  }
  return make_system(std::move(elements));
}

bool is_semigroup(const UnitarySystem& u, double tol) {
  for (const auto& a : u.elements) {
    for (const auto& b : u.elements) {
      const Matrix p = a * b;
      bool found = false;
      for (const auto& c : u.elements) {
        if (max_abs(p - c) <= tol) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

Matrix orbit_matrix(const UnitarySystem& u, const Vector& x) {
  if (x.size() != u.dim) throw Error(ErrorCode::InvalidInput, "vector dimension does not match the system");
  Matrix m(u.dim, static_cast<Eigen::Index>(u.elements.size()));
  for (std::size_t i = 0; i < u.elements.size(); ++i) m.col(i) = u.elements[i] * x;
  return m;
}

bool is_wandering_vector(const UnitarySystem& u, const Vector& x, double tol) {
  const Matrix orbit = orbit_matrix(u, x);
  const Matrix gram = orbit.adjoint() * orbit;
  return max_abs(gram - Matrix::Identity(gram.rows(), gram.cols())) <= tol;
}

bool is_complete_wandering_vector(const UnitarySystem& u, const Vector& x, double tol) {
  return is_wandering_vector(u, x, tol) && numerical_rank(orbit_matrix(u, x)) == u.dim;
}

namespace {

OperatorSubspaceBasis basis_from_nullspace(int dim, const Matrix& null) {
  OperatorSubspaceBasis out{dim, {}};
  for (Eigen::Index c = 0; c < null.cols(); ++c) {
    out.basis.push_back(Eigen::Map<const Matrix>(null.col(c).data(), dim, dim));
  }
  return out;
}

}  // namespace

// vec(A y) = (yᵀ ⊗ I) vec(A) and vec(U A x) = (xᵀ ⊗ U) vec(A), column-major.
OperatorSubspaceBasis local_commutant(const UnitarySystem& u, const Vector& x, double rel_tol) {
  const int d = u.dim;
  Matrix system(d * static_cast<Eigen::Index>(u.elements.size()), d * d);
  for (std::size_t i = 0; i < u.elements.size(); ++i) {
    const Matrix& ui = u.elements[i];
    const Vector y = ui * x;
    Matrix block = Matrix::Zero(d, d * d);
    for (int c = 0; c < d; ++c) {
      block.block(0, c * d, d, d) = y(c) * Matrix::Identity(d, d) - x(c) * ui;
    }
    system.middleRows(i * d, d) = block;
  }
  return basis_from_nullspace(d, nullspace(system, rel_tol));
}

// vec(A U) = (Uᵀ ⊗ I) vec(A) and vec(U A) = (I ⊗ U) vec(A).
OperatorSubspaceBasis commutant(const UnitarySystem& u, double rel_tol) {
  const int d = u.dim;
  Matrix system(d * d * static_cast<Eigen::Index>(u.elements.size()), d * d);
  for (std::size_t i = 0; i < u.elements.size(); ++i) {
    const Matrix& ui = u.elements[i];
    Matrix block = Matrix::Zero(d * d, d * d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        block.block(r * d, c * d, d, d) += ui(c, r) * Matrix::Identity(d, d);
      }
      block.block(r * d, r * d, d, d) -= ui;
    }
    system.middleRows(i * d * d, d * d) = block;
  }
  return basis_from_nullspace(d, nullspace(system, rel_tol));
}

double span_residual(const OperatorSubspaceBasis& s, const Matrix& m) {
  Vector v = Eigen::Map<const Vector>(m.data(), m.size());
  for (const auto& b : s.basis) {
    Eigen::Map<const Vector> bv(b.data(), b.size());
    v -= bv.dot(v) * bv;  // basis is Frobenius-orthonormal
  }
  return v.norm();
}

Matrix random_element(const OperatorSubspaceBasis& s, Rng& rng) {
  const Vector coeffs = random_vector(static_cast<int>(s.basis.size()), rng);
  Matrix m = Matrix::Zero(s.dim, s.dim);
  for (std::size_t i = 0; i < s.basis.size(); ++i) m += coeffs(i) * s.basis[i];
  return m;
}

Matrix interpolation_unitary(const UnitarySystem& u, const Vector& psi, const Vector& eta, double tol) {
  if (!is_complete_wandering_vector(u, psi, tol) || !is_complete_wandering_vector(u, eta, tol))
    throw Error(ErrorCode::Precondition, "interpolation needs two complete wandering vectors");
  const Matrix v = orbit_matrix(u, eta) * orbit_matrix(u, psi).adjoint();
  if (!is_unitary(v, tol)) throw Error(ErrorCode::Internal, "interpolation operator is not unitary");
  if (span_residual(local_commutant(u, psi), v) > tol)
    throw Error(ErrorCode::Internal, "interpolation operator left the local commutant");
  return v;
}

bool riesz_combination_check(const UnitarySystem& u, const Vector& psi1, const Vector& psi2,
                             std::complex<double> lambda) {
  const Matrix orbit = orbit_matrix(u, psi1 + lambda * psi2);
  if (orbit.rows() != orbit.cols()) return false;
  return condition_number(orbit) < kRieszConditionLimit;
}

PairTestResult interpolation_pair_test(const UnitarySystem& u, const Vector& psi, const Vector& eta, double alpha,
                                       double tol) {
  const Vector rho = std::cos(alpha) * psi + std::complex<double>(0.0, std::sin(alpha)) * eta;
  const Matrix v = interpolation_unitary(u, psi, eta, tol);
  const Matrix id = Matrix::Identity(u.dim, u.dim);
  return {is_wandering_vector(u, rho, tol), max_abs(v * v - id) <= tol};
}

std::string_view frame_vector_kind_name(FrameVectorKind k) {
  switch (k) {
    case FrameVectorKind::Wandering: return "wandering";
    case FrameVectorKind::ParsevalFrameVector: return "parseval_frame_vector";
    case FrameVectorKind::Neither: return "neither";
  }
  return "neither";
}

FrameVectorReport parseval_frame_vector_check(const UnitarySystem& u, const Vector& psi, const Vector& x,
                                              double tol) {
  if (!is_complete_wandering_vector(u, psi, tol))
    throw Error(ErrorCode::Precondition, "reference vector must be complete wandering");
  const Matrix orbit = orbit_matrix(u, x);
  const Matrix s = orbit * orbit.adjoint();
  const Matrix id = Matrix::Identity(u.dim, u.dim);
  FrameVectorReport r;
  r.a = orbit * orbit_matrix(u, psi).adjoint();
  const Matrix aa = r.a * r.a.adjoint();
  r.partial_isometry = max_abs(aa * aa - aa) <= tol;
  r.complete = max_abs(aa - id) <= tol;
  if (is_wandering_vector(u, x, tol)) {
    r.kind = FrameVectorKind::Wandering;
  } else if (max_abs(s * s - s) <= tol) {
    r.kind = FrameVectorKind::ParsevalFrameVector;
  } else {
    r.kind = FrameVectorKind::Neither;
  }
  // For group systems a complete Parseval frame vector is automatically wandering.
  if (r.kind == FrameVectorKind::ParsevalFrameVector && r.complete && is_semigroup(u, tol))
    throw Error(ErrorCode::Internal, "complete Parseval frame vector of a group system is not wandering");
  return r;
}

Vector random_commutant_rotation(const UnitarySystem& u, const Vector& psi, Rng& rng) {
  const Matrix b = random_element(commutant(u), rng);
  const Matrix h = (b + b.adjoint()) / 2.0;
  const Matrix w = spectral_apply(hermitian_eigen(h), [](double l) { return std::polar(1.0, l); });
  return w * psi;
}

Matrix random_commutant_symmetry(const UnitarySystem& u, Rng& rng) {
  const Matrix b = random_element(commutant(u), rng);
  const auto e = hermitian_eigen((b + b.adjoint()) / 2.0);
  // Reflect the eigenvectors above the median eigenvalue; a single
  // eigenvalue gives V = I.
  const double cut = e.values(e.values.size() / 2);
  return spectral_apply(e, [cut](double l) { return std::complex<double>(l >= cut ? -1.0 : 1.0); });
}

UnitarySystem twisted_shift_system(int n, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Matrix> elements{Matrix::Identity(n, n)};
  for (int g = 1; g < n; ++g) {
    Matrix m = Matrix::Zero(n, n);
    for (int h = 0; h < n; ++h) m((g + h) % n, h) = std::polar(1.0, angle(rng));
    elements.push_back(std::move(m));
  }
  return make_system(std::move(elements));
}

}  // namespace wavset
