#include "wavset/error.hpp"
#include "wavset/unitary_lab.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace wavset;

namespace {

Vector basis(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1.0;
  return v;
}

// Gram matrix of the cyclic shifts of x, built without the library.
Matrix shift_gram(const Vector& x) {
  const auto n = x.size();
  Matrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) {
      std::complex<double> sum{};
      for (Eigen::Index k = 0; k < n; ++k) sum += x((k - a + n) % n) * std::conj(x((k - b + n) % n));
      g(a, b) = sum;
    }
  return g;
}


// Projection onto span{f_j : j in js} with f_j the Fourier vectors of ℂ^n.
Matrix fourier_projection(int n, std::initializer_list<int> js) {
  Matrix p = Matrix::Zero(n, n);
  for (int j : js) {
    Vector f(n);
    for (int k = 0; k < n; ++k) f(k) = std::polar(1.0 / std::sqrt(double(n)), 2 * std::numbers::pi * j * k / n);
    p += f * f.adjoint();
  }
  return p;
}

}  // namespace

TEST_SUITE("finite-unitary-lab") {
  TEST_CASE("regular representations") {
    const auto z2 = regular_representation(cyclic_group_table(2));
    REQUIRE(z2.elements.size() == 2);
    Matrix swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(z2.elements[0] == Matrix::Identity(2, 2));
    CHECK(z2.elements[1] == swap);

    const auto z4 = regular_representation(cyclic_group_table(4));
    for (int g = 0; g < 4; ++g)
      for (int h = 0; h < 4; ++h) CHECK(z4.elements[g] * basis(4, h) == basis(4, (g + h) % 4));
    CHECK(is_semigroup(z4));
  }

  TEST_CASE("invalid tables are rejected") {
    // Latin square with identity that is not associative: (1·2)·2 = 3·2 = 4, 1·(2·2) = 1·0 = 1.
    const std::vector<std::vector<int>> loop = {
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(regular_representation(loop), Error);
    CHECK_THROWS_AS(regular_representation({{0, 1}, {1, 1}}), Error);
    CHECK_THROWS_AS(regular_representation({{0, 1}}), Error);
    Matrix not_unitary = Matrix::Identity(2, 2) * 2.0;
    CHECK_THROWS_AS(make_system({Matrix::Identity(2, 2), not_unitary}), Error);
    CHECK_THROWS_AS(make_system({not_unitary / 2.0 * -1.0}), Error);
  }

  TEST_CASE("wandering vectors") {
    const auto z4 = regular_representation(cyclic_group_table(4));
    CHECK(is_wandering_vector(z4, basis(4, 2)));
    CHECK(is_complete_wandering_vector(z4, basis(4, 2)));
    CHECK_FALSE(is_wandering_vector(z4, Vector::Constant(4, 0.5)));
    Vector flat(4);
    flat << 0.5, 0.5, 0.5, -0.5;
    CHECK(is_complete_wandering_vector(z4, flat));
    CHECK_FALSE(is_wandering_vector(z4, 2.0 * basis(4, 0)));

    Rng rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      Vector x = random_unit_vector(4, rng);
      if (trial % 2 == 0) x = random_commutant_rotation(z4, basis(4, 0), rng);
      const bool oracle = (shift_gram(x) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-10;
      CHECK(is_wandering_vector(z4, x) == oracle);
    }
  }

  TEST_CASE("local commutant dimensions") {
    for (int k : {2, 3, 4, 6}) {
      const auto z = regular_representation(cyclic_group_table(k));
      CHECK(local_commutant(z, basis(k, 0)).basis.size() == std::size_t(k));
      CHECK(commutant(z).basis.size() == std::size_t(k));
    }
    const auto trivial = make_system({Matrix::Identity(3, 3)});
    Rng rng(72);
    CHECK(local_commutant(trivial, random_unit_vector(3, rng)).basis.size() == 9);

    Matrix u = Matrix::Identity(2, 2);
    u(1, 1) = std::complex<double>(0, 1);
    const auto pair = make_system({Matrix::Identity(2, 2), u});
    CHECK_FALSE(is_semigroup(pair));
    Vector x(2);
    x << 1.0 / std::sqrt(5.0), 2.0 / std::sqrt(5.0);
    const auto lc = local_commutant(pair, x);
    CHECK(lc.basis.size() == 2);
    // Only diagonal operators survive.
    for (const auto& a : lc.basis) CHECK(std::abs(a(0, 1)) + std::abs(a(1, 0)) < 1e-12);
  }

  TEST_CASE("local commutant contains the commutant and is a left module") {
    Rng rng(73);
    for (int k : {2, 4, 8}) {
      const auto z = regular_representation(cyclic_group_table(k));
      const Vector x = random_commutant_rotation(z, basis(k, 0), rng);
      const auto lc = local_commutant(z, x);
      const auto c = commutant(z);
      for (const auto& b : c.basis) CHECK(span_residual(lc, b) <= 1e-10);
      for (const auto& a : lc.basis) CHECK(span_residual(c, a) <= 1e-10);
      for (int trial = 0; trial < 10; ++trial)
        CHECK(span_residual(lc, random_element(c, rng) * random_element(lc, rng)) <= 1e-10);
    }
    const auto tw = twisted_shift_system(4, rng);
    CHECK_FALSE(is_semigroup(tw));
    CHECK(is_complete_wandering_vector(tw, basis(4, 0)));
    const auto lc = local_commutant(tw, basis(4, 0));
    const auto c = commutant(tw);
    CHECK(lc.basis.size() >= c.basis.size());
    for (const auto& b : c.basis) CHECK(span_residual(lc, b) <= 1e-10);
  }

  TEST_CASE("cyclic vectors separate the local commutant") {
    Rng rng(74);
    const auto tw = twisted_shift_system(4, rng);
    const auto z8 = regular_representation(cyclic_group_table(8));
    for (const auto* sys : {&tw, &z8}) {
      const int n = sys->dim;
      const auto lc = local_commutant(*sys, basis(n, 0));
      const auto count = static_cast<Eigen::Index>(lc.basis.size());
      Matrix eval(n, count);
      for (Eigen::Index i = 0; i < count; ++i) eval.col(i) = lc.basis[i] * basis(n, 0);
      CHECK(numerical_rank(eval) == count);
    }
  }

  TEST_CASE("interpolation unitaries") {
    const auto z2 = regular_representation(cyclic_group_table(2));
    CHECK(max_abs(interpolation_unitary(z2, basis(2, 0), basis(2, 0)) - Matrix::Identity(2, 2)) < 1e-12);
    const Matrix v = interpolation_unitary(z2, basis(2, 0), basis(2, 1));
    CHECK(max_abs(v - z2.elements[1]) < 1e-12);
    CHECK(max_abs(v * v - Matrix::Identity(2, 2)) < 1e-12);
    CHECK_THROWS_AS(interpolation_unitary(z2, basis(2, 0), Vector::Constant(2, std::sqrt(0.5))), Error);

    Rng rng(75);
    const auto z4 = regular_representation(cyclic_group_table(4));
    for (int trial = 0; trial < 20; ++trial) {
      const Vector psi = random_commutant_rotation(z4, basis(4, 0), rng);
      const Vector eta = random_commutant_rotation(z4, basis(4, 0), rng);
      const Matrix w = interpolation_unitary(z4, psi, eta);
      CHECK(is_unitary(w));
      for (const auto& u : z4.elements) CHECK((w * u * psi - u * eta).norm() < 1e-10);
    }
  }

  TEST_CASE("Riesz combinations") {
    const auto z2 = regular_representation(cyclic_group_table(2));
    CHECK(riesz_combination_check(z2, basis(2, 0), basis(2, 1), 0.0));
    CHECK_FALSE(riesz_combination_check(z2, basis(2, 0), basis(2, 1), -1.0));
    CHECK_FALSE(riesz_combination_check(z2, basis(2, 0), basis(2, 1), 1.0));
    Rng rng(76);
    const auto z4 = regular_representation(cyclic_group_table(4));
    for (int trial = 0; trial < 10; ++trial) {
      const Vector psi = random_commutant_rotation(z4, basis(4, 0), rng);
      const Vector eta = random_commutant_rotation(z4, basis(4, 0), rng);
      const double angle = 0.7 * trial;
      CHECK(riesz_combination_check(z4, psi, eta, std::polar(0.5, angle)));
      CHECK(riesz_combination_check(z4, psi, eta, std::polar(2.0, angle)));
    }
  }

  TEST_CASE("interpolation pair test examples") {
    const auto z2 = regular_representation(cyclic_group_table(2));
    auto r = interpolation_pair_test(z2, basis(2, 0), basis(2, 1), std::numbers::pi / 4);
    CHECK(r.rho_is_wandering);
    CHECK(r.v_squared_is_identity);
    r = interpolation_pair_test(z2, basis(2, 0), basis(2, 0), 0.4);
    CHECK(r.rho_is_wandering);
    CHECK(r.v_squared_is_identity);

    // V = L_1 on ℤ_4 is a commutant unitary of order four.
    const auto z4 = regular_representation(cyclic_group_table(4));
    r = interpolation_pair_test(z4, basis(4, 0), basis(4, 1), std::numbers::pi / 4);
    CHECK_FALSE(r.rho_is_wandering);
    CHECK_FALSE(r.v_squared_is_identity);
  }

  TEST_CASE("pair test verdicts agree") {
    Rng rng(77);
    std::uniform_real_distribution<double> alpha(0.05, std::numbers::pi / 2 - 0.05);
    for (int k : {4, 8}) {
      const auto z = regular_representation(cyclic_group_table(k));
      for (int trial = 0; trial < 20; ++trial) {
        const Vector psi = random_commutant_rotation(z, basis(k, 0), rng);
        const Vector eta = trial % 2 ? random_commutant_symmetry(z, rng) * psi : random_commutant_rotation(z, psi, rng);
        const auto r = interpolation_pair_test(z, psi, eta, alpha(rng));
        CHECK(r.rho_is_wandering == r.v_squared_is_identity);
        if (trial % 2) CHECK(r.v_squared_is_identity);
      }
    }
  }

  TEST_CASE("Parseval frame vectors") {
    const auto z4 = regular_representation(cyclic_group_table(4));
    const Vector psi = basis(4, 0);
    auto rep = parseval_frame_vector_check(z4, psi, psi);
    CHECK(rep.kind == FrameVectorKind::Wandering);
    CHECK(max_abs(rep.a - Matrix::Identity(4, 4)) < 1e-12);

    Vector flat(4);
    flat << 0.5, 0.5, 0.5, -0.5;
    rep = parseval_frame_vector_check(z4, psi, flat);
    CHECK(rep.kind == FrameVectorKind::Wandering);
    CHECK(rep.complete);

    const Matrix p = fourier_projection(4, {0, 1});
    rep = parseval_frame_vector_check(z4, psi, p * psi);
    CHECK(rep.kind == FrameVectorKind::ParsevalFrameVector);
    CHECK(rep.partial_isometry);
    CHECK_FALSE(rep.complete);
    CHECK(max_abs(rep.a - p) < 1e-10);
    CHECK(max_abs(rep.a * rep.a.adjoint() - p) < 1e-10);

    rep = parseval_frame_vector_check(z4, psi, 0.5 * p * psi);
    CHECK(rep.kind == FrameVectorKind::Neither);
    CHECK(frame_vector_kind_name(FrameVectorKind::ParsevalFrameVector) == "parseval_frame_vector");
  }
}
