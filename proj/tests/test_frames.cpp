#include "wavset/error.hpp"
#include "wavset/frames.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace wavset;

namespace {

Matrix from_rows(int rows, int cols, std::initializer_list<double> values) {
  Matrix m(rows, cols);
  auto it = values.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

Matrix reconstruct(const RankOneDecomposition& d) {
  Matrix sum = Matrix::Zero(d.units.rows(), d.units.rows());
  for (Eigen::Index i = 0; i < d.units.cols(); ++i) sum += d.weights[i] * d.units.col(i) * d.units.col(i).adjoint();
  return sum;
}

std::vector<double> eigenvalues(const Matrix& b) {
  const auto e = hermitian_eigen(b);
  return {e.values.data(), e.values.data() + e.values.size()};
}

}  // namespace

TEST_SUITE("frame-engine") {
  TEST_CASE("frame bounds") {
    auto b = frame_bounds(Matrix::Identity(3, 3));
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(1.0));
    CHECK(b.is_frame);

    const Matrix f = from_rows(2, 3, {1, 0, 1, 0, 1, 0});
    CHECK(max_abs(frame_operator(f) - from_rows(2, 2, {2, 0, 0, 1})) == 0.0);
    b = frame_bounds(f);
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(2.0));

    b = frame_bounds(from_rows(2, 2, {1, 2, 2, 4}));
    CHECK(b.lower == 0.0);
    CHECK_FALSE(b.is_frame);
  }

  TEST_CASE("Parseval examples") {
    const double r = 1 / std::sqrt(2.0);
    CHECK(is_parseval(Matrix::Identity(2, 2)));
    CHECK(is_parseval(from_rows(2, 3, {1, 0, 0, 0, r, r})));
    CHECK_FALSE(is_parseval(from_rows(2, 3, {1, 0, 0, 0, 1, 1})));
    Rng rng(81);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix p = random_parseval_frame(3, 7, rng);
      CHECK(is_parseval(p));
      const auto fb = frame_bounds(p);
      CHECK(std::abs(fb.lower - 1.0) < 1e-10);
      CHECK(std::abs(fb.upper - 1.0) < 1e-10);
    }
  }

  TEST_CASE("Naimark complements") {
    CHECK(naimark_complement(Matrix::Identity(3, 3)).rows() == 0);

    const double r = 1 / std::sqrt(2.0);
    const Matrix f = from_rows(2, 3, {1, 0, 0, 0, r, r});
    const Matrix g = naimark_complement(f);
    REQUIRE(g.rows() == 1);
    REQUIRE(g.cols() == 3);
    // Unique up to a unimodular scalar.
    const std::complex<double> phase = g(0, 1) / r;
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
    CHECK(std::abs(g(0, 0)) < 1e-12);
    CHECK(std::abs(g(0, 2) + phase * r) < 1e-12);

    Rng rng(82);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix p = random_parseval_frame(3, 7, rng);
      const Matrix c = naimark_complement(p);
      CHECK(c.rows() == 4);
      Matrix stacked(7, 7);
      stacked << p, c;
      CHECK(is_unitary(stacked));
    }
    CHECK_THROWS_AS(naimark_complement(from_rows(2, 3, {1, 0, 0, 0, 1, 1})), Error);
  }

  TEST_CASE("strong disjointness and multiplexing") {
    Rng rng(83);
    const Matrix f = random_parseval_frame(3, 7, rng);
    const Matrix g = naimark_complement(f);
    CHECK(strongly_disjoint(f, g));
    CHECK_FALSE(strongly_disjoint(Matrix::Identity(3, 3), Matrix::Identity(3, 3)));
    CHECK_THROWS_AS(strongly_disjoint(f, Matrix::Identity(3, 3)), Error);

    // Rows of one unitary split between two frames.
    const Matrix u = random_unitary(6, rng);
    const Matrix a = u.topRows(2), b = u.bottomRows(3);
    CHECK(strongly_disjoint(a, b));

    const Vector x = random_vector(3, rng), y = random_vector(4, rng);
    auto [x0, y0] = multiplex_roundtrip(f, g, x, Vector::Zero(4));
    CHECK((x0 - x).norm() < 1e-10);
    CHECK(y0.norm() < 1e-10);
    auto [x1, y1] = multiplex_roundtrip(f, g, x, y);
    CHECK((x1 - x).norm() < 1e-10);
    CHECK((y1 - y).norm() < 1e-10);
    CHECK_THROWS_AS(multiplex_roundtrip(f, f, x, x), Error);
  }

  TEST_CASE("disjointness decides multiplex recovery") {
    Rng rng(84);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2, m = 3, k = 7;
      const Matrix f = random_parseval_frame(n, k, rng);
      const Matrix g = trial % 2 ? naimark_complement(f).topRows(m) : random_parseval_frame(m, k, rng);
      const Vector x = random_vector(n, rng), y = random_vector(m, rng);
      const auto [xr, yr] = multiplex(f, g, x, y);
      const bool recovered = (xr - x).norm() < 1e-10 && (yr - y).norm() < 1e-10;
      CHECK(strongly_disjoint(f, g) == recovered);
    }
  }

  TEST_CASE("majorization examples") {
    CHECK(majorization_check({1.5, 0.5}, {1, 1}));
    CHECK(majorization_check({1, 1}, {1, 0.5, 0.5}));
    CHECK_FALSE(majorization_check({0.9, 0.9}, {1, 0.8}));
    CHECK_FALSE(majorization_check({1, 1}, {1, 0.5}));
    CHECK_THROWS_AS(majorization_check({-1, 3}, {1, 1}), Error);
  }

  TEST_CASE("averaging makes unit weights always feasible") {
    Rng rng(85);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = dim(rng);
      const int k = n + trial % 7;
      const Matrix b = random_positive(n, k, rng);
      CHECK(majorization_check(eigenvalues(b), std::vector<double>(k, 1.0)));
    }
  }

  TEST_CASE("weighted decomposition examples") {
    auto d = weighted_decomposition(Matrix::Identity(2, 2), {1, 1});
    CHECK(std::abs((d.units.col(0).adjoint() * d.units.col(1))(0)) < 1e-12);

    d = weighted_decomposition(Matrix::Identity(2, 2), {1, 0.5, 0.5});
    CHECK(std::abs((d.units.col(0).adjoint() * d.units.col(1))(0)) < 1e-10);
    CHECK(std::abs(std::abs((d.units.col(1).adjoint() * d.units.col(2))(0)) - 1.0) < 1e-10);
    CHECK(d.residual < 1e-12);

    d = weighted_decomposition(from_rows(2, 2, {1.5, 0, 0, 0.5}), {1, 1});
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(std::abs(d.units(0, i)) - std::sqrt(0.75)) < 1e-12);
      CHECK(std::abs(std::abs(d.units(1, i)) - std::sqrt(0.25)) < 1e-12);
    }
    CHECK(max_abs(reconstruct(d) - from_rows(2, 2, {1.5, 0, 0, 0.5})) < 1e-12);

    try {
      weighted_decomposition(from_rows(2, 2, {1.5, 0, 0, 0.5}), {1.8, 0.2});
      FAIL("expected infeasible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Infeasible);
    }
    CHECK_THROWS_AS(weighted_decomposition(Matrix::Identity(2, 2), {1, 1, 1}), Error);
    CHECK_THROWS_AS(weighted_decomposition(Matrix::Identity(2, 2), {2.5, -0.5}), Error);
  }

  TEST_CASE("random weighted decompositions") {
    Rng rng(86);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_real_distribution<double> w(0.05, 1.0);
    int feasible = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const int n = dim(rng), m = n + trial % 5;
      std::vector<double> weights(m);
      for (double& x : weights) x = w(rng);
      const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
      const Matrix b = random_positive(n, total, rng);
      const bool ok = majorization_check(eigenvalues(b), weights, 1e-10);
      if (ok) {
        ++feasible;
        const auto d = weighted_decomposition(b, weights);
        CHECK(d.residual <= 1e-8);
        CHECK(max_abs(reconstruct(d) - b) <= 1e-8);
        for (Eigen::Index i = 0; i < d.units.cols(); ++i) CHECK(std::abs(d.units.col(i).norm() - 1.0) < 1e-10);
      } else {
        CHECK_THROWS_AS(weighted_decomposition(b, weights), Error);
      }
    }
    CHECK(feasible > 5);
  }

  TEST_CASE("projection decompositions") {
    const auto id = projection_decomposition(Matrix::Identity(3, 3), 3);
    CHECK(is_unitary(id.units));
    const auto d = projection_decomposition(from_rows(3, 3, {2.5, 0, 0, 0, 0.3, 0, 0, 0, 0.2}), 3);
    CHECK(d.residual <= 1e-8);
    CHECK_THROWS_AS(projection_decomposition(Matrix::Identity(3, 3), 4), Error);
  }

  TEST_CASE("ellipsoidal tight frames") {
    const auto onb = etf_construct(Matrix::Identity(3, 3), 3);
    CHECK(onb.bound == doctest::Approx(1.0));
    CHECK(is_unitary(onb.frame));

    const auto hand = etf_construct(from_rows(2, 2, {1, 0, 0, 2}), 3);
    CHECK(std::abs(hand.bound - 12.0 / 5.0) < 1e-12);
    CHECK(max_abs(frame_operator(hand.frame) - 2.4 * Matrix::Identity(2, 2)) < 1e-8);

    Rng rng(87);
    const Matrix t = random_positive(4, 6.0, rng);
    const auto r = etf_construct(t, 9);
    const Matrix tinv = t.inverse();
    CHECK(std::abs(r.bound - 9.0 / (tinv * tinv).trace().real()) < 1e-8);
    CHECK(max_abs(frame_operator(r.frame) - r.bound * Matrix::Identity(4, 4)) < 1e-8);
    for (Eigen::Index j = 0; j < 9; ++j) CHECK(std::abs((tinv * r.frame.col(j)).norm() - 1.0) < 1e-8);

    CHECK_THROWS_AS(etf_construct(Matrix::Identity(3, 3), 2), Error);
    CHECK_THROWS_AS(etf_construct(from_rows(2, 2, {1, 0, 0, 0}), 3), Error);
  }
}
