#include "oracles.hpp"
#include "wavset/congruence.hpp"
#include "wavset/error.hpp"
#include "wavset/families.hpp"
#include "wavset/interpolation.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace wavset;

namespace {

const std::vector<PiRational> kBetas = {PiRational(-1, 7), PiRational(-1, 14), PiRational(0), PiRational(1, 14),
                                        PiRational(1, 7)};

// Littlewood-Paley set with three small pieces moved: X by -4π, Y by -2π,
// Z by +2π. The resulting map from LP cycles X -> Z -> Y -> X up to dyadic
// rescaling, so it has order three.
PiSet three_cycle_target() {
  const PiSet moved{Interval(PiRational(1), PiRational(3, 2)), Interval(PiRational(-3, 2), PiRational(-5, 4)),
                    Interval(PiRational(-7, 4), PiRational(-13, 8))};
  const PiSet images{Interval(PiRational(-3), PiRational(-5, 2)), Interval(PiRational(-7, 2), PiRational(-13, 4)),
                     Interval(PiRational(1, 4), PiRational(3, 8))};
  return unite(subtract(littlewood_paley(), moved), images);
}

std::vector<PiSet> roster() {
  return {shannon(),
          journe(),
          shannon_path(PiRational(1, 2)),
          shannon_path(PiRational(-1, 3)),
          journe_path(PiRational(1, 14)),
          journe_path(PiRational(-1, 7)),
          subset_extension(PiSet{Interval(PiRational(1), PiRational(5, 4))}),
          three_cycle_target()};
}

// Points spread over several octaves on both half-lines.
std::vector<PiRational> probe_points(std::mt19937_64& rng, int count) {
  std::uniform_int_distribution<int> num(1, 997), oct(-4, 4), sign(0, 1);
  std::vector<PiRational> out;
  for (int i = 0; i < count; ++i) {
    PiRational s = PiRational(num(rng) + 997, 997).dilated(oct(rng));
    out.push_back(sign(rng) ? s : -s);
  }
  return out;
}

DilationPeriodicFunction random_step(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cuts(0, 4), grid(1, 63);
  std::normal_distribution<double> g;
  std::vector<ValuePiece> pieces;
  const PiSet domain = littlewood_paley();
  for (const auto& iv : domain.intervals()) {
    std::set<int> pts;
    for (int i = cuts(rng); i > 0; --i) pts.insert(grid(rng));
    PiRational left = iv.a();
    for (int p : pts) {
      const PiRational right = iv.a() + PiRational(p, 64);
      pieces.push_back({Interval(left, right), Complex(g(rng), g(rng))});
      left = right;
    }
    pieces.push_back({Interval(left, iv.b()), Complex(g(rng), g(rng))});
  }
  return DilationPeriodicFunction(domain, std::move(pieces));
}

CoefficientFamily constant_family(const InterpolationMap& sigma, std::vector<Complex> values) {
  std::vector<DilationPeriodicFunction> hs;
  for (Complex v : values) hs.push_back(DilationPeriodicFunction::constant(v));
  return {static_cast<int>(values.size()), std::move(hs), sigma};
}

}  // namespace

TEST_SUITE("interpolation-engine") {
  TEST_CASE("build_sigma examples") {
    CHECK(build_sigma(journe(), journe()).is_identity());

    const PiRational b1(-1, 14), b2(1, 14);
    const auto m = build_sigma(journe_path(b1), journe_path(b2));
    for (const auto& p : m.pieces()) {
      PiRational expected(0);
      if (p.piece == Interval(PiRational(-1) + b1, PiRational(-1) + b2)) expected = PiRational(2);
      if (p.piece == Interval(PiRational(4) + b1.dilated(2), PiRational(4) + b2.dilated(2))) expected = PiRational(-8);
      CHECK(p.offset == expected);
    }
    CHECK(m.pieces().size() == 6);

    CHECK_THROWS_AS(build_sigma(shannon(), PiSet{Interval(PiRational(2), PiRational(4))}), Error);
  }

  TEST_CASE("shannon to E_{pi/2} shifts each point to its unique 2pi-translate") {
    const PiSet e = shannon(), f = shannon_path(PiRational(1, 2));
    const auto m = build_sigma(e, f);
    CHECK_FALSE(m.is_identity());
    // Pointwise oracle: the unique k with s + 2πk ∈ F.
    for (const auto& s : oracle::midpoints(-2, 2, 32)) {
      if (!oracle::member(e, s)) continue;
      int hits = 0;
      PiRational image;
      for (int k = -3; k <= 3; ++k)
        if (oracle::member(f, s.shifted(k))) ++hits, image = s.shifted(k);
      REQUIRE(hits == 1);
      CHECK(eval_sigma(m, s) == image);
    }
    std::set<PiRational> offsets;
    for (const auto& p : m.pieces()) offsets.insert(p.offset);
    CHECK(offsets == std::set<PiRational>{PiRational(-2), PiRational(0), PiRational(4)});
  }

  TEST_CASE("eval_sigma examples") {
    CHECK(eval_sigma(InterpolationMap::identity(shannon()), PiRational(1)) == PiRational(1));
    CHECK(eval_sigma(InterpolationMap::identity(shannon()), PiRational(0)) == PiRational(0));
    const PiRational b1(-1, 14), b2(1, 14);
    const auto m = build_sigma(journe_path(b1), journe_path(b2));
    const PiRational s = PiRational(-1) + b1;
    CHECK(eval_sigma(m, s) == s + PiRational(2));
    const PiRational far = (PiRational(4) + b1.dilated(2)).dilated(1);
    CHECK(eval_sigma(m, far) == far - PiRational(16));
  }

  TEST_CASE("compose and torsion examples") {
    const auto m = build_sigma(journe_path(PiRational(0)), journe_path(PiRational(1, 7)));
    CHECK(compose(InterpolationMap::identity(m.target_core()), m) == m);
    CHECK(compose(build_sigma(m.target_core(), m.domain_core()), m).is_identity());
    CHECK(compose(m, m).is_identity());
    CHECK(torsion_order(m, 4) == 2);
    CHECK(torsion_order(InterpolationMap::identity(shannon()), 4) == 1);
    CHECK_THROWS_AS(torsion_order(m, 0), Error);
  }

  TEST_CASE("synthetic three-cycle has torsion three") {
    const PiSet f = three_cycle_target();
    REQUIRE(is_wavelet_set(f).is_wavelet_set);
    const auto m = build_sigma(shannon(), f);
    CHECK(torsion_order(m, 2) == std::nullopt);
    CHECK(torsion_order(m, 6) == 3);
    CHECK(power(m, 3).is_identity());
    // Pointwise: three evaluations return every point of E, two do not for X.
    std::mt19937_64 rng(41);
    for (const auto& s : probe_points(rng, 200)) {
      CHECK(eval_sigma(m, eval_sigma(m, eval_sigma(m, s))) == s);
    }
    const PiRational x(5, 4);
    CHECK(eval_sigma(m, eval_sigma(m, x)) != x);
    CHECK(power_congruence(m, 3));
  }

  TEST_CASE("measure preservation") {
    CHECK(check_measure_preserving(InterpolationMap::identity(shannon())));
    const auto m = build_sigma(journe(), journe_path(PiRational(1, 14)));
    CHECK(check_measure_preserving(m));
    auto pieces = m.pieces();
    pieces.push_back(pieces.front());
    CHECK_FALSE(check_measure_preserving(InterpolationMap::unchecked(m.domain_core(), m.target_core(), pieces)));
    const auto roster_sets = roster();
    for (const auto& e : roster_sets)
      for (const auto& f : roster_sets) CHECK(check_measure_preserving(build_sigma(e, f)));
  }

  TEST_CASE("power congruence") {
    const auto j = build_sigma(journe(), journe_path(PiRational(1, 7)));
    CHECK(power_congruence(j, 1));
    CHECK(power_congruence(j, 2));
    // Re-expressed on the three-cycle target, the point π/4 = 2^{-2}π moves
    // by 2^{-2}·(-4π) = -π.
    const auto m = build_sigma(shannon(), three_cycle_target());
    const auto moved = compose(m, InterpolationMap::identity(three_cycle_target()));
    CHECK(eval_sigma(moved, PiRational(1, 4)) == PiRational(-3, 4));
    CHECK_FALSE(power_congruence(moved, 1));
    CHECK_THROWS_AS(power_congruence(j, 0), Error);
  }

  TEST_CASE("group laws on the roster") {
    const auto sets = roster();
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        const auto m = build_sigma(sets[a], sets[b]);
        CHECK(inverse(inverse(m)) == m);
        CHECK(compose(inverse(m), m).is_identity());
        CHECK(compose(m, inverse(m)).is_identity());
        CHECK(inverse(m) == build_sigma(sets[b], sets[a]));
        for (std::size_t c = 0; c < sets.size(); c += 3) {
          // Uniqueness of the translation congruence makes σ a cocycle.
          CHECK(compose(build_sigma(sets[b], sets[c]), m) == build_sigma(sets[a], sets[c]));
        }
      }
    }
  }

  TEST_CASE("composition is associative and agrees with pointwise evaluation") {
    std::mt19937_64 rng(42);
    const auto sets = roster();
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    for (int trial = 0; trial < 20; ++trial) {
      // Maps between cores that do not chain, so offsets pick up dyadic fractions.
      const auto m1 = build_sigma(sets[pick(rng)], sets[pick(rng)]);
      const auto m2 = build_sigma(sets[pick(rng)], sets[pick(rng)]);
      const auto m3 = build_sigma(sets[pick(rng)], sets[pick(rng)]);
      const auto left = compose(m3, compose(m2, m1));
      const auto right = compose(compose(m3, m2), m1);
      CHECK(left == right);
      for (const auto& s : probe_points(rng, 30))
        CHECK(eval_sigma(left, s) == eval_sigma(m3, eval_sigma(m2, eval_sigma(m1, s))));
    }
  }

  TEST_CASE("powers") {
    const auto m = build_sigma(shannon(), three_cycle_target());
    CHECK(power(m, 0).is_identity());
    CHECK(power(m, 1) == m);
    CHECK(power(m, 2) == compose(m, m));
    CHECK(compose(m, power(m, -1)).is_identity());
    CHECK(power(m, -2) == power(m, 1));
  }

  TEST_CASE("Journé pairs are involutions across the family") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> grid(-21, 21);
    for (int trial = 0; trial < 30; ++trial) {
      int a = grid(rng), b = grid(rng);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      const auto m = build_sigma(journe_path(PiRational(a, 147)), journe_path(PiRational(b, 147)));
      CHECK(torsion_order(m, 4) == 2);
    }
  }

  TEST_CASE("conjugate multiplier examples") {
    const auto m = build_sigma(journe(), journe_path(PiRational(1, 14)));
    const auto one = DilationPeriodicFunction::constant(Complex(1.0));
    const auto c = conjugate_multiplier(one, m);
    REQUIRE(c.pieces().size() == 2);
    for (const auto& p : c.pieces()) CHECK(p.value == Complex(1.0));

    std::mt19937_64 rng(44);
    const auto h = random_step(rng);
    const auto same = conjugate_multiplier(h, InterpolationMap::identity(shannon()));
    for (const auto& s : probe_points(rng, 100)) CHECK(same.eval(s) == h.eval(s));

    const auto ind = DilationPeriodicFunction(
        littlewood_paley(), {{Interval(PiRational(-2), PiRational(-1)), 0.0},
                             {Interval(PiRational(1), PiRational(3, 2)), 1.0},
                             {Interval(PiRational(3, 2), PiRational(2)), 0.0}});
    const auto pulled = conjugate_multiplier(ind, m);
    const auto inv = inverse(m);
    for (const auto& s : oracle::midpoints(-8, 8, 64)) {
      if (s.is_zero()) continue;
      CHECK(pulled.eval(s) == ind.eval(eval_sigma(inv, s)));
      CHECK(pulled.eval(s) == pulled.eval(s.dilated(1)));
    }
  }

  TEST_CASE("conjugated random multipliers stay dilation periodic") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 10; ++trial) {
      const auto h = random_step(rng);
      const auto m = build_sigma(shannon(), roster()[1 + trial % 7]);
      const auto g = conjugate_multiplier(h, m);
      const auto inv = inverse(m);
      for (const auto& s : probe_points(rng, 60)) {
        CHECK(g.eval(s) == g.eval(s.dilated(1)));
        CHECK(g.eval(s) == h.eval(eval_sigma(inv, s)));
      }
    }
  }

  TEST_CASE("dilation periodic function validation") {
    CHECK_THROWS_AS(DilationPeriodicFunction(littlewood_paley(), {{Interval(PiRational(1), PiRational(2)), 1.0}}), Error);
    CHECK_THROWS_AS(
        DilationPeriodicFunction(PiSet{Interval(PiRational(1), PiRational(3))}, {{Interval(PiRational(1), PiRational(3)), 1.0}}),
        Error);
    CHECK(DilationPeriodicFunction::constant(2.0).is_real());
    CHECK_FALSE(DilationPeriodicFunction::constant(Complex(0, 1)).is_real());
  }

  TEST_CASE("coefficient criterion examples") {
    const auto id = InterpolationMap::identity(shannon());
    CHECK(coefficient_criterion(constant_family(id, {1.0})));

    const auto sigma = build_sigma(journe(), journe_path(PiRational(1, 7)));
    for (int i = 0; i < 12; ++i) {
      const double t = 0.37 * i - 2.0;
      CHECK(coefficient_criterion(constant_family(sigma, {std::cos(t), Complex(0, std::sin(t))})));
    }
    const auto ones = coefficient_report(constant_family(sigma, {1.0, 1.0}));
    CHECK_FALSE(ones.unitary);
    CHECK(ones.max_deviation == doctest::Approx(2.0));

    CHECK_THROWS_AS(coefficient_criterion(constant_family(id, {1.0, 0.0})), Error);
    CHECK(coefficient_index(0, 0, 3) == 0);
    CHECK(coefficient_index(1, 0, 3) == 2);
    CHECK(coefficient_index(2, 1, 3) == 2);
  }

  TEST_CASE("criterion with non-constant coefficients on the three-cycle") {
    // Constant coefficients give a circulant matrix, unitary exactly when
    // every eigenvalue Σ c_n ω^{jn} is unimodular.
    const auto m = build_sigma(shannon(), three_cycle_target());
    CHECK(coefficient_criterion(constant_family(m, {-1.0 / 3, 2.0 / 3, 2.0 / 3})));
    CHECK(coefficient_criterion(constant_family(m, {0.0, Complex(0, 1), 0.0})));
    CHECK_FALSE(coefficient_criterion(constant_family(m, {0.6, 0.6, 0.6})));
  }

  TEST_CASE("interpolated symbol examples") {
    const auto id = InterpolationMap::identity(shannon());
    const auto s1 = interpolated_symbol(constant_family(id, {1.0}));
    CHECK(s1.support() == shannon());
    for (const auto& p : s1.pieces()) CHECK(p.value == Complex(inv_sqrt_two_pi()));

    const PiSet e = journe(), f = journe_path(PiRational(1, 7));
    const auto sigma = build_sigma(e, f);
    const auto degenerate = interpolated_symbol(constant_family(sigma, {1.0, 0.0}));
    CHECK(degenerate.support() == e);

    const double r = 1.0 / std::sqrt(2.0);
    const auto rho = interpolated_symbol(constant_family(sigma, {r, Complex(0, r)}));
    CHECK(rho.support() == unite(e, f));
    for (const auto& s : oracle::midpoints(-5, 5, 56)) {
      const Complex expected = (oracle::member(e, s) ? Complex(r) : 0.0) + (oracle::member(f, s) ? Complex(0, r) : 0.0);
      CHECK(std::abs(rho.eval(s) - expected * inv_sqrt_two_pi()) < 1e-15);
    }
  }

  TEST_CASE("interpolated symbols have modulus 1/sqrt(2pi) only on E and F together") {
    // On E ∩ F the value is (h_0 + h_1)/√(2π); off it, a single coefficient
    // survives. Constant modulus therefore needs |h_0| = |h_1| = |h_0 + h_1|,
    // which no cos/i·sin pair satisfies.
    const PiSet e = journe(), f = journe_path(PiRational(1, 7));
    const auto sigma = build_sigma(e, f);
    const double theta = 0.3;
    const auto sym = interpolated_symbol(constant_family(sigma, {std::cos(theta), Complex(0, std::sin(theta))}));
    const PiRational in_both(5, 7), only_e(-13, 14);
    REQUIRE(oracle::member(e, in_both));
    REQUIRE(oracle::member(f, in_both));
    REQUIRE(oracle::member(e, only_e));
    REQUIRE_FALSE(oracle::member(f, only_e));
    CHECK(std::abs(sym.eval(in_both)) == doctest::Approx(inv_sqrt_two_pi()).epsilon(1e-14));
    CHECK(std::abs(sym.eval(only_e)) == doctest::Approx(std::cos(theta) * inv_sqrt_two_pi()).epsilon(1e-14));
  }
}
