#include "wavset/acceptance.hpp"

#include "wavset/analysis.hpp"
#include "wavset/congruence.hpp"
#include "wavset/error.hpp"
#include "wavset/families.hpp"
#include "wavset/frames.hpp"
#include "wavset/interpolation.hpp"
#include "wavset/serialize.hpp"
#include "wavset/unitary_lab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <tuple>

namespace wavset {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

class Checker {
 public:
  void expect(bool ok, const std::string& label, const std::string& detail = "") {
    passed_ = passed_ && ok;
    std::string line = label + (ok ? ": ok" : ": FAIL");
    if (!detail.empty()) line += " (" + detail + ")";
    lines_.push_back(std::move(line));
  }
  // Runs body; an exception counts as a failed check.
  void guard(const std::string& label, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, label, std::string("threw: ") + e.what());
    }
  }
  bool passed() const { return passed_; }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  bool passed_ = true;
  std::vector<std::string> lines_;
};

CriterionResult run(int id, std::string name, const std::function<void(Checker&)>& body) {
  const auto t0 = Clock::now();
  Checker c;
  c.guard("criterion body", [&] { body(c); });
  const double secs = since(t0);
  return {id, std::move(name), c.passed(), c.take(), secs};
}

bool verdict_with_witnesses(const WaveletVerdict& v, const Rational& factor = Rational(2)) {
  return v.is_wavelet_set && v.translation && v.dilation && v.translation->image() == unit_period() &&
         v.dilation->image() == dilation_reference(factor);
}

PiSet interval_set(PiRational a, PiRational b) { return PiSet{Interval(std::move(a), std::move(b))}; }

// --- 1 ---------------------------------------------------------------------

void criterion_reproduction(Checker& c) {
  const auto t0 = Clock::now();
  c.expect(verdict_with_witnesses(is_wavelet_set(shannon())), "Shannon set verdict with witnesses");

  const PiSet j = journe();
  c.expect(verdict_with_witnesses(is_wavelet_set(j)), "Journe set verdict with witnesses");
  auto tw = translation_congruent(j, unit_period());
  std::vector<std::int64_t> shifts;
  if (tw)
    for (const auto& p : tw->pieces) shifts.push_back(p.shift);
  c.expect(shifts == std::vector<std::int64_t>{3, 1, 0, -2} && tw->image() == unit_period(),
           "Journe translation shifts {+3,+1,0,-2} onto [0,2pi)");
  const PiSet ring{Interval(PiRational(-32, 7), PiRational(-16, 7)), Interval(PiRational(16, 7), PiRational(32, 7))};
  auto dw = dilation_congruent(j, ring);
  std::vector<int> exps;
  if (dw)
    for (const auto& p : dw->pieces) exps.push_back(p.exponent);
  c.expect(exps == std::vector<int>{0, 2, 2, 0} && dw->image() == ring,
           "Journe dilation exponents {0,2,2,0} onto [-32pi/7,-16pi/7) u [16pi/7,32pi/7)");

  int ok = 0;
  for (int i = -20; i <= 20; ++i) ok += verdict_with_witnesses(is_wavelet_set(shannon_path(PiRational(i, 21))));
  c.expect(ok == 41, "41 sets E_alpha, alpha = i*pi/21", std::to_string(ok) + "/41");

  ok = 0;
  for (int i = -7; i <= 7; ++i) ok += verdict_with_witnesses(is_wavelet_set(journe_path(PiRational(i, 49))));
  c.expect(ok == 15, "15 sets J_beta, beta = i*pi/49", std::to_string(ok) + "/15");

  const std::vector<PiSet> choices = {
      interval_set(PiRational(1), PiRational(5, 4)),
      interval_set(PiRational(9, 8), PiRational(11, 8)),
      interval_set(PiRational(1), PiRational(3, 2)),
      PiSet{Interval(PiRational(1), PiRational(17, 16)), Interval(PiRational(5, 4), PiRational(21, 16))},
      PiSet{},
  };
  ok = 0;
  const PiSet window = interval_set(PiRational(1), PiRational(3, 2));
  for (const auto& a : choices) {
    const PiSet w = subset_extension(a);
    ok += verdict_with_witnesses(is_wavelet_set(w)) && intersect(w, window) == a;
  }
  c.expect(ok == 5, "subset extension for 5 choices of A", std::to_string(ok) + "/5");

  ok = 0;
  for (const Rational& d : {Rational(2), Rational(5, 2), Rational(3)})
    ok += verdict_with_witnesses(is_wavelet_set(d_dilation_set(d), d), d);
  c.expect(ok == 3, "d-dilation sets for d = 2, 5/2, 3", std::to_string(ok) + "/3");

  const double secs = since(t0);
  c.expect(secs < 5.0, "runtime under 5 s");
}

// --- 2 ---------------------------------------------------------------------

void criterion_negative_controls(Checker& c) {
  auto reason_is = [](const PiSet& e, FailureReason r) {
    auto v = is_wavelet_set(e);
    return !v.is_wavelet_set && v.failure_reason == r;
  };
  c.expect(reason_is(interval_set(PiRational(2), PiRational(4)), FailureReason::NotDilationCongruent),
           "[2pi,4pi) fails with NotDilationCongruent");
  c.expect(reason_is(unit_period(), FailureReason::NotDilationCongruent), "[0,2pi) fails dilation");
  c.expect(reason_is(interval_set(PiRational(1), PiRational(5, 2)), FailureReason::NotTranslationCongruent),
           "measure 3pi/2 set [pi,5pi/2) fails translation");
}

// --- 3 ---------------------------------------------------------------------

const std::vector<PiRational>& pair_betas() {
  static const std::vector<PiRational> b = {PiRational(-1, 7), PiRational(-1, 14), PiRational(0), PiRational(1, 14),
                                            PiRational(1, 7)};
  return b;
}

std::vector<InterpolationMap> journe_pair_maps() {
  std::vector<InterpolationMap> out;
  const auto& b = pair_betas();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t k = i + 1; k < b.size(); ++k) out.push_back(build_sigma(journe_path(b[i]), journe_path(b[k])));
  return out;
}

void criterion_interpolation_pairs(Checker& c) {
  const auto t0 = Clock::now();
  int torsion_ok = 0, square_ok = 0, count = 0;
  for (const auto& sigma : journe_pair_maps()) {
    ++count;
    torsion_ok += torsion_order(sigma, 4) == 2;
    square_ok += compose(sigma, sigma) == InterpolationMap::identity(sigma.domain_core());
  }
  c.expect(count == 10 && torsion_ok == 10, "torsion order 2 for all Journe pairs", std::to_string(torsion_ok) + "/10");
  c.expect(square_ok == 10, "sigma o sigma = identity for all Journe pairs", std::to_string(square_ok) + "/10");
  const double secs = since(t0);
  c.expect(secs < 2.0, "runtime under 2 s");
}

// --- 4 ---------------------------------------------------------------------

DilationPeriodicFunction random_step_function(Rng& rng, bool real_valued) {
  std::uniform_int_distribution<int> cuts(0, 4);
  std::uniform_int_distribution<int> grid(1, 63);
  std::normal_distribution<double> g;
  std::vector<ValuePiece> pieces;
  const PiSet domain = littlewood_paley();
  for (const auto& iv : domain.intervals()) {
    std::set<int> pts;
    const int n = cuts(rng);
    for (int i = 0; i < n; ++i) pts.insert(grid(rng));
    PiRational left = iv.a();
    auto push = [&](const PiRational& right) {
      pieces.push_back({Interval(left, right), real_valued ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng))});
      left = right;
    };
    for (int p : pts) push(iv.a() + PiRational(p, 64));
    push(iv.b());
  }
  return DilationPeriodicFunction(littlewood_paley(), std::move(pieces));
}

void criterion_normalization(Checker& c, Rng& rng) {
  const auto maps = journe_pair_maps();
  int exact = 0, total = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_step_function(rng, false);
    for (const auto& sigma : maps) {
      ++total;
      const auto g = conjugate_multiplier(h, sigma);
      const auto inv = inverse(sigma);
      bool ok = true;
      for (const auto& p : g.pieces()) {
        for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(5, 7)}) {
          const PiRational s = p.piece.a() + p.piece.length().scaled(t);
          for (int n = -3; n <= 3 && ok; ++n) {
            const PiRational x = s.dilated(n);
            // stored value, the periodic extension, and h at σ^{-1}(x) must agree exactly
            ok = g.eval(x) == p.value && g.eval(x.dilated(1)) == p.value && h.eval(eval_sigma(inv, x)) == p.value;
          }
        }
      }
      exact += ok;
    }
  }
  c.expect(exact == total && total == 200, "h o sigma^-1 exactly 2-dilation periodic, 20 h x 10 maps",
           std::to_string(exact) + "/" + std::to_string(total));
}

// --- 5 ---------------------------------------------------------------------

void criterion_coefficients(Checker& c) {
  const InterpolationMap sigma = build_sigma(journe_path(PiRational(-1, 14)), journe_path(PiRational(1, 14)));
  int unitary = 0, modulus = 0, gram = 0;
  double worst_modulus = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double theta = (2 * i + 1) * std::numbers::pi / 20.0;
    CoefficientFamily fam{2,
                          {DilationPeriodicFunction::constant(std::cos(theta)),
                           DilationPeriodicFunction::constant(Complex(0.0, std::sin(theta)))},
                          sigma};
    if (!coefficient_criterion(fam)) continue;
    ++unitary;
    const FrequencySymbol sym = interpolated_symbol(fam);
    double dev = 0.0;
    for (const auto& p : sym.pieces()) dev = std::max(dev, std::abs(std::abs(p.value) - inv_sqrt_two_pi()));
    worst_modulus = std::max(worst_modulus, dev);
    modulus += dev <= 1e-12;
    gram += gram_window(sym, 2, 6).deviation <= 1e-10;
  }
  c.expect(unitary == 10, "criterion holds for h0 = cos t, h1 = i sin t, 10 values of t",
           std::to_string(unitary) + "/10");
  c.expect(modulus == 10, "interpolated symbol modulus 1/sqrt(2pi) on every piece",
           std::to_string(modulus) + "/10, worst deviation " + num(worst_modulus));
  c.expect(gram == 10, "interpolated symbols give orthonormal Gram windows", std::to_string(gram) + "/10");
  CoefficientFamily ones{2, {DilationPeriodicFunction::constant(1.0), DilationPeriodicFunction::constant(1.0)}, sigma};
  c.expect(!coefficient_criterion(ones), "criterion fails for h0 = h1 = 1");
}

// --- 6 ---------------------------------------------------------------------

void criterion_gram(Checker& c, Rng& rng) {
  const auto t0 = Clock::now();
  std::vector<ValuePiece> half_turn;
  half_turn.push_back({Interval(PiRational(-2), PiRational(-1)), Complex(0.0)});
  half_turn.push_back({Interval(PiRational(1), PiRational(2)), Complex(std::numbers::pi / 2)});
  const DilationPeriodicFunction quarter(littlewood_paley(), std::move(half_turn));

  const std::vector<std::pair<std::string, FrequencySymbol>> symbols = {
      {"Shannon", FrequencySymbol::from_set(shannon())},
      {"Journe", FrequencySymbol::from_set(journe())},
      {"E_{pi/2}", FrequencySymbol::from_set(shannon_path(PiRational(1, 2)))},
      {"J_{pi/14}", FrequencySymbol::from_set(journe_path(PiRational(1, 14)))},
      {"subset extension", FrequencySymbol::from_set(subset_extension(interval_set(PiRational(1), PiRational(5, 4))))},
      {"phase-modulated Shannon", phase_modulate(shannon(), quarter)},
      {"phase-modulated Journe", phase_modulate(journe(), random_step_function(rng, true))},
  };
  for (const auto& [name, sym] : symbols) {
    const auto w = gram_window(sym, 2, 6);
    c.expect(w.deviation <= 1e-10 && w.entries.rows() == 65, name + " Gram window (65x65) is the identity",
             "deviation " + num(w.deviation));
  }
  const auto hardy = gram_window(FrequencySymbol::from_set(interval_set(PiRational(2), PiRational(4))), 2, 6);
  c.expect(hardy.deviation > 0.1, "[2pi,4pi) Gram window deviates by more than 0.1",
           "deviation " + num(hardy.deviation));
  const double secs = since(t0);
  c.expect(secs < 30.0, "runtime under 30 s");
}

// --- 7 ---------------------------------------------------------------------

Vector basis_vector(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1.0;
  return v;
}

void criterion_unitary_lab(Checker& c, Rng& rng) {
  struct Named {
    std::string name;
    UnitarySystem u;
    bool group;
  };
  std::vector<Named> systems = {
      {"Z2", regular_representation(cyclic_group_table(2)), true},
      {"Z4", regular_representation(cyclic_group_table(4)), true},
      {"Z8", regular_representation(cyclic_group_table(8)), true},
      {"twisted shifts (4x4)", twisted_shift_system(4, rng), false},
  };
  c.expect(!is_semigroup(systems[3].u), "twisted 4x4 system is not a semigroup");

  double module_worst = 0.0, containment_worst = 0.0;
  bool separation = true, equal_dims = true;
  for (const auto& s : systems) {
    const Vector e0 = basis_vector(s.u.dim, 0);
    const Vector psi = s.group ? random_commutant_rotation(s.u, e0, rng) : e0;
    const auto comm = commutant(s.u);
    const auto local = local_commutant(s.u, psi);
    if (s.group) equal_dims = equal_dims && comm.basis.size() == local.basis.size();
    for (const auto& b : comm.basis) containment_worst = std::max(containment_worst, span_residual(local, b));
    for (int t = 0; t < 5; ++t) {
      Matrix b = random_element(comm, rng);
      Matrix a = random_element(local, rng);
      b /= b.norm();
      a /= a.norm();
      module_worst = std::max(module_worst, span_residual(local, b * a));
    }
    Matrix eval(s.u.dim, static_cast<Eigen::Index>(local.basis.size()));
    for (std::size_t i = 0; i < local.basis.size(); ++i) eval.col(i) = local.basis[i] * psi;
    separation = separation && numerical_rank(eval) == static_cast<int>(local.basis.size());
  }
  c.expect(equal_dims, "local commutant equals commutant for Z2, Z4, Z8");
  c.expect(containment_worst <= 1e-10, "commutant inside local commutant", "residual " + num(containment_worst));
  c.expect(module_worst <= 1e-10, "left-module law", "residual " + num(module_worst));
  c.expect(separation, "cyclic vector separates the local commutant");

  // Random complete wandering pairs: commutant unitaries applied to a
  // wandering vector for the groups, scaled basis vectors for the twisted
  // system.
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_int_distribution<int> pick(0, 3);
  auto draw_pair = [&](int trial, bool symmetric) -> std::tuple<const UnitarySystem*, Vector, Vector> {
    const Named& s = systems[trial % systems.size()];
    const Vector e0 = basis_vector(s.u.dim, 0);
    if (!s.group) {
      const int j = pick(rng);
      const Complex scale = symmetric ? Complex(trial % 8 < 4 ? 1.0 : -1.0) : std::polar(1.0, phase(rng));
      return {&s.u, e0, scale * basis_vector(s.u.dim, symmetric ? 0 : j)};
    }
    const Vector psi = random_commutant_rotation(s.u, e0, rng);
    const Matrix v = symmetric ? random_commutant_symmetry(s.u, rng) : Matrix();
    const Vector eta = symmetric ? Vector(v * psi) : random_commutant_rotation(s.u, psi, rng);
    return {&s.u, psi, eta};
  };

  int riesz = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto [u, psi1, psi2] = draw_pair(trial, trial % 2 == 0);
    for (double mag : {0.5, 2.0}) riesz += riesz_combination_check(*u, psi1, psi2, std::polar(mag, phase(rng)));
  }
  c.expect(riesz == 100, "Riesz combination for |lambda| in {0.5, 2}, 50 pairs", std::to_string(riesz) + "/100");

  std::uniform_real_distribution<double> angle(0.05, std::numbers::pi / 2 - 0.05);
  int agree = 0, symmetric_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto [u, psi, eta] = draw_pair(trial, (trial / 4) % 2 == 0);
    const auto r = interpolation_pair_test(*u, psi, eta, angle(rng));
    agree += r.rho_is_wandering == r.v_squared_is_identity;
    symmetric_count += r.v_squared_is_identity;
  }
  c.expect(agree == 100, "rho wandering <=> V^2 = I", std::to_string(agree) + "/100 agree, " +
                                                          std::to_string(symmetric_count) + " with V^2 = I");
}

// --- 8 ---------------------------------------------------------------------

void criterion_frames(Checker& c, Rng& rng) {
  std::uniform_int_distribution<int> dim(1, 5);
  double worst = 0.0;
  int dims_ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = dim(rng);
    const int k = std::uniform_int_distribution<int>(n, 12)(rng);
    const Matrix f = random_parseval_frame(n, k, rng);
    const Matrix g = naimark_complement(f);
    Matrix stacked(k, k);
    stacked << f, g;
    worst = std::max(worst, max_abs(stacked.adjoint() * stacked - Matrix::Identity(k, k)));
    dims_ok += g.rows() == k - n;
  }
  c.expect(worst <= 1e-10 && dims_ok == 50, "Naimark assembly unitary for 50 random Parseval frames",
           "deviation " + num(worst));

  int agree = 0, disjoint_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int k = std::uniform_int_distribution<int>(n + 1, 10)(rng);
    Matrix f, g;
    switch (trial % 3) {
      case 0:
        f = random_parseval_frame(n, k, rng);
        g = naimark_complement(f);
        break;
      case 1: {
        const Matrix u = random_unitary(k, rng);
        const int m = std::uniform_int_distribution<int>(1, k - n)(rng);
        f = u.topRows(n);
        g = u.middleRows(n, m);
        break;
      }
      default:
        f = random_parseval_frame(n, k, rng);
        g = random_parseval_frame(std::uniform_int_distribution<int>(1, k)(rng), k, rng);
    }
    const Vector x = random_vector(static_cast<int>(f.rows()), rng);
    const Vector y = random_vector(static_cast<int>(g.rows()), rng);
    const auto [x2, y2] = multiplex(f, g, x, y);
    const bool recovered = max_abs(x2 - x) <= 1e-10 && (y.size() == 0 || max_abs(y2 - y) <= 1e-10);
    const bool disjoint = strongly_disjoint(f, g);
    agree += recovered == disjoint;
    disjoint_count += disjoint;
  }
  c.expect(agree == 100, "strong disjointness <=> multiplex recovery",
           std::to_string(agree) + "/100 agree, " + std::to_string(disjoint_count) + " disjoint");
}

// --- 9 ---------------------------------------------------------------------

void criterion_decompositions(Checker& c, Rng& rng) {
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int k = std::uniform_int_distribution<int>(n, 20)(rng);
    const auto dec = projection_decomposition(random_positive(n, k, rng), k);
    worst = std::max(worst, dec.residual);
    for (Eigen::Index i = 0; i < dec.units.cols(); ++i)
      worst = std::max(worst, std::abs(dec.units.col(i).norm() - 1.0));
  }
  c.expect(worst <= 1e-8, "projection decomposition, 50 random B", "worst residual " + num(worst));

  int feasible = 0, infeasible = 0, correct = 0;
  double weighted_worst = 0.0;
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 6)(rng);
    const int m = std::uniform_int_distribution<int>(1, 12)(rng);
    const double trace = std::uniform_real_distribution<double>(1.0, 10.0)(rng);
    const Matrix b = random_positive(n, trace, rng);
    std::vector<double> w(m);
    for (auto& x : w) x = trial % 2 == 0 ? 1.0 : unit(rng);
    double sum = 0.0;
    for (double x : w) sum += x;
    for (auto& x : w) x *= b.trace().real() / sum;
    const auto e = hermitian_eigen(b);
    std::vector<double> eigs;
    for (Eigen::Index i = 0; i < e.values.size(); ++i) eigs.push_back(std::max(0.0, e.values(i)));
    const bool maj = majorization_check(eigs, w, 1e-8);
    try {
      const auto dec = weighted_decomposition(b, w);
      ++feasible;
      weighted_worst = std::max(weighted_worst, dec.residual);
      correct += maj && dec.residual <= 1e-8;
    } catch (const Error& err) {
      ++infeasible;
      correct += !maj && err.code() == ErrorCode::Infeasible;
    }
  }
  c.expect(correct == 50, "weighted decomposition or infeasibility report, 50 trials",
           std::to_string(feasible) + " feasible (worst residual " + num(weighted_worst) + "), " +
               std::to_string(infeasible) + " infeasible");

  Matrix t = Matrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = 2.0;
  const auto hand = etf_construct(t, 3);
  c.expect(std::abs(hand.bound - 12.0 / 5.0) <= 1e-8, "ETF bound 12/5 for T = diag(1,2), k = 3", num(hand.bound));

  double etf_worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(rng);
    const int k = std::uniform_int_distribution<int>(n, 10)(rng);
    const Matrix tt = random_positive(n, 2.0 * n, rng);
    const auto r = etf_construct(tt, k);
    const Matrix inv = tt.inverse();
    const double formula = k / (inv * inv).trace().real();
    etf_worst = std::max(etf_worst, std::abs(r.bound - formula));
    etf_worst = std::max(etf_worst, max_abs(r.frame * r.frame.adjoint() - formula * Matrix::Identity(n, n)));
    const Matrix pre = inv * r.frame;
    for (Eigen::Index i = 0; i < pre.cols(); ++i) etf_worst = std::max(etf_worst, std::abs(pre.col(i).norm() - 1.0));
  }
  c.expect(etf_worst <= 1e-8, "ETF bound k/trace(T^-2), tightness and ellipsoid, 20 random T",
           "worst " + num(etf_worst));
}

}  // namespace

AcceptanceReport run_acceptance(std::uint64_t seed) {
  const auto t0 = Clock::now();
  Rng rng(seed);
  AcceptanceReport report;
  report.criteria.push_back(run(1, "wavelet-set criterion reproduction", criterion_reproduction));
  report.criteria.push_back(run(2, "negative controls", criterion_negative_controls));
  report.criteria.push_back(run(3, "Journe interpolation pairs", criterion_interpolation_pairs));
  report.criteria.push_back(run(4, "commutant normalization", [&](Checker& c) { criterion_normalization(c, rng); }));
  report.criteria.push_back(run(5, "coefficient criterion", criterion_coefficients));
  report.criteria.push_back(run(6, "Gram verification", [&](Checker& c) { criterion_gram(c, rng); }));
  report.criteria.push_back(run(7, "finite unitary systems", [&](Checker& c) { criterion_unitary_lab(c, rng); }));
  report.criteria.push_back(run(8, "frames", [&](Checker& c) { criterion_frames(c, rng); }));
  report.criteria.push_back(run(9, "decompositions", [&](Checker& c) { criterion_decompositions(c, rng); }));

  const double elapsed = since(t0);
  report.criteria.push_back(run(10, "end-to-end suite", [&](Checker& c) {
    c.expect(elapsed < 120.0, "criteria 1-9 under 2 minutes");
    AcceptanceReport partial = report;
    partial.passed = false;
    const Json j = to_json(partial, false);
    c.expect(Json::parse(j.dump()) == j && j.at("criteria").size() == 9, "single JSON report emitted");
  }));
  report.seconds = since(t0);
  report.passed = true;
  for (const auto& cr : report.criteria) report.passed = report.passed && cr.passed;
  return report;
}

}  // namespace wavset
