#include "wavset/analysis.hpp"

#include "wavset/error.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

namespace wavset {
namespace {

// e^{i·r·x} for x = c·π with r·c rational, reduced exactly modulo 2π first so
// large dyadic frequencies do not lose the phase.
Complex unit_phase(const Rational& r, const PiRational& x) {
  Rational turns = r * x.coefficient();  // angle / π
  turns -= Rational(2 * floor_of(turns / 2));
  double angle = static_cast<double>(turns) * std::numbers::pi;
  return {std::cos(angle), std::sin(angle)};
}

// ∫_a^b e^{iλs} ds
Complex oscillatory_integral(const Rational& lambda, const Interval& iv) {
  if (lambda.is_zero()) return {iv.length().value(), 0.0};
  Complex diff = unit_phase(lambda, iv.b()) - unit_phase(lambda, iv.a());
  return diff / Complex(0.0, static_cast<double>(lambda));
}

struct Overlap {
  Interval region;
  Complex weight;
};

// 2^{n1}P1 ∩ 2^{n2}P2 over all piece pairs, with v1·conj(v2). Independent of
// the translation indices, so a Gram window reuses it across a whole block.
std::vector<Overlap> overlaps(const FrequencySymbol& sym, int n1, int n2) {
  std::vector<Overlap> out;
  std::vector<Interval> second;
  for (const auto& p2 : sym.pieces()) second.push_back(p2.piece.dilated(n2));
  for (const auto& p1 : sym.pieces()) {
    const Interval i1 = p1.piece.dilated(n1);
    for (std::size_t k = 0; k < second.size(); ++k) {
      if (auto x = i1.intersect(second[k])) out.push_back({*x, p1.value * std::conj(sym.pieces()[k].value)});
    }
  }
  return out;
}

Complex pairing(const std::vector<Overlap>& ov, int n1, long l1, int n2, long l2) {
  const Rational lambda = Rational(l2) * pow2(-n2) - Rational(l1) * pow2(-n1);
  Complex sum{};
  for (const auto& o : ov) sum += o.weight * oscillatory_integral(lambda, o.region);
  return sum * std::pow(2.0, -0.5 * (n1 + n2));
}

Complex ordered_inner_product(const FrequencySymbol& sym, int n1, long l1, int n2, long l2) {
  return pairing(overlaps(sym, n1, n2), n1, l1, n2, l2);
}

}  // namespace

Complex inner_product(const FrequencySymbol& sym, int n1, long l1, int n2, long l2) {
  if (std::tie(n1, l1) > std::tie(n2, l2)) return std::conj(ordered_inner_product(sym, n2, l2, n1, l1));
  Complex v = ordered_inner_product(sym, n1, l1, n2, l2);
  if (n1 == n2 && l1 == l2) v.imag(0.0);
  return v;
}

GramWindow gram_window(const FrequencySymbol& sym, int n_max, long l_max) {
  if (n_max < 0 || l_max < 0) throw Error(ErrorCode::InvalidInput, "window sizes must be non-negative");
  GramWindow w;
  w.n_max = n_max;
  w.l_max = l_max;
  for (int n = -n_max; n <= n_max; ++n)
    for (long l = -l_max; l <= l_max; ++l) w.index.emplace_back(n, l);
  const auto size = static_cast<Eigen::Index>(w.index.size());
  w.entries = Eigen::MatrixXcd::Zero(size, size);
  // Same ordering and diagonal handling as inner_product, with overlaps
  // shared per exponent pair.
  const std::size_t span = 2 * static_cast<std::size_t>(n_max) + 1;
  std::vector<std::vector<Overlap>> cache(span * span);
  std::vector<bool> ready(span * span, false);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = i; j < size; ++j) {
      const auto [n1, l1] = w.index[i];
      const auto [n2, l2] = w.index[j];
      const std::size_t slot = static_cast<std::size_t>(n1 + n_max) * span + static_cast<std::size_t>(n2 + n_max);
      if (!ready[slot]) {
        cache[slot] = overlaps(sym, n1, n2);
        ready[slot] = true;
      }
      Complex v = pairing(cache[slot], n1, l1, n2, l2);
      if (i == j) v.imag(0.0);
      w.entries(i, j) = v;
      if (i != j) w.entries(j, i) = std::conj(v);
    }
  }
  w.deviation = (w.entries - Eigen::MatrixXcd::Identity(size, size)).cwiseAbs().maxCoeff();
  return w;
}

FrequencySymbol phase_modulate(const PiSet& e, const DilationPeriodicFunction& h) {
  if (!h.is_real()) throw Error(ErrorCode::Precondition, "phase function must be real-valued");
  std::vector<ValuePiece> pieces;
  for (const auto& iv : e.intervals()) {
    for (const auto& v : h.restrict_to(iv)) {
      pieces.push_back({v.piece, std::polar(inv_sqrt_two_pi(), v.value.real())});
    }
  }
  return FrequencySymbol(std::move(pieces));
}

std::vector<Complex> time_samples(const FrequencySymbol& sym, std::span<const double> grid) {
  std::vector<Complex> out;
  out.reserve(grid.size());
  for (double t : grid) {
    Complex sum{};
    for (const auto& p : sym.pieces()) {
      const double a = p.piece.a().value();
      const double b = p.piece.b().value();
      if (std::abs(t) < 1e-12) {
        sum += p.value * (b - a);
      } else {
        sum += p.value * (std::polar(1.0, b * t) - std::polar(1.0, a * t)) / Complex(0.0, t);
      }
    }
    out.push_back(sum * inv_sqrt_two_pi());
  }
  return out;
}

double eval_haar(double t) {
  if (t >= 0.0 && t < 0.5) return 1.0;
  if (t >= 0.5 && t <= 1.0) return -1.0;
  return 0.0;
}

}  // namespace wavset
