#include "wavset/interpolation.hpp"

#include "wavset/congruence.hpp"
#include "wavset/error.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wavset {
namespace {

bool by_left(const Interval& x, const Interval& y) { return x.a() < y.a(); }

std::vector<MapPiece> merge_map_pieces(std::vector<MapPiece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const MapPiece& x, const MapPiece& y) { return by_left(x.piece, y.piece); });
  std::vector<MapPiece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().piece.b() == p.piece.a() && out.back().offset == p.offset) {
      out.back().piece = Interval(out.back().piece.a(), p.piece.b());
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

// Exact partition test: the pieces cover the set and do not overlap.
bool partitions(const std::vector<Interval>& pieces, const PiSet& set) {
  PiRational total;
  for (const auto& p : pieces) total += p.length();
  return total == measure(set) && normalize(pieces) == set;
}

int approx_log2(const Rational& q) {
  using boost::multiprecision::msb;
  BigInt n = boost::multiprecision::abs(boost::multiprecision::numerator(q));
  BigInt d = boost::multiprecision::denominator(q);
  return static_cast<int>(msb(n)) - static_cast<int>(msb(d));
}

// n with 2^{-n}s ∈ iv, if any.
std::optional<int> exponent_containing(const Interval& iv, const PiRational& s) {
  if (s.is_zero() || iv.touches_origin() || s.sign() != iv.a().sign()) return std::nullopt;
  int guess = approx_log2(s.coefficient() / iv.a().coefficient());
  for (int n = guess - 2; n <= guess + 2; ++n) {
    if (iv.contains(s.dilated(-n))) return n;
  }
  return std::nullopt;
}

}  // namespace

InterpolationMap::InterpolationMap(PiSet domain_core, std::vector<MapPiece> pieces) {
  std::vector<Interval> src, img;
  for (const auto& p : pieces) {
    src.push_back(p.piece);
    img.push_back(p.piece.offset(p.offset));
  }
  if (!partitions(src, domain_core))
    throw Error(ErrorCode::InvalidInput, "map pieces do not partition the domain");
  PiSet target = normalize(img);
  if (measure(target) != measure(domain_core))
    throw Error(ErrorCode::InvalidInput, "map images overlap");
  domain_ = std::move(domain_core);
  target_ = std::move(target);
  pieces_ = merge_map_pieces(std::move(pieces));
}

InterpolationMap InterpolationMap::unchecked(PiSet domain_core, PiSet target_core,
                                             std::vector<MapPiece> pieces) {
  InterpolationMap m;
  m.domain_ = std::move(domain_core);
  m.target_ = std::move(target_core);
  m.pieces_ = std::move(pieces);
  return m;
}

InterpolationMap InterpolationMap::identity(const PiSet& core) {
  std::vector<MapPiece> pieces;
  for (const auto& iv : core.intervals()) pieces.push_back({iv, PiRational(0)});
  return InterpolationMap(core, std::move(pieces));
}

bool InterpolationMap::is_identity() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const MapPiece& p) { return p.offset.is_zero(); });
}

InterpolationMap build_sigma(const PiSet& e, const PiSet& f) {
  if (!is_wavelet_set(e).is_wavelet_set) throw Error(ErrorCode::NotWaveletSet, "source is not a wavelet set");
  if (!is_wavelet_set(f).is_wavelet_set) throw Error(ErrorCode::NotWaveletSet, "target is not a wavelet set");
  auto w = translation_congruent(e, f);
  if (!w) throw Error(ErrorCode::Internal, "wavelet sets failed to be translation congruent");
  std::vector<MapPiece> pieces;
  for (const auto& p : w->pieces) pieces.push_back({p.piece, PiRational(2 * p.shift)});
  return InterpolationMap(e, std::move(pieces));
}

PiRational eval_sigma(const InterpolationMap& m, const PiRational& s) {
  if (s.is_zero()) return s;
  for (const auto& p : m.pieces()) {
    if (auto n = exponent_containing(p.piece, s)) return s + p.offset.dilated(*n);
  }
  throw Error(ErrorCode::OrbitExhausted, "point outside the dilation orbit of the map's core");
}

InterpolationMap inverse(const InterpolationMap& m) {
  std::vector<MapPiece> pieces;
  for (const auto& p : m.pieces()) pieces.push_back({p.piece.offset(p.offset), -p.offset});
  return InterpolationMap(m.target_core(), std::move(pieces));
}

std::vector<MapPiece> refine_through(const InterpolationMap& m, const Interval& x) {
  std::vector<MapPiece> out;
  PiRational covered;
  for (const auto& p : m.pieces()) {
    for (int n : overlapping_exponents(p.piece, x)) {
      auto sub = x.intersect(p.piece.dilated(n));
      if (!sub) continue;
      covered += sub->length();
      out.push_back({*sub, p.offset.dilated(n)});
    }
  }
  if (covered != x.length())
    throw Error(ErrorCode::OrbitExhausted, "interval not covered by dilates of the map's core");
  std::sort(out.begin(), out.end(), [](const MapPiece& a, const MapPiece& b) { return by_left(a.piece, b.piece); });
  return out;
}

InterpolationMap compose(const InterpolationMap& m2, const InterpolationMap& m1, std::size_t piece_cap) {
  std::vector<MapPiece> pieces;
  for (const auto& p : m1.pieces()) {
    for (const auto& q : refine_through(m2, p.piece.offset(p.offset))) {
      pieces.push_back({q.piece.offset(-p.offset), p.offset + q.offset});
      if (pieces.size() > piece_cap)
        throw Error(ErrorCode::RefinementLimit, "composition exceeded the piece cap");
    }
  }
  return InterpolationMap(m1.domain_core(), std::move(pieces));
}

InterpolationMap power(const InterpolationMap& m, int n) {
  const InterpolationMap base = n < 0 ? inverse(m) : m;
  InterpolationMap acc = InterpolationMap::identity(m.domain_core());
  for (int i = 0; i < std::abs(n); ++i) acc = compose(base, acc);
  return acc;
}

std::optional<int> torsion_order(const InterpolationMap& m, int k_max) {
  if (k_max < 1) throw Error(ErrorCode::Precondition, "k_max must be at least 1");
  InterpolationMap p = m;
  for (int k = 1; k <= k_max; ++k) {
    if (p.is_identity()) return k;
    if (k < k_max) p = compose(m, p);
  }
  return std::nullopt;
}

bool check_measure_preserving(const InterpolationMap& m) {
  std::vector<Interval> src, img;
  for (const auto& p : m.pieces()) {
    src.push_back(p.piece);
    img.push_back(p.piece.offset(p.offset));
  }
  return partitions(src, m.domain_core()) && partitions(img, m.target_core());
}

bool power_congruence(const InterpolationMap& m, int n) {
  if (n < 1) throw Error(ErrorCode::Precondition, "power must be at least 1");
  InterpolationMap p = power(m, n);
  for (const auto& piece : p.pieces()) {
    // offset = 2πk  ⇔  coefficient/2 is an integer
    Rational half = piece.offset.coefficient() / 2;
    if (boost::multiprecision::denominator(half) != 1) return false;
  }
  return is_wavelet_set(p.target_core()).is_wavelet_set;
}

DilationPeriodicFunction::DilationPeriodicFunction(PiSet fundamental_domain, std::vector<ValuePiece> pieces) {
  std::vector<Interval> raw;
  for (const auto& p : pieces) raw.push_back(p.piece);
  if (!partitions(raw, fundamental_domain))
    throw Error(ErrorCode::InvalidInput, "coefficient pieces do not partition the fundamental domain");
  if (!is_dilation_generator(fundamental_domain))
    throw Error(ErrorCode::InvalidInput, "fundamental domain is not a 2-dilation generator");
  domain_ = std::move(fundamental_domain);
  pieces_ = merge_value_pieces(std::move(pieces));
}

DilationPeriodicFunction DilationPeriodicFunction::constant(Complex c, const PiSet& domain) {
  std::vector<ValuePiece> pieces;
  for (const auto& iv : domain.intervals()) pieces.push_back({iv, c});
  return DilationPeriodicFunction(domain, std::move(pieces));
}

Complex DilationPeriodicFunction::eval(const PiRational& s) const {
  if (s.is_zero()) throw Error(ErrorCode::Precondition, "dilation-periodic functions are undefined at 0");
  for (const auto& p : pieces_) {
    if (exponent_containing(p.piece, s)) return p.value;
  }
  throw Error(ErrorCode::OrbitExhausted, "point outside the dilation orbit of the fundamental domain");
}

std::vector<ValuePiece> DilationPeriodicFunction::restrict_to(const Interval& x) const {
  std::vector<ValuePiece> out;
  PiRational covered;
  for (const auto& p : pieces_) {
    for (int n : overlapping_exponents(p.piece, x)) {
      auto sub = x.intersect(p.piece.dilated(n));
      if (!sub) continue;
      covered += sub->length();
      out.push_back({*sub, p.value});
    }
  }
  if (covered != x.length())
    throw Error(ErrorCode::OrbitExhausted, "interval not covered by dilates of the fundamental domain");
  return merge_value_pieces(std::move(out));
}

bool DilationPeriodicFunction::is_real() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const ValuePiece& p) { return p.value.imag() == 0.0; });
}

DilationPeriodicFunction compose_periodic(const DilationPeriodicFunction& h, const InterpolationMap& phi,
                                          const PiSet& domain) {
  std::vector<ValuePiece> pieces;
  for (const auto& x : domain.intervals()) {
    for (const auto& q : refine_through(phi, x)) {
      for (const auto& v : h.restrict_to(q.piece.offset(q.offset))) {
        pieces.push_back({v.piece.offset(-q.offset), v.value});
      }
    }
  }
  return DilationPeriodicFunction(domain, std::move(pieces));
}

DilationPeriodicFunction conjugate_multiplier(const DilationPeriodicFunction& h, const InterpolationMap& m) {
  return compose_periodic(h, inverse(m), h.fundamental_domain());
}

int coefficient_index(int row, int col, int k) { return ((col - row) % k + k) % k; }

namespace {

Complex value_at(const std::vector<ValuePiece>& pieces, const PiRational& s) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), s,
                             [](const PiRational& x, const ValuePiece& p) { return x < p.piece.a(); });
  if (it == pieces.begin()) throw Error(ErrorCode::Internal, "refinement cell outside coefficient pieces");
  --it;
  if (!it->piece.contains(s)) throw Error(ErrorCode::Internal, "refinement cell outside coefficient pieces");
  return it->value;
}

// Cells of `domain` cut at every breakpoint in `cuts`.
std::vector<Interval> refine_cells(const PiSet& domain, const std::set<PiRational>& cuts) {
  std::vector<Interval> cells;
  for (const auto& iv : domain.intervals()) {
    PiRational left = iv.a();
    for (auto it = cuts.upper_bound(iv.a()); it != cuts.end() && *it < iv.b(); ++it) {
      cells.emplace_back(left, *it);
      left = *it;
    }
    cells.emplace_back(left, iv.b());
  }
  return cells;
}

void validate_family(const CoefficientFamily& fam) {
  if (fam.order < 1) throw Error(ErrorCode::InvalidInput, "family order must be at least 1");
  if (fam.coefficients.size() != static_cast<std::size_t>(fam.order))
    throw Error(ErrorCode::InvalidInput, "family needs exactly `order` coefficients");
  auto t = torsion_order(fam.sigma, fam.order);
  if (!t || *t != fam.order) throw Error(ErrorCode::Precondition, "torsion mismatch between map and family order");
}

}  // namespace

CriterionReport coefficient_report(const CoefficientFamily& fam, double tol) {
  validate_family(fam);
  const int k = fam.order;
  const PiSet domain = littlewood_paley();

  // g[r][a] = h_a ∘ σ^{-r}, all on the Littlewood-Paley domain.
  std::vector<std::vector<std::vector<ValuePiece>>> g(k);
  std::set<PiRational> cuts;
  for (int r = 0; r < k; ++r) {
    InterpolationMap back = power(fam.sigma, -r);
    for (int a = 0; a < k; ++a) {
      auto f = compose_periodic(fam.coefficients[a], back, domain);
      for (const auto& p : f.pieces()) {
        cuts.insert(p.piece.a());
        cuts.insert(p.piece.b());
      }
      g[r].push_back(f.pieces());
    }
  }

  CriterionReport report;
  for (const auto& cell : refine_cells(domain, cuts)) {
    CriterionPiece cp{cell, std::vector<Complex>(k * k), 0.0};
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) cp.matrix[r * k + c] = value_at(g[r][coefficient_index(r, c, k)], cell.a());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        Complex sum{};
        for (int c = 0; c < k; ++c) sum += cp.matrix[i * k + c] * std::conj(cp.matrix[j * k + c]);
        if (i == j) sum -= 1.0;
        cp.deviation = std::max(cp.deviation, std::abs(sum));
      }
    }
    report.max_deviation = std::max(report.max_deviation, cp.deviation);
    report.pieces.push_back(std::move(cp));
  }
  report.unitary = report.max_deviation <= tol;
  return report;
}

bool coefficient_criterion(const CoefficientFamily& fam, double tol) {
  return coefficient_report(fam, tol).unitary;
}

FrequencySymbol interpolated_symbol(const CoefficientFamily& fam) {
  if (!coefficient_criterion(fam)) throw Error(ErrorCode::Precondition, "coefficient criterion fails");
  const double scale = inv_sqrt_two_pi();
  std::vector<ValuePiece> contributions;
  std::set<PiRational> cuts;
  for (int n = 0; n < fam.order; ++n) {
    PiSet image = power(fam.sigma, n).target_core();
    for (const auto& iv : image.intervals()) {
      for (auto& v : fam.coefficients[n].restrict_to(iv)) {
        cuts.insert(v.piece.a());
        cuts.insert(v.piece.b());
        contributions.push_back({v.piece, v.value * scale});
      }
    }
  }
  std::vector<Interval> raw;
  for (const auto& c : contributions) raw.push_back(c.piece);
  std::vector<ValuePiece> pieces;
  for (const auto& cell : refine_cells(normalize(raw), cuts)) {
    Complex sum{};
    for (const auto& c : contributions)
      if (c.piece.contains(cell.a())) sum += c.value;
    if (sum != Complex{}) pieces.push_back({cell, sum});
  }
  return FrequencySymbol(merge_value_pieces(std::move(pieces)));
}

}  // namespace wavset
