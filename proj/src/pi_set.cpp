#include "wavset/pi_set.hpp"

#include "wavset/error.hpp"

#include <algorithm>
#include <cmath>

namespace wavset {

Interval::Interval(PiRational a, PiRational b) : a_(std::move(a)), b_(std::move(b)) {
  if (!(a_ < b_))
    throw Error(ErrorCode::InvalidInput,
                "empty or reversed interval [" + a_.to_string() + ", " + b_.to_string() + ")");
}

std::optional<Interval> Interval::make(PiRational a, PiRational b) {
  if (!(a < b)) return std::nullopt;
  return Interval(std::move(a), std::move(b));
}

std::optional<Interval> Interval::intersect(const Interval& other) const {
  return make(std::max(a_, other.a_), std::min(b_, other.b_));
}

Interval Interval::scaled(const Rational& r) const {
  if (r.sign() <= 0) throw Error(ErrorCode::Precondition, "Interval::scaled needs a positive factor");
  return {a_.scaled(r), b_.scaled(r)};
}

PiSet::PiSet(std::initializer_list<Interval> raw) : PiSet(std::vector<Interval>(raw)) {}

PiSet::PiSet(std::vector<Interval> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Interval& x, const Interval& y) { return x.a() < y.a(); });
  for (auto& iv : raw) {
    if (!intervals_.empty() && iv.a() <= intervals_.back().b()) {
      if (intervals_.back().b() < iv.b())
        intervals_.back() = Interval(intervals_.back().a(), iv.b());
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

const PiRational& PiSet::min() const {
  if (empty()) throw Error(ErrorCode::Precondition, "min of empty set");
  return intervals_.front().a();
}

const PiRational& PiSet::max() const {
  if (empty()) throw Error(ErrorCode::Precondition, "max of empty set");
  return intervals_.back().b();
}

bool PiSet::contains(const PiRational& s) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), s,
                             [](const PiRational& v, const Interval& iv) { return v < iv.a(); });
  return it != intervals_.begin() && std::prev(it)->contains(s);
}

PiSet normalize(std::vector<Interval> raw) { return PiSet(std::move(raw)); }

PiSet normalize(std::span<const std::pair<PiRational, PiRational>> raw) {
  std::vector<Interval> ivs;
  ivs.reserve(raw.size());
  for (const auto& [a, b] : raw) ivs.emplace_back(a, b);
  return PiSet(std::move(ivs));
}

PiRational measure(const PiSet& e) {
  PiRational total;
  for (const auto& iv : e.intervals()) total += iv.length();
  return total;
}

PiSet dilate(const PiSet& e, int n) {
  std::vector<Interval> out;
  for (const auto& iv : e.intervals()) out.push_back(iv.dilated(n));
  return PiSet(std::move(out));
}

PiSet translate(const PiSet& e, const BigInt& k) {
  std::vector<Interval> out;
  for (const auto& iv : e.intervals()) out.push_back(iv.shifted(k));
  return PiSet(std::move(out));
}

PiSet scale(const PiSet& e, const Rational& r) {
  std::vector<Interval> out;
  for (const auto& iv : e.intervals()) out.push_back(iv.scaled(r));
  return PiSet(std::move(out));
}

PiSet intersect(const PiSet& e, const PiSet& f) {
  std::vector<Interval> out;
  const auto& x = e.intervals();
  const auto& y = f.intervals();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (auto iv = x[i].intersect(y[j])) out.push_back(*iv);
    if (x[i].b() < y[j].b()) ++i; else ++j;
  }
  return PiSet(std::move(out));
}

PiSet unite(const PiSet& e, const PiSet& f) {
  std::vector<Interval> out = e.intervals();
  out.insert(out.end(), f.intervals().begin(), f.intervals().end());
  return PiSet(std::move(out));
}

PiSet subtract(const PiSet& e, const PiSet& f) {
  std::vector<Interval> out;
  const auto& y = f.intervals();
  std::size_t j = 0;
  for (const auto& iv : e.intervals()) {
    PiRational cursor = iv.a();
    while (j < y.size() && y[j].b() <= cursor) ++j;
    std::size_t k = j;
    while (k < y.size() && y[k].a() < iv.b()) {
      if (auto piece = Interval::make(cursor, y[k].a())) out.push_back(*piece);
      cursor = std::max(cursor, y[k].b());
      if (y[k].b() > iv.b()) break;
      ++k;
    }
    if (auto piece = Interval::make(cursor, iv.b())) out.push_back(*piece);
  }
  return PiSet(std::move(out));
}

PiSet symmetric_difference(const PiSet& e, const PiSet& f) {
  return unite(subtract(e, f), subtract(f, e));
}

namespace {

// |x| range of an interval clear of the origin, as (low, high).
std::pair<Rational, Rational> abs_range(const Interval& iv) {
  if (iv.a().sign() >= 0) return {iv.a().coefficient(), iv.b().coefficient()};
  return {-iv.b().coefficient(), -iv.a().coefficient()};
}

}  // namespace

std::vector<int> overlapping_exponents(const Interval& moving, const Interval& fixed,
                                       const Rational& factor) {
  if (moving.touches_origin() || fixed.touches_origin())
    throw Error(ErrorCode::Precondition, "dilation orbit of an interval touching 0 is unbounded");
  if (factor <= 1) throw Error(ErrorCode::Precondition, "dilation factor must exceed 1");
  if (moving.a().sign() != fixed.a().sign()) return {};
  auto [m_lo, m_hi] = abs_range(moving);
  auto [f_lo, f_hi] = abs_range(fixed);
  // Need factor^n·m_hi > f_lo and factor^n·m_lo < f_hi.
  const double log_f = std::log(factor.convert_to<double>());
  int lo = static_cast<int>(std::floor(std::log(Rational(f_lo / m_hi).convert_to<double>()) / log_f));
  int hi = static_cast<int>(std::ceil(std::log(Rational(f_hi / m_lo).convert_to<double>()) / log_f));
  Rational p = rational_pow(factor, lo);
  while (p * m_hi > f_lo) { p /= factor; --lo; }
  while (!(p * m_hi > f_lo)) { p *= factor; ++lo; }
  Rational q = rational_pow(factor, hi);
  while (!(q * m_lo < f_hi)) { q /= factor; --hi; }
  while (q * factor * m_lo < f_hi) { q *= factor; ++hi; }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

PiSet littlewood_paley() {
  return PiSet{Interval(PiRational(-2), PiRational(-1)), Interval(PiRational(1), PiRational(2))};
}

PiSet dilation_reference(const Rational& factor) {
  if (factor <= 1) throw Error(ErrorCode::Precondition, "dilation factor must exceed 1");
  return PiSet{Interval(PiRational(-factor), PiRational(-1)),
               Interval(PiRational(1), PiRational(factor))};
}

}  // namespace wavset
