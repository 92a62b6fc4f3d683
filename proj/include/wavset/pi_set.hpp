#pragma once

#include "wavset/pi_rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wavset {

/// Half-open interval [a, b) with a < b. Empty intervals are never stored.
class Interval {
 public:
  Interval(PiRational a, PiRational b);
  /// nullopt when a >= b.
  static std::optional<Interval> make(PiRational a, PiRational b);

  const PiRational& a() const { return a_; }
  const PiRational& b() const { return b_; }
  PiRational length() const { return b_ - a_; }
  bool contains(const PiRational& s) const { return a_ <= s && s < b_; }
  /// True when 0 lies in the closure; such intervals meet infinitely many
  /// dyadic dilates of any set.
  bool touches_origin() const { return a_.sign() <= 0 && b_.sign() >= 0; }

  std::optional<Interval> intersect(const Interval& other) const;
  Interval dilated(int n) const { return {a_.dilated(n), b_.dilated(n)}; }
  Interval shifted(const BigInt& k) const { return {a_.shifted(k), b_.shifted(k)}; }
  Interval offset(const PiRational& d) const { return {a_ + d, b_ + d}; }
  /// Multiplication by a positive rational.
  Interval scaled(const Rational& r) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  PiRational a_;
  PiRational b_;
};

/// Canonical finite union of half-open intervals: sorted, pairwise disjoint,
/// touching neighbours merged. Two PiSets are equal as sets exactly when
/// their interval lists are identical.
class PiSet {
 public:
  PiSet() = default;
  PiSet(std::initializer_list<Interval> raw);
  explicit PiSet(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  /// Requires a nonempty set.
  const PiRational& min() const;
  const PiRational& max() const;
  bool contains(const PiRational& s) const;

  friend bool operator==(const PiSet&, const PiSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

PiSet normalize(std::vector<Interval> raw);
/// Raw endpoint pairs; rejects any pair with a >= b.
PiSet normalize(std::span<const std::pair<PiRational, PiRational>> raw);

PiRational measure(const PiSet& e);
/// 2^n·E
PiSet dilate(const PiSet& e, int n);
/// E + 2πk
PiSet translate(const PiSet& e, const BigInt& k);
/// r·E for a positive rational r.
PiSet scale(const PiSet& e, const Rational& r);

PiSet intersect(const PiSet& e, const PiSet& f);
PiSet unite(const PiSet& e, const PiSet& f);
PiSet subtract(const PiSet& e, const PiSet& f);
PiSet symmetric_difference(const PiSet& e, const PiSet& f);

/// All n with factor^n·moving ∩ fixed of positive length. Both intervals must
/// stay clear of the origin; factor > 1.
std::vector<int> overlapping_exponents(const Interval& moving, const Interval& fixed,
                                       const Rational& factor = Rational(2));

/// The Littlewood-Paley set [-2π,-π) ∪ [π,2π).
PiSet littlewood_paley();
/// [-dπ,-π) ∪ [π,dπ), the reference generator for dilation by d.
PiSet dilation_reference(const Rational& factor);

}  // namespace wavset
