#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace wavset {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^n as an exact rational, n of either sign.
Rational pow2(int n);
/// base^n for a nonzero rational base.
Rational rational_pow(const Rational& base, int n);
BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);
/// Parses "p", "p/q" or "-p/q" into a normalized rational.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// Exact real number (num/den)·π.
///
/// Every endpoint of every frequency set is one of these, so translations by
/// 2πk and dilations by 2^n stay exact no matter how often they are applied.
class PiRational {
 public:
  PiRational() = default;
  PiRational(std::int64_t num, std::int64_t den = 1);
  explicit PiRational(Rational coefficient) : coeff_(std::move(coefficient)) {}

  /// "p/q" read as (p/q)·π.
  static PiRational parse(std::string_view text);

  BigInt num() const { return boost::multiprecision::numerator(coeff_); }
  BigInt den() const { return boost::multiprecision::denominator(coeff_); }
  /// The rational c with value c·π.
  const Rational& coefficient() const { return coeff_; }

  /// Value in radians, rounded to double.
  double value() const;
  int sign() const { return coeff_.sign(); }
  bool is_zero() const { return coeff_.is_zero(); }

  PiRational dilated(int n) const { return PiRational(coeff_ * pow2(n)); }
  /// this + 2πk
  PiRational shifted(const BigInt& k) const { return PiRational(coeff_ + Rational(2 * k)); }
  PiRational scaled(const Rational& r) const { return PiRational(coeff_ * r); }
  PiRational abs() const { return PiRational(boost::multiprecision::abs(coeff_)); }

  PiRational operator-() const { return PiRational(-coeff_); }
  PiRational& operator+=(const PiRational& o) { coeff_ += o.coeff_; return *this; }
  PiRational& operator-=(const PiRational& o) { coeff_ -= o.coeff_; return *this; }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }

  friend bool operator==(const PiRational& a, const PiRational& b) { return a.coeff_ == b.coeff_; }
  friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) {
    int c = a.coeff_.compare(b.coeff_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// e.g. "-32/7pi", "0", "2pi".
  std::string to_string() const;

 private:
  Rational coeff_{0};
};

inline PiRational two_pi() { return PiRational(2); }

}  // namespace wavset
