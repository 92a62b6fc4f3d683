#include "wavset/pi_rational.hpp"

#include "wavset/error.hpp"

#include <numbers>

namespace wavset {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid_input";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::OutOfRange: return "out_of_range";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::NotWaveletSet: return "not_wavelet_set";
    case ErrorCode::OrbitExhausted: return "orbit_exhausted";
    case ErrorCode::RefinementLimit: return "refinement_limit";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

Rational pow2(int n) {
  if (n >= 0) return Rational(BigInt(1) << n);
  return Rational(BigInt(1), BigInt(1) << (-n));
}

Rational rational_pow(const Rational& base, int n) {
  if (base.is_zero()) throw Error(ErrorCode::Precondition, "rational_pow: zero base");
  Rational result(1);
  Rational b = n >= 0 ? base : Rational(1) / base;
  for (int i = 0, m = n >= 0 ? n : -n; i < m; ++i) result *= b;
  return result;
}

BigInt floor_of(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt quot = n / d;  // truncates toward zero
  if (n % d != 0 && n.sign() < 0) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw Error(ErrorCode::InvalidInput, "malformed rational: " + std::string(text));
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw Error(ErrorCode::InvalidInput, "malformed rational: " + std::string(text));
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw Error(ErrorCode::InvalidInput, "zero denominator: " + std::string(text));
  if (den < 0) num = -num, den = -den;
  return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  BigInt d = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (d != 1) s += "/" + d.str();
  return s;
}

PiRational::PiRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidInput, "PiRational: zero denominator");
  // boost's rational normalization rejects negative denominators here
  if (den < 0) num = -num, den = -den;
  coeff_ = Rational(BigInt(num), BigInt(den));
}

PiRational PiRational::parse(std::string_view text) { return PiRational(parse_rational(text)); }

double PiRational::value() const {
  return coeff_.convert_to<double>() * std::numbers::pi;
}

std::string PiRational::to_string() const {
  if (coeff_.is_zero()) return "0";
  BigInt n = num(), d = den();
  std::string s = n.str() + "pi";
  if (n == 1) s = "pi";
  if (n == -1) s = "-pi";
  if (d != 1) s += "/" + d.str();
  return s;
}

}  // namespace wavset
