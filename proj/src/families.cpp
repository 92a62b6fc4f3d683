#include "wavset/families.hpp"

#include "wavset/congruence.hpp"
#include "wavset/error.hpp"

namespace wavset {

namespace {

void push_if_nonempty(std::vector<Interval>& out, PiRational a, PiRational b) {
  if (auto iv = Interval::make(std::move(a), std::move(b))) out.push_back(*iv);
}

}  // namespace

PiSet shannon() { return littlewood_paley(); }

PiSet shannon_path(const PiRational& alpha) {
  if (!(PiRational(-1) < alpha && alpha < PiRational(1)))
    throw Error(ErrorCode::OutOfRange, "shannon_path needs -pi < alpha < pi, got " + alpha.to_string());
  const PiRational two_alpha = alpha.dilated(1);
  return PiSet{Interval(PiRational(-2) + two_alpha, PiRational(-1) + alpha),
               Interval(PiRational(1) + alpha, PiRational(2) + two_alpha)};
}

PiSet journe_path(const PiRational& beta) {
  if (beta < PiRational(-1, 7) || beta > PiRational(1, 7))
    throw Error(ErrorCode::OutOfRange, "journe_path needs -pi/7 <= beta <= pi/7, got " + beta.to_string());
  const PiRational four_beta = beta.dilated(2);
  std::vector<Interval> out;
  push_if_nonempty(out, PiRational(-32, 7), PiRational(-4) + four_beta);
  push_if_nonempty(out, PiRational(-1) + beta, PiRational(-4, 7));
  push_if_nonempty(out, PiRational(4, 7), PiRational(1) + beta);
  push_if_nonempty(out, PiRational(4) + four_beta, PiRational(32, 7));
  return PiSet(std::move(out));
}

PiSet subset_extension(const PiSet& a) {
  const PiSet window{Interval(PiRational(1), PiRational(3, 2))};
  if (subtract(a, window) != PiSet{})
    throw Error(ErrorCode::Precondition, "subset_extension needs A inside [pi, 3pi/2)");
  const PiSet two_a = dilate(a, 1);
  const PiSet b = subtract(PiSet{Interval(PiRational(2), PiRational(3))}, two_a);
  const PiSet c = subtract(PiSet{Interval(PiRational(-1), PiRational(-1, 2))}, translate(a, BigInt(-1)));
  const PiSet d = translate(two_a, BigInt(-2));
  PiSet w = PiSet{Interval(PiRational(3, 2), PiRational(2))};
  for (const PiSet* part : {&a, &b, &c, &d}) w = unite(w, *part);

  if (intersect(w, window) != a)
    throw Error(ErrorCode::Internal, "subset_extension: W does not meet [pi, 3pi/2) in A");
  if (!is_wavelet_set(w).is_wavelet_set)
    throw Error(ErrorCode::Internal, "subset_extension: W is not a wavelet set");
  return w;
}

PiSet d_dilation_set(const Rational& d) {
  if (d < 2) throw Error(ErrorCode::OutOfRange, "d_dilation_set needs d >= 2");
  const Rational d1 = d + 1;
  const Rational dd1 = d * d - 1;
  std::vector<Interval> out;
  push_if_nonempty(out, PiRational(Rational(-2 * d / d1)), PiRational(Rational(-2 / d1)));
  push_if_nonempty(out, PiRational(Rational(2 / dd1)), PiRational(Rational(2 / d1)));
  push_if_nonempty(out, PiRational(Rational(2 * d / d1)), PiRational(Rational(2 * d * d / dd1)));
  return PiSet(std::move(out));
}

}  // namespace wavset
