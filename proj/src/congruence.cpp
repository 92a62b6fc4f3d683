#include "wavset/congruence.hpp"

#include "wavset/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace wavset {

namespace {

// One fold of a source interval into the fundamental domain: the source part
// equals act(element, cell).
struct Layer {
  Interval cell;
  std::int64_t element;
};

struct Match {
  Interval source;
  std::int64_t group;  // target element minus source element
};

std::int64_t checked_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(ErrorCode::Internal, "translation shift exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

std::vector<Layer> fold_translation(const PiSet& e) {
  std::vector<Layer> layers;
  for (const auto& iv : e.intervals()) {
    // k ranges over the periods [2πk, 2π(k+1)) that meet [a, b).
    BigInt k_lo = floor_of(iv.a().coefficient() / 2);
    BigInt k_hi = ceil_of(iv.b().coefficient() / 2) - 1;
    for (BigInt k = k_lo; k <= k_hi; ++k) {
      Interval period(PiRational(Rational(2 * k)), PiRational(Rational(2 * k + 2)));
      if (auto part = iv.intersect(period))
        layers.push_back({part->shifted(-k), checked_int64(k)});
    }
  }
  return layers;
}

std::optional<std::vector<Layer>> fold_dilation(const PiSet& g, const Rational& factor) {
  const PiSet reference = dilation_reference(factor);
  std::vector<Layer> layers;
  for (const auto& iv : g.intervals()) {
    if (iv.touches_origin()) return std::nullopt;
    for (const auto& ref : reference.intervals()) {
      for (int n : overlapping_exponents(ref, iv, factor)) {
        if (auto part = iv.intersect(ref.scaled(rational_pow(factor, n))))
          layers.push_back({part->scaled(rational_pow(factor, -n)), n});
      }
    }
  }
  return layers;
}

// Cell-by-cell matching of source layers against target layers. Elements of
// each side are paired in increasing order on every elementary cell.
std::optional<std::vector<Match>> match_layers(
    const std::vector<Layer>& src, const std::vector<Layer>& dst,
    const std::function<Interval(std::int64_t, const Interval&)>& act) {
  std::vector<PiRational> cuts;
  for (const auto* side : {&src, &dst})
    for (const auto& l : *side) {
      cuts.push_back(l.cell.a());
      cuts.push_back(l.cell.b());
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Match> matches;
  std::vector<std::int64_t> s_el, d_el;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const Interval cell(cuts[c], cuts[c + 1]);
    s_el.clear();
    d_el.clear();
    for (const auto& l : src)
      if (l.cell.a() <= cell.a() && cell.b() <= l.cell.b()) s_el.push_back(l.element);
    for (const auto& l : dst)
      if (l.cell.a() <= cell.a() && cell.b() <= l.cell.b()) d_el.push_back(l.element);
    if (s_el.size() != d_el.size()) return std::nullopt;
    std::sort(s_el.begin(), s_el.end());
    std::sort(d_el.begin(), d_el.end());
    for (std::size_t i = 0; i < s_el.size(); ++i)
      matches.push_back({act(s_el[i], cell), d_el[i] - s_el[i]});
  }
  std::sort(matches.begin(), matches.end(),
            [](const Match& x, const Match& y) { return x.source.a() < y.source.a(); });
  std::vector<Match> merged;
  for (auto& m : matches) {
    if (!merged.empty() && merged.back().group == m.group && merged.back().source.b() == m.source.a())
      merged.back().source = Interval(merged.back().source.a(), m.source.b());
    else
      merged.push_back(std::move(m));
  }
  return merged;
}

}  // namespace

std::string_view failure_reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::NotTranslationCongruent: return "NotTranslationCongruent";
    case FailureReason::NotDilationCongruent: return "NotDilationCongruent";
    case FailureReason::WrongMeasure: return "WrongMeasure";
  }
  return "Unknown";
}

PiSet unit_period() { return PiSet{Interval(PiRational(0), PiRational(2))}; }

PiSet TranslationWitness::image() const {
  std::vector<Interval> out;
  for (const auto& p : pieces) out.push_back(p.piece.shifted(p.shift));
  return PiSet(std::move(out));
}

PiSet DilationWitness::image() const {
  std::vector<Interval> out;
  for (const auto& p : pieces) out.push_back(p.piece.scaled(rational_pow(factor, p.exponent)));
  return PiSet(std::move(out));
}

std::optional<TranslationWitness> translation_congruent(const PiSet& e, const PiSet& target) {
  if (measure(e) != measure(target)) return std::nullopt;
  auto act = [](std::int64_t k, const Interval& cell) { return cell.shifted(BigInt(k)); };
  auto matches = match_layers(fold_translation(e), fold_translation(target), act);
  if (!matches) return std::nullopt;
  TranslationWitness w{target, {}};
  for (auto& m : *matches) w.pieces.push_back({m.source, m.group});
  if (w.image() != target)
    throw Error(ErrorCode::Internal, "translation witness does not reassemble the target");
  return w;
}

std::optional<DilationWitness> dilation_congruent(const PiSet& g, const PiSet& target,
                                                  const Rational& factor) {
  auto src = fold_dilation(g, factor);
  auto dst = fold_dilation(target, factor);
  if (!src || !dst) return std::nullopt;
  auto act = [&factor](std::int64_t n, const Interval& cell) {
    return cell.scaled(rational_pow(factor, static_cast<int>(n)));
  };
  auto matches = match_layers(*src, *dst, act);
  if (!matches) return std::nullopt;
  DilationWitness w{target, factor, {}};
  for (auto& m : *matches) w.pieces.push_back({m.source, static_cast<int>(m.group)});
  if (w.image() != target)
    throw Error(ErrorCode::Internal, "dilation witness does not reassemble the target");
  return w;
}

bool is_translation_generator(const PiSet& e) {
  return translation_congruent(e, unit_period()).has_value();
}

bool is_dilation_generator(const PiSet& g, const Rational& factor) {
  return dilation_congruent(g, dilation_reference(factor), factor).has_value();
}

bool is_spectral_for_Z(const PiSet& e) { return is_translation_generator(e); }

WaveletVerdict is_wavelet_set(const PiSet& e, const Rational& factor) {
  WaveletVerdict v;
  v.translation = translation_congruent(e, unit_period());
  if (!v.translation) {
    v.failure_reason = FailureReason::NotTranslationCongruent;
    return v;
  }
  v.dilation = dilation_congruent(e, dilation_reference(factor), factor);
  if (!v.dilation) {
    v.failure_reason = FailureReason::NotDilationCongruent;
    return v;
  }
  if (measure(e) != two_pi()) {
    v.failure_reason = FailureReason::WrongMeasure;
    return v;
  }
  v.is_wavelet_set = true;
  return v;
}

}  // namespace wavset
