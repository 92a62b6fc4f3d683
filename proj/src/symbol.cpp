#include "wavset/symbol.hpp"

#include "wavset/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wavset {

double inv_sqrt_two_pi() { return 1.0 / std::sqrt(2.0 * std::numbers::pi); }

std::vector<ValuePiece> merge_value_pieces(std::vector<ValuePiece> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const ValuePiece& x, const ValuePiece& y) { return x.piece.a() < y.piece.a(); });
  std::vector<ValuePiece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().piece.b() == p.piece.a() && out.back().value == p.value) {
      out.back().piece = Interval(out.back().piece.a(), p.piece.b());
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

FrequencySymbol::FrequencySymbol(std::vector<ValuePiece> pieces) {
  std::vector<Interval> raw;
  PiRational total;
  for (const auto& p : pieces) {
    raw.push_back(p.piece);
    total += p.piece.length();
  }
  support_ = normalize(std::move(raw));
  if (measure(support_) != total) throw Error(ErrorCode::InvalidInput, "symbol pieces overlap");
  pieces_ = merge_value_pieces(std::move(pieces));
}

FrequencySymbol FrequencySymbol::from_set(const PiSet& e) {
  std::vector<ValuePiece> pieces;
  for (const auto& iv : e.intervals()) pieces.push_back({iv, Complex(inv_sqrt_two_pi(), 0.0)});
  return FrequencySymbol(std::move(pieces));
}

Complex FrequencySymbol::eval(const PiRational& s) const {
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), s,
                             [](const PiRational& x, const ValuePiece& p) { return x < p.piece.a(); });
  if (it == pieces_.begin()) return {};
  --it;
  return it->piece.contains(s) ? it->value : Complex{};
}

}  // namespace wavset
