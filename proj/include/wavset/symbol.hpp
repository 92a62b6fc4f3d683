#pragma once

#include "wavset/pi_set.hpp"

#include <complex>
#include <vector>

namespace wavset {

using Complex = std::complex<double>;

struct ValuePiece {
  Interval piece;
  Complex value;
};

/// Sorts pieces by left endpoint and merges touching pieces with identical
/// values.
std::vector<ValuePiece> merge_value_pieces(std::vector<ValuePiece> pieces);

/// Piecewise-constant complex function of the frequency variable, zero off
/// its support. Models ψ̂ for wavelet-set and phase-modulated wavelets.
class FrequencySymbol {
 public:
  FrequencySymbol() = default;
  /// Pieces must be pairwise disjoint; the support is their union.
  explicit FrequencySymbol(std::vector<ValuePiece> pieces);
  /// (1/√(2π))·χ_E
  static FrequencySymbol from_set(const PiSet& e);

  const PiSet& support() const { return support_; }
  const std::vector<ValuePiece>& pieces() const { return pieces_; }
  Complex eval(const PiRational& s) const;

 private:
  PiSet support_;
  std::vector<ValuePiece> pieces_;
};

/// 1/√(2π)
double inv_sqrt_two_pi();

}  // namespace wavset
