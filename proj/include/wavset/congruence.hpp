#pragma once

#include "wavset/pi_set.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace wavset {

/// piece + 2π·shift lands in the target.
struct TranslationPiece {
  Interval piece;
  std::int64_t shift;
  friend bool operator==(const TranslationPiece&, const TranslationPiece&) = default;
};

/// Partition of a source set whose 2π-translates partition the target.
struct TranslationWitness {
  PiSet target;
  std::vector<TranslationPiece> pieces;
  /// normalize({piece + 2π·shift})
  PiSet image() const;
};

/// factor^exponent·piece lands in the target.
struct DilationPiece {
  Interval piece;
  int exponent;
  friend bool operator==(const DilationPiece&, const DilationPiece&) = default;
};

struct DilationWitness {
  PiSet target;
  Rational factor{2};
  std::vector<DilationPiece> pieces;
  PiSet image() const;
};

enum class FailureReason { NotTranslationCongruent, NotDilationCongruent, WrongMeasure };
std::string_view failure_reason_name(FailureReason r);

struct WaveletVerdict {
  bool is_wavelet_set = false;
  std::optional<TranslationWitness> translation;
  std::optional<DilationWitness> dilation;
  std::optional<FailureReason> failure_reason;
};

/// Decides whether E is 2π-translation congruent to the target and returns
/// the bijection as pieces when it is. Both sets are folded onto [0, 2π); the
/// sets are congruent exactly when the folded multiplicities agree on every
/// elementary cell, and matching the layers cell by cell gives the witness.
std::optional<TranslationWitness> translation_congruent(const PiSet& e, const PiSet& target);

/// Same decision for dilation by powers of factor (default 2). Sets with an
/// interval touching 0 have unbounded orbits and are never congruent.
std::optional<DilationWitness> dilation_congruent(const PiSet& g, const PiSet& target,
                                                  const Rational& factor = Rational(2));

/// Congruent to [0, 2π) modulo 2π.
bool is_translation_generator(const PiSet& e);
/// Congruent modulo factor to [-factor·π, -π) ∪ [π, factor·π).
bool is_dilation_generator(const PiSet& g, const Rational& factor = Rational(2));
/// Translation criterion first, then dilation; positive verdicts are
/// cross-checked against measure(E) = 2π.
WaveletVerdict is_wavelet_set(const PiSet& e, const Rational& factor = Rational(2));
/// Spectral for the integer lattice; equivalent to translation generation.
bool is_spectral_for_Z(const PiSet& e);

PiSet unit_period();  // [0, 2π)

}  // namespace wavset
