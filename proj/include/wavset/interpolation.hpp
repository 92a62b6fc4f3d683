#pragma once

#include "wavset/pi_set.hpp"
#include "wavset/symbol.hpp"

#include <optional>
#include <vector>

namespace wavset {

/// σ(s) = s + offset on piece.
struct MapPiece {
  Interval piece;
  PiRational offset;
  friend bool operator==(const MapPiece&, const MapPiece&) = default;
};

/// Piecewise unit-slope map stored on a core set and extended 2-homogeneously:
/// σ(s) = 2^n σ(2^{-n}s) for s ∈ 2^n·core, σ(0) = 0.
///
/// For an interpolation map σ_E^F the core is E and every offset is an
/// integer multiple of 2π. Compositions of maps with different cores can pick
/// up dyadic fractions of 2π, so offsets are kept as general PiRationals.
class InterpolationMap {
 public:
  /// Pieces must partition the domain and their images must be disjoint.
  InterpolationMap(PiSet domain_core, std::vector<MapPiece> pieces);
  /// No validation at all; used to build negative controls.
  static InterpolationMap unchecked(PiSet domain_core, PiSet target_core, std::vector<MapPiece> pieces);
  static InterpolationMap identity(const PiSet& core);

  const PiSet& domain_core() const { return domain_; }
  const PiSet& target_core() const { return target_; }
  const std::vector<MapPiece>& pieces() const { return pieces_; }
  bool is_identity() const;

  friend bool operator==(const InterpolationMap&, const InterpolationMap&) = default;

 private:
  InterpolationMap() = default;
  PiSet domain_;
  PiSet target_;
  std::vector<MapPiece> pieces_;
};

/// σ_E^F. Both sets must be wavelet sets.
InterpolationMap build_sigma(const PiSet& e, const PiSet& f);
/// Evaluation through the 2-homogeneous extension.
PiRational eval_sigma(const InterpolationMap& m, const PiRational& s);
InterpolationMap inverse(const InterpolationMap& m);

inline constexpr std::size_t kDefaultPieceCap = 10000;
/// m2 ∘ m1 on m1's core. Throws RefinementLimit past piece_cap pieces and
/// OrbitExhausted when m1's image is not covered by dilates of m2's core.
InterpolationMap compose(const InterpolationMap& m2, const InterpolationMap& m1,
                         std::size_t piece_cap = kDefaultPieceCap);
/// m^n for any integer n (n = 0 gives the identity on the core).
InterpolationMap power(const InterpolationMap& m, int n);
/// Smallest k <= k_max with m^k = id on the core.
std::optional<int> torsion_order(const InterpolationMap& m, int k_max);
bool check_measure_preserving(const InterpolationMap& m);
/// (σ^n(s) - s)/2π ∈ ℤ on the core, and σ^n(core) is a wavelet set.
bool power_congruence(const InterpolationMap& m, int n);

/// Splits an interval by the extended map: returns sub-intervals of x, each
/// with the offset σ applies there.
std::vector<MapPiece> refine_through(const InterpolationMap& m, const Interval& x);

/// h(2s) = h(s), stored on a 2-dilation generator.
class DilationPeriodicFunction {
 public:
  DilationPeriodicFunction(PiSet fundamental_domain, std::vector<ValuePiece> pieces);
  static DilationPeriodicFunction constant(Complex c, const PiSet& domain = littlewood_paley());

  const PiSet& fundamental_domain() const { return domain_; }
  const std::vector<ValuePiece>& pieces() const { return pieces_; }
  /// s != 0
  Complex eval(const PiRational& s) const;
  /// Values of the extension over x, as sub-intervals of x.
  std::vector<ValuePiece> restrict_to(const Interval& x) const;
  bool is_real() const;

 private:
  PiSet domain_;
  std::vector<ValuePiece> pieces_;
};

/// s ↦ h(φ(s)), re-expressed on the given fundamental domain.
DilationPeriodicFunction compose_periodic(const DilationPeriodicFunction& h, const InterpolationMap& phi,
                                          const PiSet& domain);
/// h∘σ^{-1}: the symbol of U_σ^{-1} M_h U_σ.
DilationPeriodicFunction conjugate_multiplier(const DilationPeriodicFunction& h, const InterpolationMap& m);

/// Coefficients h_0..h_{k-1} of Σ M_{h_n} U^n for a map of torsion order k.
struct CoefficientFamily {
  int order;
  std::vector<DilationPeriodicFunction> coefficients;
  InterpolationMap sigma;
};

struct CriterionPiece {
  Interval piece;                // cell of the Littlewood-Paley domain
  std::vector<Complex> matrix;   // k×k, row-major
  double deviation;              // max |(M M*)_{ij} - δ_ij|
};

struct CriterionReport {
  bool unitary = true;
  double max_deviation = 0.0;
  std::vector<CriterionPiece> pieces;
};

/// Row r, column c of the coefficient matrix is h_{(c-r) mod k}∘σ^{-r}, the
/// cyclic layout of the k = 3 display (first row h_1 h_2 h_3, second row
/// h_3∘σ^{-1} h_1∘σ^{-1} h_2∘σ^{-1}, ...).
int coefficient_index(int row, int col, int k);

inline constexpr double kUnitarityTol = 1e-12;
CriterionReport coefficient_report(const CoefficientFamily& fam, double tol = kUnitarityTol);
bool coefficient_criterion(const CoefficientFamily& fam, double tol = kUnitarityTol);

/// (1/√(2π))·Σ_n h_n·χ_{σ^n(E)}. Requires the coefficient criterion.
FrequencySymbol interpolated_symbol(const CoefficientFamily& fam);

}  // namespace wavset
