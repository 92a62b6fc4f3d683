#pragma once

#include "wavset/interpolation.hpp"
#include "wavset/symbol.hpp"

#include <Eigen/Dense>

#include <span>
#include <utility>
#include <vector>

namespace wavset {

// Fourier convention: f̂(s) = (1/√(2π))∫ e^{-ist} f(t) dt. Under it the
// dilation (Df)(t) = √2 f(2t) becomes D̂ = D^{-1} and the translation
// (Tf)(t) = f(t-1) becomes multiplication by e^{-is}.

/// ⟨D̂^{n1}T̂^{l1}ψ̂, D̂^{n2}T̂^{l2}ψ̂⟩, inner product linear in the first slot.
/// Swapping the two index pairs returns the exact complex conjugate.
Complex inner_product(const FrequencySymbol& sym, int n1, long l1, int n2, long l2);

struct GramWindow {
  int n_max = 0;  // exponents -n_max..n_max
  long l_max = 0;  // translations -l_max..l_max
  /// (n, l) labels in row order: n outer, l inner, both ascending.
  std::vector<std::pair<int, long>> index;
  Eigen::MatrixXcd entries;
  /// max |G - I| over all entries
  double deviation = 0.0;
};

GramWindow gram_window(const FrequencySymbol& sym, int n_max, long l_max);

/// e^{i h}·ψ̂_E for a real dilation-periodic h.
FrequencySymbol phase_modulate(const PiSet& e, const DilationPeriodicFunction& h);

/// Inverse Fourier transform of the symbol at each t, in closed form.
std::vector<Complex> time_samples(const FrequencySymbol& sym, std::span<const double> grid);

double eval_haar(double t);

}  // namespace wavset
