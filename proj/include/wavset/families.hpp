#pragma once

#include "wavset/pi_set.hpp"

namespace wavset {

/// Littlewood-Paley (Shannon) set [-2π,-π) ∪ [π,2π).
PiSet shannon();

/// E_α = [-2π+2α, -π+α) ∪ [π+α, 2π+2α) for -π < α < π.
PiSet shannon_path(const PiRational& alpha);

/// Generalized Journé set J_β for -π/7 <= β <= π/7:
/// [-32π/7, -4π+4β) ∪ [-π+β, -4π/7) ∪ [4π/7, π+β) ∪ [4π+4β, 32π/7).
/// At β = ±π/7 one of the outer intervals is empty and three remain.
PiSet journe_path(const PiRational& beta);
inline PiSet journe() { return journe_path(PiRational(0)); }

/// Wavelet set W with W ∩ [π, 3π/2) = A for any A ⊆ [π, 3π/2):
/// W = [3π/2, 2π) ∪ A ∪ ([2π,3π) \ 2A) ∪ ([-π,-π/2) \ (A-2π)) ∪ (2A-4π).
PiSet subset_extension(const PiSet& a);

/// Three-interval d-wavelet set for rational d >= 2. B is empty at d = 2.
PiSet d_dilation_set(const Rational& d);

}  // namespace wavset
