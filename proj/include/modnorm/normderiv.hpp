#pragma once

// One-sided norm derivatives
//
//   ρ±(x, y) = lim_{t→0±} (‖x + t y‖² − ‖x‖²) / (2t).
//
// In a Hilbert C*-module ρ+ (resp. ρ−) is the max (resp. min) of Re φ(<x, y>)
// over states with φ(<x, x>) = ‖x‖². On M_n(C) those states are the densities
// supported on the top eigenspace of <x, x>, so both extremes are extreme
// eigenvalues of V* Re<x, y> V.

#include <optional>

#include "modnorm/stateface.hpp"

namespace modnorm {

struct DerivativeValue {
  double value = 0.0;
  // Absent when x = 0, where ρ± = 0 and no face exists.
  std::optional<StateWitness> witness;
};

struct DerivativePair {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double rho_mid = 0.0;  // (ρ+ + ρ−)/2
  std::optional<StateWitness> max_witness;
  std::optional<StateWitness> min_witness;
};

DerivativeValue rho_plus(const ModuleElement& x, const ModuleElement& y);
DerivativeValue rho_minus(const ModuleElement& x, const ModuleElement& y);
DerivativePair rho_pair(const ModuleElement& x, const ModuleElement& y);

enum class Side { kPlus, kMinus };

inline constexpr double kFiniteDifferenceTolerance = 1e-6;

/// Definition-level estimate of ρ±: difference quotients of ‖x + t y‖² at
/// t = ±2^{−k}, k = 1..48. By convexity the quotients approach the limit
/// monotonically (from above for +, from below for −). Returns the first
/// quotient whose change from its predecessor is below tol·(1+‖x‖‖y‖);
/// throws NoConvergence otherwise.
double rho_fd(const ModuleElement& x, const ModuleElement& y, Side side,
              double tol = kFiniteDifferenceTolerance);

}  // namespace modnorm
