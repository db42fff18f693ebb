#pragma once

// Brute-force checks straight from the definitions of the BJ relations.
//
// They are one-sided: a found violation (holds == false) is exact, while
// holds == true only means nothing was found at the sampled resolution.

#include <cstdint>

#include "modnorm/hmodule.hpp"

namespace modnorm::verify {

struct OracleVerdict {
  bool holds = true;
  double norm_x = 0.0;
  double best_norm = 0.0;  // smallest ‖x + λy‖ (or ‖x + ya‖) seen
  Complex best_lambda;  // minimizing scalar; unused by the sampling oracle
  int evaluations = 0;
};

/// ‖x + λy‖ on a polar grid (radii log-spaced in [1e-4, radius], `grid`
/// angles and radii) followed by compass-search refinement. Fails iff some λ
/// gives ‖x + λy‖ < ‖x‖ − tol. Requires grid ≥ 64.
OracleVerdict bj_grid_oracle(const ModuleElement& x, const ModuleElement& y,
                             double radius = 4.0, int grid = 64,
                             double tol = 1e-6);

/// Same with real α ∈ ±[1e-4, radius] and golden-section refinement.
OracleVerdict bj_real_grid_oracle(const ModuleElement& x, const ModuleElement& y,
                                  double radius = 4.0, int grid = 64,
                                  double tol = 1e-6);

/// ‖x + y·a‖ for Gaussian a at scales 1e-2…10 plus aimed candidates
/// a = −c·<y, x>, c > 0. Requires trials ≥ 100.
OracleVerdict strong_bj_sample_oracle(const ModuleElement& x,
                                      const ModuleElement& y, int trials = 200,
                                      std::uint64_t seed = 0, double tol = 1e-6);

}  // namespace modnorm::verify
