#pragma once

// Identities around the cubic element x<x, x>:
//
//   ρ±(x, x<x,x>) = ‖x‖⁴
//   ‖αx + βx<x,x>‖ = α‖x‖ + β‖x‖³      (α, β > 0)
//   ‖T + TT*T‖ = ‖T‖ + ‖T‖³, attained at a top right-singular vector of T.

#include <optional>

#include "modnorm/normderiv.hpp"

namespace modnorm {

inline constexpr double kDefaultDaugavetTolerance = 1e-9;

/// x<x, x>.
ModuleElement cubic_element(const ModuleElement& x);

struct RhoCubeReport {
  double norm4 = 0.0;  // ‖x‖⁴
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  // φ(<x,x>²) for the two extremal witnesses; both equal ‖x‖⁴ in theory.
  std::optional<double> max_witness_square;
  std::optional<double> min_witness_square;
  Eigen::Index face_dim = 0;
  double residual = 0.0;  // worst relative deviation over all four checks
  bool holds = false;
};

RhoCubeReport rho_cube_identity(const ModuleElement& x,
                                double tol = kDefaultDaugavetTolerance);

struct ModuleDaugavetReport {
  double alpha = 0.0;
  double beta = 0.0;
  double lhs = 0.0;  // ‖αx + βx<x,x>‖
  double rhs = 0.0;  // α‖x‖ + β‖x‖³
  double residual = 0.0;  // |lhs − rhs| / (1 + rhs)
  double cube_norm = 0.0;  // ‖x<x,x>‖
  double norm_cubed = 0.0;  // ‖x‖³
  double cube_residual = 0.0;  // |cube_norm − norm_cubed| / (1 + norm_cubed)
  bool holds = false;
};

/// Throws InvalidScalars unless α > 0 and β > 0.
ModuleDaugavetReport module_daugavet_check(const ModuleElement& x, double alpha,
                                           double beta,
                                           double tol = kDefaultDaugavetTolerance);

struct OperatorDaugavetReport {
  ComplexVector witness;  // unit x_o
  double norm_t = 0.0;  // ‖T‖
  double norm_ttt = 0.0;  // ‖TT*T‖
  double norm_sum = 0.0;  // ‖T + TT*T‖
  double sum_residual = 0.0;  // |‖T+TT*T‖ − ‖T‖ − ‖T‖³| / (1 + ‖T‖ + ‖T‖³)
  double attain_t = 0.0;  // |‖T x_o‖ − ‖T‖|
  double attain_ttt = 0.0;  // |‖TT*T x_o‖ − ‖TT*T‖|
  double cube_residual = 0.0;  // |‖TT*T‖ − ‖T‖³|
  double direction_gap = 0.0;  // ‖(T/‖T‖)x_o − (TT*T/‖TT*T‖)x_o‖
  // Every operator on a finite-dimensional space is compact, so the distance
  // hypothesis of the infinite-dimensional statement is vacuous here.
  bool compactness_hypothesis_vacuous = true;
  bool holds = false;
};

/// Throws ZeroOperator when ‖T‖ ≤ 1e-12. T may be rectangular.
OperatorDaugavetReport operator_daugavet_witness(
    const ComplexMatrix& t, double tol = kDefaultDaugavetTolerance);

}  // namespace modnorm
