#pragma once

// Zero-membership in the numerical range W(M) = {ζ* M ζ : ‖ζ‖ = 1}.
//
// 0 ∈ W(M) iff min over θ of λ_max(Re(e^{iθ} M)) ≥ 0. The minimizing angle
// gives a separating half-plane when the answer is no; when it is yes, a unit
// vector attaining (nearly) zero is assembled from eigenvectors of rotated
// Hermitian parts.

#include <optional>

#include "modnorm/matcore.hpp"

namespace modnorm {

inline constexpr int kAngleGrid = 720;
inline constexpr double kAngleWidth = 1e-12;

struct NumRangeDecision {
  bool contains = false;
  // min over θ of λ_max(Re(e^{iθ} M)) and its minimizer. When contains is
  // false, λ_max(Re(e^{iθ} M)) < −tol·(1+‖M‖)/2 at this θ.
  double min_support = 0.0;
  double theta = 0.0;
  double scale = 1.0;  // 1 + ‖M‖
  // Unit vector with |ζ* M ζ| ≤ tol·scale when contains is true.
  std::optional<ComplexVector> certificate;
  double certificate_residual = 0.0;  // |ζ* M ζ|
};

/// λ_max((e^{iθ} M + e^{−iθ} M*)/2).
double numrange_support(const ComplexMatrix& m, double theta);

NumRangeDecision zero_in_numrange(const ComplexMatrix& m, double tol);

/// Unit vector ζ whose Rayleigh value ζ* M ζ is the point of a polygonal
/// inner approximation of W(M) closest to `target`. The residual
/// |ζ* M ζ − target| is reduced by refining the polygon until it is at most
/// `accuracy` or the refinement budget runs out. `hint_theta` marks an angle
/// whose supporting line passes near the target.
ComplexVector numrange_preimage(const ComplexMatrix& m, Complex target,
                                double accuracy, double hint_theta = 0.0);

/// Unit ζ with ζ* H ζ = 0 for Hermitian H with λ_min ≤ 0 ≤ λ_max, built from
/// the extreme eigenvectors. Throws PreconditionFailed if the eigenvalues
/// share a strict sign.
ComplexVector hermitian_null_vector(const ComplexMatrix& h);

}  // namespace modnorm
