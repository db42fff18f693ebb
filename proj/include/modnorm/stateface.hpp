#pragma once

// States supported on the top eigenspace of <x, x>.
//
// On M_n(C) every state is a ↦ tr(p a) for a density matrix p, and the states
// attaining φ(<x, x>) = ‖x‖² are exactly those whose density is supported on
// the top eigenspace of <x, x>. TopFace carries an isometry onto that space;
// the values {φ(a)} over such states form the numerical range of V* a V.

#include <limits>

#include "modnorm/hmodule.hpp"

namespace modnorm {

inline constexpr double kDefaultGapTolerance = 1e-10;

struct TopFace {
  ComplexMatrix isometry;  // n×k, orthonormal columns
  double lambda_max = 0.0;  // = ‖x‖²
  // λ_max minus the largest eigenvalue left out of the face; +inf when k = n.
  double gap = std::numeric_limits<double>::infinity();
  double gap_tol = kDefaultGapTolerance;
  // Set when the gap is within 10·gap_tol relative; the face dimension is
  // discontinuous there.
  bool near_degenerate = false;

  Eigen::Index dim() const { return isometry.cols(); }
  Eigen::Index algebra_dim() const { return isometry.rows(); }
};

/// A density matrix p (Hermitian, PSD, trace one) standing for a ↦ tr(p a).
class StateWitness {
 public:
  static constexpr double kTolerance = 1e-10;

  // Throws InvalidState unless p is Hermitian, PSD and trace one within
  // kTolerance.
  explicit StateWitness(ComplexMatrix density);

  /// Pure state v v*; v must be a unit vector.
  static StateWitness pure(const ComplexVector& v);

  /// weight·a + (1 − weight)·b, weight ∈ [0, 1].
  static StateWitness mix(const StateWitness& a, const StateWitness& b,
                          double weight);

  const ComplexMatrix& density() const { return density_; }
  Eigen::Index dim() const { return density_.rows(); }

 private:
  ComplexMatrix density_;
};

/// Throws ZeroElement when module_norm(x) ≤ kZeroNorm.
TopFace top_face(const ModuleElement& x,
                 double gap_tol = kDefaultGapTolerance);

Complex state_value(const StateWitness& p, const AlgebraElement& a);
Complex state_value(const StateWitness& p, const ComplexMatrix& a);

/// V* a V.
ComplexMatrix face_compression(const TopFace& face, const AlgebraElement& a);
ComplexMatrix face_compression(const TopFace& face, const ComplexMatrix& a);

/// Rank-one state (Vζ)(Vζ)*; ζ must have unit length within 1e-10.
StateWitness state_from_face_vector(const TopFace& face,
                                    const ComplexVector& zeta);

/// φ(<x,x>)·φ(<y,y>) − |φ(<x,y>)|², which is nonnegative for every state.
double cauchy_schwarz_gap(const StateWitness& p, const ModuleElement& x,
                          const ModuleElement& y);

}  // namespace modnorm
