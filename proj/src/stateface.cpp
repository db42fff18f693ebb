#include "modnorm/stateface.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "modnorm/errors.hpp"

namespace modnorm {

StateWitness::StateWitness(ComplexMatrix density) {
  if (density.rows() != density.cols() || density.rows() == 0) {
    throw InvalidState("density matrix must be non-empty and square");
  }
  require_finite(density, "StateWitness");
  if ((density - density.adjoint()).norm() > kTolerance * (1.0 + density.norm())) {
    throw InvalidState("density matrix is not Hermitian");
  }
  density_ = hermitian_part(density);
  const double trace = density_.trace().real();
  if (std::abs(trace - 1.0) > kTolerance) {
    throw InvalidState("density matrix has trace " + std::to_string(trace));
  }
  const RealVector eig = hermitian_eigenvalues(density_);
  if (eig[eig.size() - 1] < -kTolerance) {
    throw InvalidState("density matrix has negative eigenvalue " +
                       std::to_string(eig[eig.size() - 1]));
  }
}

StateWitness StateWitness::pure(const ComplexVector& v) {
  if (std::abs(v.norm() - 1.0) > kTolerance) {
    throw NotUnitVector("pure state needs a unit vector, got norm " +
                        std::to_string(v.norm()));
  }
  const ComplexVector u = v / v.norm();
  return StateWitness(u * u.adjoint());
}

StateWitness StateWitness::mix(const StateWitness& a, const StateWitness& b,
                               double weight) {
  if (a.dim() != b.dim()) throw ShapeMismatch("mixing states of different size");
  weight = std::clamp(weight, 0.0, 1.0);
  return StateWitness(weight * a.density_ + (1.0 - weight) * b.density_);
}

TopFace top_face(const ModuleElement& x, double gap_tol) {
  if (module_norm(x) <= kZeroNorm) {
    throw ZeroElement("top_face: element is zero, its state face is undefined");
  }
  const HermitianSpectrum spec =
      hermitian_spectrum(inner_product(x, x).matrix());
  const Eigen::Index n = spec.eigenvalues.size();
  const double lambda_max = spec.largest();
  const double cutoff = (1.0 - gap_tol) * lambda_max;
  Eigen::Index k = 1;
  while (k < n && spec.eigenvalues[k] >= cutoff) ++k;

  TopFace face;
  face.isometry = spec.eigenvectors.leftCols(k);
  face.lambda_max = lambda_max;
  face.gap_tol = gap_tol;
  if (k < n) {
    face.gap = lambda_max - spec.eigenvalues[k];
    face.near_degenerate = face.gap <= 10.0 * gap_tol * lambda_max;
  }
  return face;
}

Complex state_value(const StateWitness& p, const ComplexMatrix& a) {
  if (a.rows() != p.dim() || a.cols() != p.dim()) {
    throw ShapeMismatch("state_value: state on M_" + std::to_string(p.dim()) +
                        " applied to a " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " matrix");
  }
  // tr(p a) without forming the product.
  return p.density().transpose().cwiseProduct(a).sum();
}

Complex state_value(const StateWitness& p, const AlgebraElement& a) {
  return state_value(p, a.matrix());
}

ComplexMatrix face_compression(const TopFace& face, const ComplexMatrix& a) {
  if (a.rows() != face.algebra_dim() || a.cols() != face.algebra_dim()) {
    throw ShapeMismatch("face_compression: dimension mismatch");
  }
  return face.isometry.adjoint() * a * face.isometry;
}

ComplexMatrix face_compression(const TopFace& face, const AlgebraElement& a) {
  return face_compression(face, a.matrix());
}

StateWitness state_from_face_vector(const TopFace& face,
                                    const ComplexVector& zeta) {
  if (zeta.size() != face.dim()) {
    throw ShapeMismatch("state_from_face_vector: vector length " +
                        std::to_string(zeta.size()) + " for face of dimension " +
                        std::to_string(face.dim()));
  }
  if (std::abs(zeta.norm() - 1.0) > 1e-10) {
    throw NotUnitVector("state_from_face_vector: |zeta| = " +
                        std::to_string(zeta.norm()));
  }
  const ComplexVector v = face.isometry * (zeta / zeta.norm());
  return StateWitness(v * v.adjoint());
}

double cauchy_schwarz_gap(const StateWitness& p, const ModuleElement& x,
                          const ModuleElement& y) {
  require_same_shape(x, y, "cauchy_schwarz_gap");
  const double xx = state_value(p, inner_product(x, x)).real();
  const double yy = state_value(p, inner_product(y, y)).real();
  const double xy = std::abs(state_value(p, inner_product(x, y)));
  return xx * yy - xy * xy;
}

}  // namespace modnorm
