#pragma once

#include <Eigen/SVD>
#include <initializer_list>

#include "modnorm/hmodule.hpp"
#include "modnorm/matcore.hpp"

namespace testing_helpers {

using modnorm::Complex;
using modnorm::ComplexMatrix;
using modnorm::ComplexVector;
using modnorm::ModuleElement;

inline ComplexMatrix diag(std::initializer_list<Complex> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  Eigen::Index i = 0;
  for (Complex v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

inline ModuleElement el(const ComplexMatrix& m) { return ModuleElement(m); }

// Largest singular value by one-sided Jacobi, independent of the library's
// Gram-matrix route.
inline double svd_norm(const ComplexMatrix& a) {
  return Eigen::JacobiSVD<ComplexMatrix>(a).singularValues()(0);
}

inline ComplexVector basis(Eigen::Index n, Eigen::Index i) {
  ComplexVector e = ComplexVector::Zero(n);
  e[i] = 1.0;
  return e;
}

// ρ+ from the definition with a small step and the SVD norm; accurate to
// about 1e-6 for well-conditioned inputs.
inline double quotient(const ModuleElement& x, const ModuleElement& y, double t) {
  const double n0 = svd_norm(x.matrix());
  const double nt = svd_norm(x.matrix() + t * y.matrix());
  return (nt * nt - n0 * n0) / (2.0 * t);
}

}  // namespace testing_helpers
