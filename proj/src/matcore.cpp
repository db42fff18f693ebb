#include "modnorm/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modnorm/errors.hpp"

namespace modnorm {

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

bool is_finite(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Complex z = a(i, j);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
  }
  return true;
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!is_finite(a)) {
    throw NonFiniteInput(std::string(what) + ": matrix has non-finite entries");
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return (a + a.adjoint()) * 0.5;
}

namespace {

double largest_gram_eigenvalue(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  ComplexMatrix gram = a.rows() < a.cols() ? ComplexMatrix(a * a.adjoint())
                                           : ComplexMatrix(a.adjoint() * a);
  gram = hermitian_part(gram);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram,
                                                      Eigen::EigenvaluesOnly);
  return std::max(0.0, solver.eigenvalues().maxCoeff());
}

// Symmetrizes h after checking ‖H − H*‖ ≤ tol·(1+‖H‖). The Frobenius bound is
// tried first since it needs no factorization.
ComplexMatrix checked_symmetrize(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) {
    throw ShapeMismatch("hermitian_spectrum: matrix is " +
                        std::to_string(h.rows()) + "x" +
                        std::to_string(h.cols()) + ", expected square");
  }
  require_finite(h, "hermitian_spectrum");
  const ComplexMatrix skew = h - h.adjoint();
  const double skew_fro = skew.norm();
  const double n = static_cast<double>(std::max<Eigen::Index>(h.rows(), 1));
  if (skew_fro <= kHermitianTolerance * (1.0 + h.norm() / std::sqrt(n))) {
    return hermitian_part(h);
  }
  const double skew_norm = std::sqrt(largest_gram_eigenvalue(skew));
  const double h_norm = std::sqrt(largest_gram_eigenvalue(h));
  if (skew_norm > kHermitianTolerance * (1.0 + h_norm)) {
    throw NonHermitianInput("hermitian_spectrum: ||H - H*|| = " +
                            std::to_string(skew_norm) +
                            " exceeds tolerance");
  }
  return hermitian_part(h);
}

}  // namespace

HermitianSpectrum hermitian_spectrum(const ComplexMatrix& h) {
  const ComplexMatrix sym = checked_symmetrize(h);
  HermitianSpectrum out;
  if (sym.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  // Eigen sorts ascending.
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  const ComplexMatrix sym = checked_symmetrize(h);
  if (sym.size() == 0) return RealVector();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

double operator_norm_squared(const ComplexMatrix& a) {
  return largest_gram_eigenvalue(a);
}

double operator_norm(const ComplexMatrix& a) {
  return std::sqrt(largest_gram_eigenvalue(a));
}

}  // namespace modnorm
