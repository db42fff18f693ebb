#pragma once

// Dense complex matrix kernel. Everything downstream rests on three facts
// computed here: adjoints, Hermitian spectral decompositions and the
// operator (spectral) norm.

#include <complex>

#include <Eigen/Dense>

namespace modnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending.
/// Column i of `eigenvectors` pairs with `eigenvalues[i]`; the columns form a
/// unitary matrix.
struct HermitianSpectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  double largest() const { return eigenvalues[0]; }
  double smallest() const { return eigenvalues[eigenvalues.size() - 1]; }
  ComplexVector top_vector() const { return eigenvectors.col(0); }
  ComplexVector bottom_vector() const {
    return eigenvectors.col(eigenvectors.cols() - 1);
  }
};

inline constexpr double kHermitianTolerance = 1e-10;

ComplexMatrix adjoint(const ComplexMatrix& a);

// Throws NonFiniteInput on NaN/Inf entries.
void require_finite(const ComplexMatrix& a, const char* what);

bool is_finite(const ComplexMatrix& a);

/// Full spectral decomposition of H. Input drift ‖H − H*‖ up to
/// kHermitianTolerance·(1+‖H‖) is removed by symmetrizing; anything larger
/// throws NonHermitianInput.
HermitianSpectrum hermitian_spectrum(const ComplexMatrix& h);

/// Eigenvalues only, descending. Same precondition as hermitian_spectrum.
RealVector hermitian_eigenvalues(const ComplexMatrix& h);

/// (H + H*)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

/// Largest singular value, computed as sqrt(λ_max) of the smaller Gram matrix.
double operator_norm(const ComplexMatrix& a);

/// ‖A‖², without the square root. Used by difference quotients.
double operator_norm_squared(const ComplexMatrix& a);

}  // namespace modnorm
