#include "modnorm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "modnorm/normderiv.hpp"

namespace modnorm::verify {

double Sampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Sampler::gaussian() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Sampler::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) * std::sqrt(0.5);
}

Complex Sampler::unit_phase() {
  return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

int Sampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

ComplexMatrix Sampler::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
  }
  return m;
}

ComplexMatrix Sampler::unitary(Eigen::Index n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(gaussian_matrix(n, n));
  return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ModuleElement Sampler::element(Eigen::Index rows, Eigen::Index cols) {
  return ModuleElement(gaussian_matrix(rows, cols));
}

ModuleElement Sampler::degenerate_element(Eigen::Index rows, Eigen::Index cols) {
  const Eigen::Index r = std::min(rows, cols);
  const ComplexMatrix u = unitary(rows);
  const ComplexMatrix w = unitary(cols);
  RealVector s(r);
  s[0] = 1.0 + 2.0 * uniform();
  s[1] = s[0];
  for (Eigen::Index i = 2; i < r; ++i) s[i] = s[0] * (0.05 + 0.75 * uniform());
  const ComplexMatrix sigma = s.cast<Complex>().asDiagonal();
  return ModuleElement(u.leftCols(r) * sigma * w.leftCols(r).adjoint());
}

StateWitness Sampler::density(Eigen::Index n) {
  const ComplexMatrix g = gaussian_matrix(n, n);
  ComplexMatrix p = g * g.adjoint();
  p /= p.trace().real();
  return StateWitness(hermitian_part(p));
}

std::string_view pair_kind_name(PairKind kind) {
  switch (kind) {
    case PairKind::kGeneric: return "generic";
    case PairKind::kDegenerateFace: return "degenerate-face";
    case PairKind::kInnerOrthogonal: return "inner-orthogonal";
    case PairKind::kBjOrthogonal: return "bj-orthogonal";
    case PairKind::kBjRealOrthogonal: return "bj-real-orthogonal";
    case PairKind::kStrongBj: return "strong-bj";
    case PairKind::kRhoOrthogonal: return "rho-orthogonal";
  }
  return "?";
}

ModuleElement random_degenerate(Sampler& s, int min_dim, int max_dim) {
  const int lo = std::max(2, min_dim);
  const int hi = std::max(lo, max_dim);
  return s.degenerate_element(s.integer(lo, hi), s.integer(lo, hi));
}

namespace {

// Some state on the face of x, drawn as a random mixture of the two
// extremal ρ witnesses for a random direction.
StateWitness some_face_state(Sampler& s, const ModuleElement& x) {
  const ModuleElement probe = s.element(x.rows(), x.algebra_dim());
  const DerivativePair rho = rho_pair(x, probe);
  return StateWitness::mix(*rho.max_witness, *rho.min_witness, s.uniform());
}

}  // namespace

PairInstance random_pair(Sampler& s, PairKind kind, int min_dim, int max_dim) {
  PairInstance out;
  out.kind = kind;
  int m = s.integer(min_dim, max_dim);
  const int n = s.integer(min_dim, max_dim);
  // With a single row these constructions collapse y to rounding noise.
  if (kind == PairKind::kStrongBj || kind == PairKind::kBjOrthogonal) {
    m = std::max(m, std::min(2, max_dim));
  }

  switch (kind) {
    case PairKind::kGeneric:
      out.x = s.element(m, n);
      out.y = s.element(m, n);
      break;
    case PairKind::kDegenerateFace:
      out.x = random_degenerate(s, min_dim, max_dim);
      out.y = s.element(out.x.rows(), out.x.algebra_dim());
      break;
    case PairKind::kInnerOrthogonal: {
      // Needs rows > cols so the range of x has a complement.
      const int cols = s.integer(min_dim, std::max(min_dim, max_dim - 1));
      const int rows = s.integer(std::min(cols + 1, max_dim), max_dim);
      out.x = s.element(std::max(rows, cols + 1), cols);
      const ComplexMatrix& a = out.x.matrix();
      Eigen::HouseholderQR<ComplexMatrix> qr(a);
      const ComplexMatrix q = qr.householderQ() *
                              ComplexMatrix::Identity(a.rows(), a.cols());
      const ComplexMatrix g = s.gaussian_matrix(a.rows(), a.cols());
      out.y = ModuleElement(g - q * (q.adjoint() * g));
      break;
    }
    case PairKind::kBjOrthogonal:
    case PairKind::kBjRealOrthogonal: {
      out.x = s.uniform() < 0.5 ? s.element(m, n)
                                : random_degenerate(s, min_dim, max_dim);
      ModuleElement y = s.element(out.x.rows(), out.x.algebra_dim());
      const StateWitness p = some_face_state(s, out.x);
      Complex mu = state_value(p, inner_product(out.x, y));
      if (kind == PairKind::kBjRealOrthogonal) mu = mu.real();
      const double lambda = operator_norm_squared(out.x.matrix());
      out.y = y - (mu / lambda) * out.x;
      break;
    }
    case PairKind::kStrongBj: {
      out.x = s.element(m, n);
      const HermitianSpectrum spec =
          hermitian_spectrum(inner_product(out.x, out.x).matrix());
      ComplexVector u = out.x.matrix() * spec.top_vector();
      u /= u.norm();
      const ComplexMatrix g = s.gaussian_matrix(m, n);
      out.y = ModuleElement(g - u * (u.adjoint() * g));
      break;
    }
    case PairKind::kRhoOrthogonal: {
      out.x = s.element(m, n);
      const ModuleElement y = s.element(m, n);
      const DerivativePair rho = rho_pair(out.x, y);
      const double lambda = operator_norm_squared(out.x.matrix());
      out.y = y - Complex(rho.rho_mid / lambda) * out.x;
      break;
    }
  }
  return out;
}

}  // namespace modnorm::verify
