#include "modnorm/normderiv.hpp"

#include <cmath>
#include <string>

#include "modnorm/errors.hpp"

namespace modnorm {

namespace {

enum class Extreme { kMax, kMin };

DerivativeValue face_extreme(const ModuleElement& x, const ModuleElement& y,
                             Extreme which) {
  require_same_shape(x, y, "rho");
  if (module_norm(x) <= kZeroNorm) return {};
  const TopFace face = top_face(x);
  const ComplexMatrix h = hermitian_part(inner_product(x, y).matrix());
  const HermitianSpectrum spec = hermitian_spectrum(face_compression(face, h));
  if (which == Extreme::kMax) {
    return {spec.largest(), state_from_face_vector(face, spec.top_vector())};
  }
  return {spec.smallest(), state_from_face_vector(face, spec.bottom_vector())};
}

}  // namespace

DerivativeValue rho_plus(const ModuleElement& x, const ModuleElement& y) {
  return face_extreme(x, y, Extreme::kMax);
}

DerivativeValue rho_minus(const ModuleElement& x, const ModuleElement& y) {
  return face_extreme(x, y, Extreme::kMin);
}

DerivativePair rho_pair(const ModuleElement& x, const ModuleElement& y) {
  require_same_shape(x, y, "rho_pair");
  DerivativePair out;
  if (module_norm(x) <= kZeroNorm) return out;
  // One face and one spectrum serve both sides.
  const TopFace face = top_face(x);
  const ComplexMatrix h = hermitian_part(inner_product(x, y).matrix());
  const HermitianSpectrum spec = hermitian_spectrum(face_compression(face, h));
  out.rho_plus = spec.largest();
  out.rho_minus = spec.smallest();
  out.rho_mid = 0.5 * (out.rho_plus + out.rho_minus);
  out.max_witness = state_from_face_vector(face, spec.top_vector());
  out.min_witness = state_from_face_vector(face, spec.bottom_vector());
  return out;
}

double rho_fd(const ModuleElement& x, const ModuleElement& y, Side side,
              double tol) {
  require_same_shape(x, y, "rho_fd");
  const double base = operator_norm_squared(x.matrix());
  const double scale = 1.0 + std::sqrt(base) * module_norm(y);
  const double sign = side == Side::kPlus ? 1.0 : -1.0;

  double previous = 0.0;
  double change = 0.0;
  for (int k = 1; k <= 48; ++k) {
    const double t = sign * std::ldexp(1.0, -k);
    const double moved = operator_norm_squared(x.matrix() + t * y.matrix());
    const double quotient = (moved - base) / (2.0 * t);
    if (k > 1) {
      change = std::abs(quotient - previous);
      if (change < tol * scale) return quotient;
    }
    previous = quotient;
  }
  throw NoConvergence("rho_fd: difference quotients still moving by " +
                      std::to_string(change) + " at t = 2^-48");
}

}  // namespace modnorm
