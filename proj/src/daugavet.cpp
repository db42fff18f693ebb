#include "modnorm/daugavet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modnorm/errors.hpp"

namespace modnorm {

ModuleElement cubic_element(const ModuleElement& x) {
  return module_action(x, inner_product(x, x));
}

RhoCubeReport rho_cube_identity(const ModuleElement& x, double tol) {
  RhoCubeReport out;
  const ModuleElement cube = cubic_element(x);
  const double nx = module_norm(x);
  out.norm4 = std::pow(nx, 4);
  const DerivativePair rho = rho_pair(x, cube);
  out.rho_plus = rho.rho_plus;
  out.rho_minus = rho.rho_minus;
  const double denom = 1.0 + out.norm4;
  out.residual = std::max(std::abs(out.rho_plus - out.norm4),
                          std::abs(out.rho_minus - out.norm4)) / denom;
  if (rho.max_witness) {
    const ComplexMatrix g = inner_product(x, x).matrix();
    const ComplexMatrix g2 = g * g;
    out.face_dim = top_face(x).dim();
    out.max_witness_square = state_value(*rho.max_witness, g2).real();
    out.min_witness_square = state_value(*rho.min_witness, g2).real();
    out.residual = std::max({out.residual,
                             std::abs(*out.max_witness_square - out.norm4) / denom,
                             std::abs(*out.min_witness_square - out.norm4) / denom});
  }
  out.holds = out.residual <= tol;
  return out;
}

ModuleDaugavetReport module_daugavet_check(const ModuleElement& x, double alpha,
                                           double beta, double tol) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    throw InvalidScalars("module_daugavet_check: need alpha > 0 and beta > 0, got " +
                         std::to_string(alpha) + ", " + std::to_string(beta));
  }
  ModuleDaugavetReport out;
  out.alpha = alpha;
  out.beta = beta;
  const ModuleElement cube = cubic_element(x);
  const double nx = module_norm(x);
  out.cube_norm = module_norm(cube);
  out.norm_cubed = nx * nx * nx;
  out.lhs = operator_norm(alpha * x.matrix() + beta * cube.matrix());
  out.rhs = alpha * nx + beta * out.norm_cubed;
  out.residual = std::abs(out.lhs - out.rhs) / (1.0 + out.rhs);
  out.cube_residual = std::abs(out.cube_norm - out.norm_cubed) / (1.0 + out.norm_cubed);
  out.holds = out.residual <= tol && out.cube_residual <= tol;
  return out;
}

OperatorDaugavetReport operator_daugavet_witness(const ComplexMatrix& t,
                                                 double tol) {
  require_finite(t, "operator_daugavet_witness");
  const double nt = operator_norm(t);
  if (nt <= kZeroNorm) {
    throw ZeroOperator("operator_daugavet_witness: T is zero");
  }
  OperatorDaugavetReport out;
  out.norm_t = nt;
  // Top eigenvector of T*T is a top right-singular vector.
  out.witness = hermitian_spectrum(t.adjoint() * t).top_vector();

  const ComplexMatrix ttt = t * t.adjoint() * t;
  out.norm_ttt = operator_norm(ttt);
  out.norm_sum = operator_norm(t + ttt);
  const double nt3 = nt * nt * nt;
  out.sum_residual = std::abs(out.norm_sum - nt - nt3) / (1.0 + nt + nt3);
  out.cube_residual = std::abs(out.norm_ttt - nt3);
  out.attain_t = std::abs((t * out.witness).norm() - nt);
  out.attain_ttt = std::abs((ttt * out.witness).norm() - out.norm_ttt);
  out.direction_gap =
      ((t * out.witness) / nt - (ttt * out.witness) / out.norm_ttt).norm();
  out.holds = out.sum_residual <= tol && out.attain_t <= tol * (1.0 + nt) &&
              out.attain_ttt <= tol * (1.0 + nt3) &&
              out.cube_residual <= tol * (1.0 + nt3) && out.direction_gap <= tol;
  return out;
}

}  // namespace modnorm
