#include "modnorm/ortho.hpp"

#include <cmath>
#include <string>

#include "modnorm/errors.hpp"
#include "modnorm/normderiv.hpp"
#include "modnorm/numrange.hpp"
#include "modnorm/search.hpp"

namespace modnorm {

namespace {

double pair_scale(const ModuleElement& x, const ModuleElement& y) {
  return 1.0 + module_norm(x) * module_norm(y);
}

bool is_zero(const ModuleElement& x) { return module_norm(x) <= kZeroNorm; }

// x = 0: every state has φ(<x,x>) = 0 = ‖x‖², so e₁e₁* serves as witness.
OrthoReport trivially_true(Relation r, Eigen::Index n, double tol) {
  OrthoReport out;
  out.relation = r;
  out.holds = true;
  out.margin = 0.0;
  out.tol = tol;
  ComplexVector e = ComplexVector::Zero(n);
  e[0] = 1.0;
  out.witness = StateWitness::pure(e);
  return out;
}

// <x,y><y,x>, positive semidefinite.
ComplexMatrix annihilation_target(const ModuleElement& x, const ModuleElement& y) {
  const ComplexMatrix b = inner_product(x, y).matrix();
  return b * b.adjoint();
}

}  // namespace

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::kIp: return "ip";
    case Relation::kBj: return "bj";
    case Relation::kBjReal: return "bj-real";
    case Relation::kBjStrong: return "bj-strong";
    case Relation::kRho: return "rho";
    case Relation::kParallel: return "parallel";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (Relation r : {Relation::kIp, Relation::kBj, Relation::kBjReal,
                     Relation::kBjStrong, Relation::kRho, Relation::kParallel}) {
    if (relation_name(r) == name) return r;
  }
  return std::nullopt;
}

OrthoReport is_ip_orthogonal(const ModuleElement& x, const ModuleElement& y,
                             double tol) {
  OrthoReport out;
  out.relation = Relation::kIp;
  out.tol = tol;
  out.margin = -operator_norm(inner_product(x, y).matrix()) / pair_scale(x, y);
  out.holds = out.margin >= -tol;
  return out;
}

OrthoReport is_bj(const ModuleElement& x, const ModuleElement& y, double tol) {
  require_same_shape(x, y, "is_bj");
  if (is_zero(x)) return trivially_true(Relation::kBj, x.algebra_dim(), tol);
  const TopFace face = top_face(x);
  const ComplexMatrix m = face_compression(face, inner_product(x, y));
  // Rescale so the numerical-range test uses the pair scale 1 + ‖x‖‖y‖.
  const double scale = pair_scale(x, y);
  const double range_tol = tol * scale / (1.0 + operator_norm(m));
  const NumRangeDecision d = zero_in_numrange(m, range_tol);

  OrthoReport out;
  out.relation = Relation::kBj;
  out.tol = tol;
  out.margin = 2.0 * d.min_support / scale;
  out.holds = d.contains;
  if (d.contains && d.certificate) {
    out.witness = state_from_face_vector(face, *d.certificate);
  }
  return out;
}

OrthoReport is_bj_real(const ModuleElement& x, const ModuleElement& y,
                       double tol) {
  require_same_shape(x, y, "is_bj_real");
  if (is_zero(x)) return trivially_true(Relation::kBjReal, x.algebra_dim(), tol);
  const DerivativePair rho = rho_pair(x, y);
  OrthoReport out;
  out.relation = Relation::kBjReal;
  out.tol = tol;
  out.margin = std::min(rho.rho_plus, -rho.rho_minus) / pair_scale(x, y);
  out.holds = out.margin >= -tol;
  if (out.holds) {
    // weight·ρ− + (1 − weight)·ρ+ = 0.
    const double spread = rho.rho_plus - rho.rho_minus;
    const double weight = spread > 0.0 ? rho.rho_plus / spread : 0.0;
    out.witness = StateWitness::mix(*rho.min_witness, *rho.max_witness, weight);
  }
  return out;
}

OrthoReport is_bj_strong(const ModuleElement& x, const ModuleElement& y,
                         double tol) {
  require_same_shape(x, y, "is_bj_strong");
  if (is_zero(x)) return trivially_true(Relation::kBjStrong, x.algebra_dim(), tol);
  const TopFace face = top_face(x);
  const HermitianSpectrum spec =
      hermitian_spectrum(face_compression(face, annihilation_target(x, y)));
  const double nx = module_norm(x);
  const double ny = module_norm(y);
  OrthoReport out;
  out.relation = Relation::kBjStrong;
  out.tol = tol;
  out.margin = -spec.smallest() / (1.0 + nx * nx * ny * ny);
  out.holds = out.margin >= -tol;
  if (out.holds) {
    out.witness = state_from_face_vector(face, spec.bottom_vector());
  }
  return out;
}

OrthoReport is_rho_orthogonal(const ModuleElement& x, const ModuleElement& y,
                              double tol) {
  require_same_shape(x, y, "is_rho_orthogonal");
  const DerivativePair rho = rho_pair(x, y);
  OrthoReport out;
  out.relation = Relation::kRho;
  out.tol = tol;
  out.margin = -std::abs(rho.rho_plus + rho.rho_minus) / pair_scale(x, y);
  out.holds = out.margin >= -tol;
  return out;
}

OrthoReport is_norm_parallel(const ModuleElement& x, const ModuleElement& y,
                             double tol) {
  require_same_shape(x, y, "is_norm_parallel");
  const ComplexMatrix& a = x.matrix();
  const ComplexMatrix& b = y.matrix();
  const ScalarMinimum best = minimize_on_circle(
      [&](double theta) {
        return -operator_norm(a + std::polar(1.0, theta) * b);
      },
      kAngleGrid, kAngleWidth);
  const double nx = module_norm(x);
  const double ny = module_norm(y);
  OrthoReport out;
  out.relation = Relation::kParallel;
  out.tol = tol;
  out.margin = (-best.value - (nx + ny)) / (1.0 + nx + ny);
  out.holds = out.margin >= -tol;
  if (out.holds) out.witness = std::polar(1.0, best.argument);
  return out;
}

OrthoReport decide(Relation r, const ModuleElement& x, const ModuleElement& y,
                   double tol) {
  switch (r) {
    case Relation::kIp: return is_ip_orthogonal(x, y, tol);
    case Relation::kBj: return is_bj(x, y, tol);
    case Relation::kBjReal: return is_bj_real(x, y, tol);
    case Relation::kBjStrong: return is_bj_strong(x, y, tol);
    case Relation::kRho: return is_rho_orthogonal(x, y, tol);
    case Relation::kParallel: return is_norm_parallel(x, y, tol);
  }
  throw PreconditionFailed("unknown relation");
}

double m_lower_bound(const ModuleElement& y) {
  return hermitian_spectrum(inner_product(y, y).matrix()).smallest();
}

ComplexVector bhatia_semrl_witness(const ModuleElement& x, const ModuleElement& y,
                                   BjVariant variant, double tol) {
  require_same_shape(x, y, "bhatia_semrl_witness");
  const Eigen::Index n = x.algebra_dim();
  if (is_zero(x)) {
    ComplexVector e = ComplexVector::Zero(n);
    e[0] = 1.0;
    return e;
  }
  const TopFace face = top_face(x);
  const ComplexMatrix m = face_compression(face, inner_product(x, y));
  const double scale = pair_scale(x, y);

  if (variant == BjVariant::kComplex) {
    const NumRangeDecision d =
        zero_in_numrange(m, tol * scale / (1.0 + operator_norm(m)));
    if (!d.contains || !d.certificate) {
      throw PreconditionFailed("bhatia_semrl_witness: x is not BJ-orthogonal to y");
    }
    return face.isometry * *d.certificate;
  }

  const ComplexMatrix h = hermitian_part(m);
  const HermitianSpectrum spec = hermitian_spectrum(h);
  if (spec.largest() < -tol * scale || spec.smallest() > tol * scale) {
    throw PreconditionFailed(
        "bhatia_semrl_witness: x is not real BJ-orthogonal to y");
  }
  // Clip a tolerated sign violation so the null-vector construction applies.
  ComplexMatrix clipped = h;
  if (spec.largest() < 0.0) {
    clipped -= spec.largest() * ComplexMatrix::Identity(h.rows(), h.cols());
  } else if (spec.smallest() > 0.0) {
    clipped -= spec.smallest() * ComplexMatrix::Identity(h.rows(), h.cols());
  }
  return face.isometry * hermitian_null_vector(clipped);
}

}  // namespace modnorm
