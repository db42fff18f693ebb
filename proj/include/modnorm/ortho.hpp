#pragma once

// Decision procedures for orthogonality and parallelism of module elements.
//
//   IP         <x, y> = 0
//   BJ         ‖x‖ ≤ ‖x + λy‖ for all complex λ
//   BJ_REAL    ‖x‖ ≤ ‖x + αy‖ for all real α
//   BJ_STRONG  ‖x‖ ≤ ‖x + y·a‖ for all a in the algebra
//   RHO        ρ+(x, y) + ρ−(x, y) = 0
//   PARALLEL   ‖x + ξy‖ = ‖x‖ + ‖y‖ for some complex unit ξ
//
// Each report carries a signed margin normalized so that holds ⇔ margin ≥ −tol.

#include <optional>
#include <string_view>
#include <variant>

#include "modnorm/stateface.hpp"

namespace modnorm {

inline constexpr double kDefaultOrthoTolerance = 1e-9;

enum class Relation { kIp, kBj, kBjReal, kBjStrong, kRho, kParallel };

std::string_view relation_name(Relation r);  // "ip", "bj", "bj-real", ...
std::optional<Relation> parse_relation(std::string_view name);

// A state for the BJ family, a complex unit ξ for PARALLEL.
using OrthoWitness = std::variant<std::monostate, StateWitness, Complex>;

struct OrthoReport {
  Relation relation = Relation::kIp;
  bool holds = false;
  double margin = 0.0;
  double tol = kDefaultOrthoTolerance;
  OrthoWitness witness;

  const StateWitness* state() const { return std::get_if<StateWitness>(&witness); }
  const Complex* unit() const { return std::get_if<Complex>(&witness); }
};

OrthoReport is_ip_orthogonal(const ModuleElement& x, const ModuleElement& y,
                             double tol = kDefaultOrthoTolerance);

/// Holds iff some state φ with φ(<x,x>) = ‖x‖² has φ(<x,y>) = 0, i.e. iff 0
/// lies in the numerical range of V*<x,y>V.
OrthoReport is_bj(const ModuleElement& x, const ModuleElement& y,
                  double tol = kDefaultOrthoTolerance);

/// Holds iff ρ−(x,y) ≤ 0 ≤ ρ+(x,y). The witness mixes the extremal states so
/// that Re φ(<x,y>) = 0.
OrthoReport is_bj_real(const ModuleElement& x, const ModuleElement& y,
                       double tol = kDefaultOrthoTolerance);

/// Holds iff some face state annihilates the positive element
/// <x,y><y,x>, i.e. λ_min(V*<x,y><y,x>V) ≈ 0. Cauchy–Schwarz then gives
/// Re φ(<x, y·a>) = 0 for every a.
OrthoReport is_bj_strong(const ModuleElement& x, const ModuleElement& y,
                         double tol = kDefaultOrthoTolerance);

OrthoReport is_rho_orthogonal(const ModuleElement& x, const ModuleElement& y,
                              double tol = kDefaultOrthoTolerance);

/// Maximizes ‖x + e^{iθ}y‖ over θ (720-point grid plus golden section).
OrthoReport is_norm_parallel(const ModuleElement& x, const ModuleElement& y,
                             double tol = kDefaultOrthoTolerance);

OrthoReport decide(Relation r, const ModuleElement& x, const ModuleElement& y,
                   double tol = kDefaultOrthoTolerance);

/// inf over states of φ(<y,y>) = λ_min(<y,y>).
double m_lower_bound(const ModuleElement& y);

enum class BjVariant { kComplex, kReal };

/// Unit vector v with ‖Xv‖ = ‖X‖ and <Xv, Yv> = 0 (kComplex) or
/// Re <Xv, Yv> = 0 (kReal). Throws PreconditionFailed when the corresponding
/// BJ relation does not hold at `tol`.
ComplexVector bhatia_semrl_witness(const ModuleElement& x, const ModuleElement& y,
                                   BjVariant variant = BjVariant::kComplex,
                                   double tol = kDefaultOrthoTolerance);

}  // namespace modnorm
