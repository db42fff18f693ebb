#pragma once

// Seeded random instances for property checks.
//
// Draws go through mt19937_64, whose output sequence is fixed by the
// standard, and explicit Box–Muller, so a seed yields the same instances on
// every platform.

#include <cstdint>
#include <random>
#include <string_view>

#include "modnorm/stateface.hpp"

namespace modnorm::verify {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double gaussian();
  Complex complex_gaussian();  // E|z|² = 1
  Complex unit_phase();
  int integer(int lo, int hi);  // inclusive

  ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
  ComplexMatrix unitary(Eigen::Index n);
  ModuleElement element(Eigen::Index rows, Eigen::Index cols);
  // Exactly repeated top singular value (multiplicity 2) by construction.
  // Needs rows, cols ≥ 2.
  ModuleElement degenerate_element(Eigen::Index rows, Eigen::Index cols);
  StateWitness density(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
};

enum class PairKind {
  kGeneric,
  kDegenerateFace,  // x has a two-dimensional top face
  kInnerOrthogonal,  // <x, y> = 0
  kBjOrthogonal,  // y shifted along x so some face state kills <x, y>
  kBjRealOrthogonal,
  kStrongBj,  // y orthogonal to x·v for a top vector v
  kRhoOrthogonal,  // y shifted along x so ρ+ + ρ− = 0
};

inline constexpr PairKind kAllPairKinds[] = {
    PairKind::kGeneric,       PairKind::kDegenerateFace,
    PairKind::kInnerOrthogonal, PairKind::kBjOrthogonal,
    PairKind::kBjRealOrthogonal, PairKind::kStrongBj,
    PairKind::kRhoOrthogonal};

std::string_view pair_kind_name(PairKind kind);

struct PairInstance {
  PairKind kind = PairKind::kGeneric;
  ModuleElement x;
  ModuleElement y;
};

/// Shapes are drawn with rows, cols in [min_dim, max_dim]; kinds that need
/// more room (degenerate faces, <x,y> = 0) adjust within that range.
PairInstance random_pair(Sampler& s, PairKind kind, int min_dim, int max_dim);

/// Element with top-face dimension ≥ 2 and dims in [max(2,min_dim), max_dim].
ModuleElement random_degenerate(Sampler& s, int min_dim, int max_dim);

}  // namespace modnorm::verify
