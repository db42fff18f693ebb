#pragma once

// The Hilbert C*-module M_{m,n}(C) over the algebra M_n(C).
//
// Convention: <x, y> = x* y, linear in the second slot, with the algebra
// acting on the right (x·a is the matrix product). Every quantity computed
// downstream depends only on Re φ(<x, y>), which is symmetric under swapping
// the slots because states satisfy φ(a*) = conj φ(a).

#include <cstddef>

#include "modnorm/matcore.hpp"

namespace modnorm {

/// An n×n complex matrix viewed as an element of the coefficient algebra.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(ComplexMatrix m);

  static AlgebraElement identity(Eigen::Index n);
  static AlgebraElement zero(Eigen::Index n);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  AlgebraElement adjoint() const;

 private:
  ComplexMatrix matrix_;
};

/// An m×n complex matrix viewed as a module element over M_n(C).
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(ComplexMatrix m);

  static ModuleElement zero(Eigen::Index rows, Eigen::Index algebra_dim);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index rows() const { return matrix_.rows(); }
  Eigen::Index algebra_dim() const { return matrix_.cols(); }

  ModuleElement operator+(const ModuleElement& other) const;
  ModuleElement operator-(const ModuleElement& other) const;
  ModuleElement operator-() const;
  friend ModuleElement operator*(Complex c, const ModuleElement& x);

 private:
  ComplexMatrix matrix_;
};

void require_same_shape(const ModuleElement& x, const ModuleElement& y,
                        const char* what);

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y);

double module_norm(const ModuleElement& x);

ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a);

// Elements with norm at or below this are treated as zero by the state
// machinery.
inline constexpr double kZeroNorm = 1e-12;

}  // namespace modnorm
