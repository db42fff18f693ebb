#include "modnorm/hmodule.hpp"

#include <string>
#include <utility>

#include "modnorm/errors.hpp"

namespace modnorm {

namespace {

std::string shape_of(const ComplexMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

AlgebraElement::AlgebraElement(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw ShapeMismatch("algebra element must be a non-empty square matrix, got " +
                        shape_of(matrix_));
  }
  require_finite(matrix_, "AlgebraElement");
}

AlgebraElement AlgebraElement::identity(Eigen::Index n) {
  return AlgebraElement(ComplexMatrix::Identity(n, n));
}

AlgebraElement AlgebraElement::zero(Eigen::Index n) {
  return AlgebraElement(ComplexMatrix::Zero(n, n));
}

AlgebraElement AlgebraElement::adjoint() const {
  return AlgebraElement(matrix_.adjoint());
}

ModuleElement::ModuleElement(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() == 0 || matrix_.cols() == 0) {
    throw ShapeMismatch("module element must be non-empty, got " +
                        shape_of(matrix_));
  }
  require_finite(matrix_, "ModuleElement");
}

ModuleElement ModuleElement::zero(Eigen::Index rows, Eigen::Index algebra_dim) {
  return ModuleElement(ComplexMatrix::Zero(rows, algebra_dim));
}

ModuleElement ModuleElement::operator+(const ModuleElement& other) const {
  require_same_shape(*this, other, "module sum");
  return ModuleElement(matrix_ + other.matrix_);
}

ModuleElement ModuleElement::operator-(const ModuleElement& other) const {
  require_same_shape(*this, other, "module difference");
  return ModuleElement(matrix_ - other.matrix_);
}

ModuleElement ModuleElement::operator-() const { return ModuleElement(-matrix_); }

ModuleElement operator*(Complex c, const ModuleElement& x) {
  return ModuleElement(c * x.matrix_);
}

void require_same_shape(const ModuleElement& x, const ModuleElement& y,
                        const char* what) {
  if (x.rows() != y.rows() || x.algebra_dim() != y.algebra_dim()) {
    throw ShapeMismatch(std::string(what) + ": shapes " +
                        shape_of(x.matrix()) + " and " +
                        shape_of(y.matrix()) + " differ");
  }
}

AlgebraElement inner_product(const ModuleElement& x, const ModuleElement& y) {
  require_same_shape(x, y, "inner_product");
  return AlgebraElement(x.matrix().adjoint() * y.matrix());
}

double module_norm(const ModuleElement& x) { return operator_norm(x.matrix()); }

ModuleElement module_action(const ModuleElement& x, const AlgebraElement& a) {
  if (x.algebra_dim() != a.dim()) {
    throw ShapeMismatch("module_action: element over M_" +
                        std::to_string(x.algebra_dim()) +
                        " acted on by an element of M_" +
                        std::to_string(a.dim()));
  }
  return ModuleElement(x.matrix() * a.matrix());
}

}  // namespace modnorm
