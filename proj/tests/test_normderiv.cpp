#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/normderiv.hpp"
#include "modnorm/sampler.hpp"

using namespace modnorm;
using namespace testing_helpers;

namespace {
const ModuleElement kT = el(ComplexMatrix::Identity(2, 2));
const ModuleElement kS = el(diag({-1.0, 1.0}));
const ModuleElement kR = el(diag({-1.0, 0.0}));
}  // namespace

TEST(Rho, RemarkValues) {
  EXPECT_NEAR(rho_plus(kT, kS).value, 1.0, 1e-12);
  EXPECT_NEAR(rho_minus(kT, kS).value, -1.0, 1e-12);
  EXPECT_NEAR(rho_plus(kT, kR).value, 0.0, 1e-12);
  EXPECT_NEAR(rho_minus(kT, kR).value, -1.0, 1e-12);
  const DerivativePair p = rho_pair(kT, kS);
  EXPECT_NEAR(p.rho_mid, 0.0, 1e-12);
}

TEST(Rho, ZeroElement) {
  const ModuleElement zero = ModuleElement::zero(2, 2);
  const DerivativeValue v = rho_plus(zero, kS);
  EXPECT_EQ(v.value, 0.0);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_NEAR(rho_fd(zero, kS, Side::kPlus), 0.0, kFiniteDifferenceTolerance);
}

TEST(Rho, SelfDerivativeIsNormSquared) {
  verify::Sampler s(41);
  for (int trial = 0; trial < 30; ++trial) {
    const ModuleElement x = s.element(s.integer(1, 6), s.integer(1, 6));
    const double n2 = std::pow(svd_norm(x.matrix()), 2);
    const DerivativePair p = rho_pair(x, x);
    EXPECT_NEAR(p.rho_plus, n2, 1e-9 * (1.0 + n2));
    EXPECT_NEAR(p.rho_minus, n2, 1e-9 * (1.0 + n2));
    EXPECT_NEAR(rho_fd(x, x, Side::kPlus), n2, 1e-5 * (1.0 + n2));
  }
}

// The closed form is checked against the definition evaluated with the
// Jacobi SVD norm, and against random face states (which can only
// undershoot the maximum).
TEST(Rho, MatchesDefinitionAndBoundsFaceStates) {
  verify::Sampler s(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index m = s.integer(1, 6), n = s.integer(1, 6);
    const ModuleElement x = s.element(m, n);
    const ModuleElement y = s.element(m, n);
    const double sc = 1.0 + svd_norm(x.matrix()) * svd_norm(y.matrix());
    const DerivativePair p = rho_pair(x, y);
    EXPECT_NEAR(quotient(x, y, 1e-7), p.rho_plus, 1e-5 * sc);
    EXPECT_NEAR(quotient(x, y, -1e-7), p.rho_minus, 1e-5 * sc);
    EXPECT_NEAR(p.rho_mid, 0.5 * (p.rho_plus + p.rho_minus), 1e-12 * sc);

    const ComplexMatrix xy = inner_product(x, y).matrix();
    const ComplexMatrix xx = inner_product(x, x).matrix();
    ASSERT_TRUE(p.max_witness && p.min_witness);
    EXPECT_NEAR(state_value(*p.max_witness, xy).real(), p.rho_plus, 1e-9 * sc);
    EXPECT_NEAR(state_value(*p.min_witness, xy).real(), p.rho_minus, 1e-9 * sc);
    EXPECT_NEAR(state_value(*p.max_witness, xx).real(), std::pow(module_norm(x), 2),
                1e-8 * sc);
  }
}

TEST(Rho, DegenerateFaceUsesTheWholeFace) {
  verify::Sampler s(47);
  for (int trial = 0; trial < 40; ++trial) {
    const ModuleElement x = verify::random_degenerate(s, 2, 6);
    const ModuleElement y = s.element(x.rows(), x.algebra_dim());
    const double sc = 1.0 + module_norm(x) * module_norm(y);
    const DerivativePair p = rho_pair(x, y);
    EXPECT_NEAR(quotient(x, y, 1e-7), p.rho_plus, 1e-5 * sc);
    EXPECT_NEAR(quotient(x, y, -1e-7), p.rho_minus, 1e-5 * sc);
  }
}

TEST(RhoFd, RemarkAndBracketing) {
  EXPECT_NEAR(rho_fd(kT, kR, Side::kPlus), 0.0, 1e-6);
  // Stopping error is bounded by tol·(1 + ‖x‖‖y‖) = 2e-6 here.
  EXPECT_NEAR(rho_fd(kT, kR, Side::kMinus), -1.0, 2e-6);
  verify::Sampler s(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index m = s.integer(1, 6), n = s.integer(1, 6);
    const ModuleElement x = s.element(m, n);
    const ModuleElement y = s.element(m, n);
    const double sc = 1.0 + module_norm(x) * module_norm(y);
    const DerivativePair p = rho_pair(x, y);
    const double plus = rho_fd(x, y, Side::kPlus);
    const double minus = rho_fd(x, y, Side::kMinus);
    EXPECT_NEAR(plus, p.rho_plus, 1e-5 * sc);
    EXPECT_NEAR(minus, p.rho_minus, 1e-5 * sc);
    EXPECT_GE(plus, p.rho_plus - 1e-9 * sc);
    EXPECT_LE(minus, p.rho_minus + 1e-9 * sc);
  }
}

TEST(Rho, PropertiesP2ToP4) {
  verify::Sampler s(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index m = s.integer(1, 6), n = s.integer(1, 6);
    const ModuleElement x = s.element(m, n);
    const ModuleElement y = s.element(m, n);
    const double nx = module_norm(x), ny = module_norm(y);
    const double sc = 1.0 + nx * ny;
    const DerivativePair p = rho_pair(x, y);

    EXPECT_NEAR(rho_plus(-x, y).value, -p.rho_minus, 1e-9 * sc);
    EXPECT_NEAR(rho_plus(x, -y).value, -p.rho_minus, 1e-9 * sc);
    EXPECT_NEAR(rho_minus(x, -y).value, -p.rho_plus, 1e-9 * sc);

    const Complex alpha = 3.0 * s.complex_gaussian();
    EXPECT_NEAR(rho_plus(x, alpha * x + y).value, alpha.real() * nx * nx + p.rho_plus,
                1e-8 * (1.0 + std::abs(alpha) * nx * nx + sc));

    const Complex a = s.complex_gaussian(), b = s.complex_gaussian();
    const Complex phase = std::polar(1.0, std::arg(b) - std::arg(a));
    EXPECT_NEAR(rho_plus(a * x, b * y).value,
                std::abs(a * b) * rho_plus(x, phase * y).value,
                1e-8 * (1.0 + std::abs(a * b) * sc));
  }
}

TEST(Rho, ShapeMismatch) {
  EXPECT_THROW(rho_pair(ModuleElement::zero(2, 2), ModuleElement::zero(2, 3)),
               ShapeMismatch);
}
