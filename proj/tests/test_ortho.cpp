#include <gtest/gtest.h>

#include <cmath>

#include "helpers.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/oracles.hpp"
#include "modnorm/ortho.hpp"
#include "modnorm/sampler.hpp"

using namespace modnorm;
using namespace testing_helpers;

namespace {
const ModuleElement kT = el(ComplexMatrix::Identity(2, 2));
const ModuleElement kS = el(diag({-1.0, 1.0}));
const ModuleElement kR = el(diag({-1.0, 0.0}));

ModuleElement column(Complex a, Complex b) {
  ComplexMatrix m(2, 1);
  m << a, b;
  return el(m);
}
}  // namespace

TEST(Relations, RemarkTable) {
  EXPECT_TRUE(is_rho_orthogonal(kT, kS).holds);
  EXPECT_FALSE(is_ip_orthogonal(kT, kS).holds);
  EXPECT_FALSE(is_rho_orthogonal(kT, kR).holds);
  EXPECT_TRUE(is_bj_real(kT, kR).holds);
  EXPECT_FALSE(is_bj_strong(kT, kS).holds);
  EXPECT_TRUE(is_bj_strong(kT, kR).holds);
  EXPECT_TRUE(is_bj(kT, kR).holds);
}

TEST(Relations, ComplexPlaneExample) {
  const ModuleElement x = column(1.0, 0.0);
  const ModuleElement y = column(Complex(0.0, 1.0), 0.0);
  EXPECT_FALSE(is_bj(x, y).holds);
  EXPECT_TRUE(is_bj_real(x, y).holds);
  EXPECT_NEAR(module_norm(x + Complex(0.0, 1.0) * y), 0.0, 1e-15);
}

TEST(Relations, TrivialCases) {
  verify::Sampler s(61);
  const ModuleElement x = s.element(3, 2);
  const ModuleElement zero = ModuleElement::zero(3, 2);
  for (Relation r : {Relation::kIp, Relation::kBj, Relation::kBjReal, Relation::kBjStrong,
                     Relation::kRho}) {
    EXPECT_TRUE(decide(r, x, zero).holds) << relation_name(r);
    EXPECT_TRUE(decide(r, zero, x).holds) << relation_name(r);
  }
  EXPECT_FALSE(is_bj_real(x, x).holds);
  EXPECT_TRUE(is_ip_orthogonal(column(1.0, 0.0), column(0.0, 1.0)).holds);
}

TEST(Relations, WitnessesForTrueReports) {
  const OrthoReport bj = is_bj(kT, kR);
  ASSERT_NE(bj.state(), nullptr);
  EXPECT_NEAR(std::abs(state_value(*bj.state(), inner_product(kT, kR))), 0.0, 1e-9);
  const OrthoReport real = is_bj_real(kT, kR);
  ASSERT_NE(real.state(), nullptr);
  EXPECT_NEAR(state_value(*real.state(), inner_product(kT, kR)).real(), 0.0, 1e-9);
  const OrthoReport strong = is_bj_strong(kT, kR);
  ASSERT_NE(strong.state(), nullptr);
  const ComplexMatrix b = inner_product(kT, kR).matrix();
  EXPECT_NEAR(std::abs(state_value(*strong.state(), b * b.adjoint())), 0.0, 1e-9);

  const OrthoReport zero = is_bj(ModuleElement::zero(2, 2), kS);
  EXPECT_NE(zero.state(), nullptr);
}

TEST(Relations, HoldsMatchesMargin) {
  verify::Sampler s(67);
  for (int trial = 0; trial < 70; ++trial) {
    const verify::PairInstance p =
        verify::random_pair(s, verify::kAllPairKinds[trial % 7], 1, 5);
    for (Relation r : {Relation::kIp, Relation::kBj, Relation::kBjReal, Relation::kBjStrong,
                       Relation::kRho, Relation::kParallel}) {
      const OrthoReport rep = decide(r, p.x, p.y);
      EXPECT_EQ(rep.holds, rep.margin >= -rep.tol) << relation_name(r);
    }
  }
}

TEST(Relations, ConstructedInstancesHold) {
  verify::Sampler s(71);
  using verify::PairKind;
  for (int trial = 0; trial < 20; ++trial) {
    const auto ip = verify::random_pair(s, PairKind::kInnerOrthogonal, 1, 6);
    EXPECT_TRUE(is_ip_orthogonal(ip.x, ip.y).holds);
    const auto bj = verify::random_pair(s, PairKind::kBjOrthogonal, 1, 6);
    EXPECT_TRUE(is_bj(bj.x, bj.y).holds);
    const auto real = verify::random_pair(s, PairKind::kBjRealOrthogonal, 1, 6);
    EXPECT_TRUE(is_bj_real(real.x, real.y).holds);
    const auto strong = verify::random_pair(s, PairKind::kStrongBj, 1, 6);
    EXPECT_TRUE(is_bj_strong(strong.x, strong.y).holds);
    const auto rho = verify::random_pair(s, PairKind::kRhoOrthogonal, 1, 6);
    EXPECT_TRUE(is_rho_orthogonal(rho.x, rho.y).holds);
  }
}

// A FALSE BJ certificate comes with an angle; stepping along it must
// shrink ‖x + λy‖ below ‖x‖, which checks the decision against the norm.
TEST(Relations, BjFalseIsExhibitedByAShortStep) {
  verify::Sampler s(73);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const ModuleElement x = s.element(s.integer(2, 5), s.integer(2, 5));
    const ModuleElement y = s.element(x.rows(), x.algebra_dim());
    if (is_bj(x, y).holds) continue;
    const verify::OracleVerdict v = verify::bj_grid_oracle(x, y, 4.0, 64, 0.0);
    EXPECT_LT(v.best_norm, svd_norm(x.matrix()));
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(Parallel, Examples) {
  const OrthoReport same = is_norm_parallel(kS, kS);
  EXPECT_TRUE(same.holds);
  ASSERT_NE(same.unit(), nullptr);
  EXPECT_NEAR(std::abs(*same.unit() - Complex(1.0)), 0.0, 1e-6);

  const OrthoReport apart = is_norm_parallel(el(diag({1.0, 0.0})), el(diag({0.0, 1.0})));
  EXPECT_FALSE(apart.holds);
  EXPECT_EQ(apart.unit(), nullptr);

  // y = -x is parallel with ξ = -1.
  const OrthoReport neg = is_norm_parallel(kS, -kS);
  ASSERT_TRUE(neg.holds);
  EXPECT_NEAR(std::abs(*neg.unit() + Complex(1.0)), 0.0, 1e-6);
}

TEST(MLowerBound, Examples) {
  EXPECT_NEAR(m_lower_bound(kS), 1.0, 1e-14);
  EXPECT_NEAR(m_lower_bound(kR), 0.0, 1e-14);
  EXPECT_NEAR(m_lower_bound(ModuleElement::zero(2, 2)), 0.0, 1e-14);
}

TEST(BhatiaSemrl, Examples) {
  const ComplexVector v = bhatia_semrl_witness(kT, kR);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs((kT.matrix() * v).dot(kR.matrix() * v)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(v[1]), 1.0, 1e-6);

  const ComplexVector w = bhatia_semrl_witness(kT, kS);
  EXPECT_NEAR(std::abs((kT.matrix() * w).dot(kS.matrix() * w)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(w[0]), std::sqrt(0.5), 1e-6);
  EXPECT_NEAR(std::abs(w[1]), std::sqrt(0.5), 1e-6);

  EXPECT_THROW(bhatia_semrl_witness(kT, kT), PreconditionFailed);
  const ModuleElement x = column(1.0, 0.0);
  const ModuleElement y = column(Complex(0.0, 1.0), 0.0);
  EXPECT_THROW(bhatia_semrl_witness(x, y), PreconditionFailed);
  const ComplexVector r = bhatia_semrl_witness(x, y, BjVariant::kReal);
  EXPECT_NEAR(((x.matrix() * r).dot(y.matrix() * r)).real(), 0.0, 1e-9);
}

TEST(BhatiaSemrl, ZeroDirectionGivesTopSingularVector) {
  verify::Sampler s(79);
  const ModuleElement x = s.element(4, 3);
  const ComplexVector v = bhatia_semrl_witness(x, ModuleElement::zero(4, 3));
  EXPECT_NEAR((x.matrix() * v).norm(), svd_norm(x.matrix()), 1e-9);
}

TEST(Relations, ParseNames) {
  for (Relation r : {Relation::kIp, Relation::kBj, Relation::kBjReal, Relation::kBjStrong,
                     Relation::kRho, Relation::kParallel}) {
    EXPECT_EQ(parse_relation(relation_name(r)), r);
  }
  EXPECT_FALSE(parse_relation("orthogonal").has_value());
}

TEST(Relations, ShapeMismatch) {
  EXPECT_THROW(is_bj(kT, el(ComplexMatrix::Zero(2, 3))), ShapeMismatch);
  EXPECT_THROW(is_ip_orthogonal(kT, el(ComplexMatrix::Zero(3, 2))), ShapeMismatch);
}
