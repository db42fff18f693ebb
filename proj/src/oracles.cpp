#include "modnorm/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "modnorm/errors.hpp"
#include "modnorm/sampler.hpp"
#include "modnorm/search.hpp"

namespace modnorm::verify {

namespace {

constexpr double kMinRadius = 1e-4;

std::vector<double> log_radii(double radius, int count) {
  std::vector<double> r(count);
  const double ratio = std::log(radius / kMinRadius);
  for (int i = 0; i < count; ++i) {
    r[i] = kMinRadius * std::exp(ratio * i / std::max(count - 1, 1));
  }
  return r;
}

void require_grid(int grid, double radius) {
  if (grid < 64) throw PreconditionFailed("grid oracle needs grid >= 64");
  if (!(radius > kMinRadius)) {
    throw PreconditionFailed("grid oracle radius must exceed 1e-4");
  }
}

}  // namespace

OracleVerdict bj_grid_oracle(const ModuleElement& x, const ModuleElement& y,
                             double radius, int grid, double tol) {
  require_same_shape(x, y, "bj_grid_oracle");
  require_grid(grid, radius);
  OracleVerdict out;
  out.norm_x = module_norm(x);
  out.best_norm = out.norm_x;
  out.best_lambda = 0.0;
  auto eval = [&](Complex lambda) {
    ++out.evaluations;
    const double v = operator_norm(x.matrix() + lambda * y.matrix());
    if (v < out.best_norm) {
      out.best_norm = v;
      out.best_lambda = lambda;
    }
    return v;
  };

  const std::vector<double> radii = log_radii(radius, grid);
  for (double r : radii) {
    for (int j = 0; j < grid; ++j) {
      eval(std::polar(r, 2.0 * std::numbers::pi * j / grid));
    }
  }

  // Compass search; λ ↦ ‖x + λy‖ is convex so local descent suffices.
  static const std::array<Complex, 8> kDirections = {
      Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1),
      Complex(1, 1) / std::sqrt(2.0), Complex(1, -1) / std::sqrt(2.0),
      Complex(-1, 1) / std::sqrt(2.0), Complex(-1, -1) / std::sqrt(2.0)};
  Complex center = out.best_lambda;
  double current = out.best_norm;
  double step = std::max(std::abs(center) * 0.2, kMinRadius);
  for (int it = 0; it < 4000 && step > 1e-13 * (1.0 + std::abs(center)); ++it) {
    bool moved = false;
    for (const Complex& d : kDirections) {
      const double v = eval(center + step * d);
      if (v < current) {
        current = v;
        center += step * d;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  out.holds = !(out.best_norm < out.norm_x - tol);
  return out;
}

OracleVerdict bj_real_grid_oracle(const ModuleElement& x, const ModuleElement& y,
                                  double radius, int grid, double tol) {
  require_same_shape(x, y, "bj_real_grid_oracle");
  require_grid(grid, radius);
  OracleVerdict out;
  out.norm_x = module_norm(x);
  auto norm_at = [&](double alpha) {
    ++out.evaluations;
    return operator_norm(x.matrix() + alpha * y.matrix());
  };

  std::vector<double> alphas{0.0};
  for (double r : log_radii(radius, grid)) {
    alphas.push_back(r);
    alphas.push_back(-r);
  }
  std::sort(alphas.begin(), alphas.end());
  std::vector<double> values(alphas.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    values[i] = norm_at(alphas[i]);
    if (values[i] < values[best]) best = i;
  }
  const double lo = alphas[best == 0 ? 0 : best - 1];
  const double hi = alphas[std::min(best + 1, alphas.size() - 1)];
  const ScalarMinimum refined = golden_section_minimize(norm_at, lo, hi, 1e-14);

  out.best_norm = values[best];
  out.best_lambda = alphas[best];
  if (refined.value < out.best_norm) {
    out.best_norm = refined.value;
    out.best_lambda = refined.argument;
  }
  out.holds = !(out.best_norm < out.norm_x - tol);
  return out;
}

OracleVerdict strong_bj_sample_oracle(const ModuleElement& x,
                                      const ModuleElement& y, int trials,
                                      std::uint64_t seed, double tol) {
  require_same_shape(x, y, "strong_bj_sample_oracle");
  if (trials < 100) throw PreconditionFailed("sampling oracle needs trials >= 100");
  OracleVerdict out;
  out.norm_x = module_norm(x);
  out.best_norm = out.norm_x;
  auto try_action = [&](const ComplexMatrix& a) {
    ++out.evaluations;
    out.best_norm =
        std::min(out.best_norm, operator_norm(x.matrix() + y.matrix() * a));
  };

  Sampler sampler(seed);
  const Eigen::Index n = x.algebra_dim();
  constexpr std::array<double, 4> kScales = {1e-2, 1e-1, 1.0, 10.0};
  for (int t = 0; t < trials; ++t) {
    try_action(kScales[t % kScales.size()] * sampler.gaussian_matrix(n, n));
  }

  // −c·<y, x> is the steepest descent direction for ‖x + y·a‖ at a = 0.
  const ComplexMatrix aimed = -(y.matrix().adjoint() * x.matrix());
  const double ny2 = operator_norm_squared(y.matrix());
  for (int i = 0; i <= 40; ++i) {
    const double c = std::pow(10.0, -6.0 + 0.2 * i);
    try_action(c * aimed);
    if (ny2 > 0.0) try_action((c / ny2) * aimed);
  }
  out.holds = !(out.best_norm < out.norm_x - tol);
  return out;
}

}  // namespace modnorm::verify
