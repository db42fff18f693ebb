#pragma once

// Derivative-free one-dimensional minimization used by the angle searches and
// the real-line oracle.

#include <cmath>
#include <numbers>
#include <utility>

namespace modnorm {

struct ScalarMinimum {
  double argument = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi], stopping once the bracket is narrower
/// than `width`. Assumes f is unimodal on the bracket; otherwise returns some
/// local minimizer.
template <typename F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi,
                                      double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  // 200 iterations shrink any bracket below double resolution.
  for (int it = 0; it < 200 && (b - a) > width; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

/// Minimizes a 2π-periodic function: uniform grid of `grid` angles, then
/// golden-section refinement in the two cells around the best grid point.
/// The result is never worse than the best grid value.
template <typename F>
ScalarMinimum minimize_on_circle(F&& f, int grid, double width) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double step = two_pi / grid;
  ScalarMinimum best{0.0, f(0.0)};
  for (int i = 1; i < grid; ++i) {
    const double theta = step * i;
    const double v = f(theta);
    if (v < best.value) best = {theta, v};
  }
  ScalarMinimum refined =
      golden_section_minimize(f, best.argument - step, best.argument + step,
                              width);
  if (refined.value < best.value) best = refined;
  best.argument = std::remainder(best.argument, two_pi);
  if (best.argument < 0.0) best.argument += two_pi;
  return best;
}

}  // namespace modnorm
