#include "modnorm/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "modnorm/errors.hpp"
#include "modnorm/search.hpp"

namespace modnorm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// M = re + i·im with re, im Hermitian.
struct HermitianSplit {
  ComplexMatrix re;
  ComplexMatrix im;

  explicit HermitianSplit(const ComplexMatrix& m)
      : re((m + m.adjoint()) * 0.5),
        im((m - m.adjoint()) * Complex(0.0, -0.5)) {}

  // Re(e^{iθ} M) = cos θ·re − sin θ·im.
  ComplexMatrix rotated_real_part(double theta) const {
    return std::cos(theta) * re - std::sin(theta) * im;
  }
};

double top_eigenvalue(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

ComplexVector top_eigenvector(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  return solver.eigenvectors().col(h.rows() - 1);
}

Complex rayleigh(const ComplexMatrix& a, const ComplexVector& v) {
  return v.dot(a * v) / v.squaredNorm();
}

// Given unit u, w whose Rayleigh values under A lie on opposite sides of 0
// along a common line, returns a unit vector in span{u, w} with Rayleigh
// value 0. Along ζ(t) = u + t·e^{iγ}·w, with γ chosen so the cross term is
// real, the value is the real quadratic a + c·t + b·t² (up to the
// collinearity defect of the endpoints); its positive root is taken.
ComplexVector pull_between(const ComplexMatrix& a, const ComplexVector& u,
                           const ComplexVector& w) {
  const Complex zu = rayleigh(a, u);
  const Complex zw = rayleigh(a, w);
  if (zu == Complex(0.0)) return u;
  if (zw == Complex(0.0)) return w;
  const Complex rot = std::conj(zu) / std::abs(zu);
  const double qa = std::abs(zu);
  const double qb = (rot * zw).real();
  if (qb >= 0.0) return std::abs(zu) <= std::abs(zw) ? u : w;

  const Complex alpha = rot * u.dot(a * w);
  const Complex beta = rot * w.dot(a * u);
  const double gamma =
      std::atan2(-(alpha.imag() + beta.imag()), alpha.real() - beta.real());
  const Complex phase = std::polar(1.0, gamma);
  const double qc = (phase * alpha + std::conj(phase) * beta).real();
  const double disc = std::sqrt(qc * qc - 4.0 * qa * qb);
  const double t = qc >= 0.0 ? (qc + disc) / (-2.0 * qb)
                             : 2.0 * qa / (disc - qc);

  ComplexVector zeta = t <= 1.0 ? ComplexVector(u + t * phase * w)
                                : ComplexVector(u / t + phase * w);
  const double len = zeta.norm();
  if (len < 1e-12) return u;
  return zeta / len;
}

// Closest point to the origin of a convex polygon given by its vertices in
// boundary order, as a combination of at most three vertices.
struct HullPoint {
  enum class Kind { kVertex, kEdge, kInterior } kind = Kind::kVertex;
  int i = 0, j = 0, k = 0;
  double t = 0.0;                   // edge: point = (1−t) z_i + t z_j
  double bi = 1.0, bj = 0.0, bk = 0.0;  // interior: barycentric weights
  double distance = 0.0;
  Complex point;
};

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

HullPoint nearest_to_origin(const std::vector<Complex>& z) {
  const int n = static_cast<int>(z.size());
  HullPoint best;
  best.distance = std::abs(z[0]);
  best.point = z[0];
  for (int i = 0; i < n; ++i) {
    if (std::abs(z[i]) < best.distance) {
      best = HullPoint{};
      best.i = i;
      best.distance = std::abs(z[i]);
      best.point = z[i];
    }
  }
  if (best.distance == 0.0) return best;

  // Fan triangulation from vertex 0.
  for (int j = 1; j + 1 < n; ++j) {
    const Complex a = z[0], b = z[j], c = z[j + 1];
    const double area = cross(b - a, c - a);
    const double span = std::max({std::abs(b - a), std::abs(c - a), 1e-300});
    if (std::abs(area) <= 1e-14 * span * span) continue;
    const double wa = cross(b, c) / area;
    const double wb = cross(c, a) / area;
    const double wc = cross(a, b) / area;
    if (wa >= 0.0 && wb >= 0.0 && wc >= 0.0) {
      HullPoint h;
      h.kind = HullPoint::Kind::kInterior;
      h.i = 0;
      h.j = j;
      h.k = j + 1;
      h.bi = wa;
      h.bj = wb;
      h.bk = wc;
      h.distance = 0.0;
      h.point = Complex(0.0);
      return h;
    }
  }

  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    const Complex d = z[j] - z[i];
    const double len2 = std::norm(d);
    if (len2 == 0.0) continue;
    const double t = std::clamp(-(std::conj(d) * z[i]).real() / len2, 0.0, 1.0);
    const Complex p = z[i] + t * d;
    if (std::abs(p) < best.distance) {
      best = HullPoint{};
      best.kind = HullPoint::Kind::kEdge;
      best.i = i;
      best.j = j;
      best.t = t;
      best.distance = std::abs(p);
      best.point = p;
    }
  }
  return best;
}

ComplexMatrix shifted(const ComplexMatrix& a, Complex s) {
  return a - s * ComplexMatrix::Identity(a.rows(), a.cols());
}

ComplexVector realize(const ComplexMatrix& a, const std::vector<ComplexVector>& v,
                      const std::vector<Complex>& z, const HullPoint& h) {
  switch (h.kind) {
    case HullPoint::Kind::kVertex:
      return v[h.i];
    case HullPoint::Kind::kEdge:
      return pull_between(shifted(a, h.point), v[h.i], v[h.j]);
    case HullPoint::Kind::kInterior: {
      const double w = h.bj + h.bk;
      if (w <= 1e-15) return v[h.i];
      const Complex q = (h.bj * z[h.j] + h.bk * z[h.k]) / w;
      const ComplexVector on_edge = pull_between(shifted(a, q), v[h.j], v[h.k]);
      return pull_between(a, v[h.i], on_edge);
    }
  }
  return v[h.i];
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  return t < 0.0 ? t + kTwoPi : t;
}

}  // namespace

double numrange_support(const ComplexMatrix& m, double theta) {
  return top_eigenvalue(HermitianSplit(m).rotated_real_part(theta));
}

ComplexVector numrange_preimage(const ComplexMatrix& m, Complex target,
                                double accuracy, double hint_theta) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeMismatch("numrange_preimage: matrix must be square");
  }
  const ComplexMatrix a = shifted(m, target);
  if (a.rows() == 1) return ComplexVector::Ones(1);
  const HermitianSplit split(a);

  // Sample support points densely around the hint: when the target sits on a
  // curved stretch of the boundary a uniform polygon approaches it only
  // quadratically in the spacing.
  std::vector<double> local{hint_theta};
  for (int e = 1; e <= 9; ++e) {
    const double d = std::pow(10.0, -e);
    local.push_back(hint_theta + d);
    local.push_back(hint_theta - d);
  }

  ComplexVector best_vec;
  double best_residual = std::numeric_limits<double>::infinity();
  for (int grid : {32, 128, 512}) {
    std::vector<double> angles;
    angles.reserve(grid + local.size());
    for (int i = 0; i < grid; ++i) angles.push_back(kTwoPi * i / grid);
    for (double t : local) angles.push_back(wrap_angle(t));
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    std::vector<ComplexVector> vecs;
    std::vector<Complex> pts;
    vecs.reserve(angles.size());
    pts.reserve(angles.size());
    for (double t : angles) {
      vecs.push_back(top_eigenvector(split.rotated_real_part(t)));
      pts.push_back(rayleigh(a, vecs.back()));
    }
    const HullPoint h = nearest_to_origin(pts);
    ComplexVector zeta = realize(a, vecs, pts, h);
    zeta /= zeta.norm();
    const double residual = std::abs(rayleigh(a, zeta));
    if (residual < best_residual) {
      best_residual = residual;
      best_vec = zeta;
    }
    if (best_residual <= accuracy) break;
  }
  return best_vec;
}

ComplexVector hermitian_null_vector(const ComplexMatrix& h) {
  const HermitianSpectrum spec = hermitian_spectrum(h);
  const double hi = spec.largest();
  const double lo = spec.smallest();
  if (lo > 0.0 || hi < 0.0) {
    throw PreconditionFailed(
        "hermitian_null_vector: spectrum does not straddle zero");
  }
  if (hi == 0.0) return spec.top_vector();
  if (lo == 0.0) return spec.bottom_vector();
  // cos²s·hi + sin²s·lo = 0 for eigenvectors with zero cross term.
  ComplexVector zeta =
      std::sqrt(-lo) * spec.top_vector() + std::sqrt(hi) * spec.bottom_vector();
  return zeta / zeta.norm();
}

NumRangeDecision zero_in_numrange(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ShapeMismatch("zero_in_numrange: matrix must be square and non-empty");
  }
  require_finite(m, "zero_in_numrange");
  NumRangeDecision out;
  out.scale = 1.0 + operator_norm(m);
  const double threshold = -tol * out.scale / 2.0;

  if (m.rows() == 1) {
    const Complex z = m(0, 0);
    out.min_support = -std::abs(z);
    out.theta = z == Complex(0.0) ? 0.0 : wrap_angle(std::numbers::pi - std::arg(z));
    out.contains = out.min_support >= threshold;
    if (out.contains) {
      out.certificate = ComplexVector::Ones(1);
      out.certificate_residual = std::abs(z);
    }
    return out;
  }

  const HermitianSplit split(m);
  const ScalarMinimum best = minimize_on_circle(
      [&](double theta) { return top_eigenvalue(split.rotated_real_part(theta)); },
      kAngleGrid, kAngleWidth);
  out.min_support = best.value;
  out.theta = best.argument;
  out.contains = out.min_support >= threshold;
  if (out.contains) {
    ComplexVector zeta =
        numrange_preimage(m, Complex(0.0), tol * out.scale / 4.0, out.theta);
    out.certificate_residual = std::abs(rayleigh(m, zeta));
    out.certificate = std::move(zeta);
  }
  return out;
}

}  // namespace modnorm
