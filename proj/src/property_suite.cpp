#include "modnorm/property_suite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "modnorm/daugavet.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/normderiv.hpp"
#include "modnorm/numrange.hpp"
#include "modnorm/oracles.hpp"
#include "modnorm/ortho.hpp"
#include "modnorm/sampler.hpp"

namespace modnorm::verify {

namespace {

constexpr const char* kCertificate = "certificate";
constexpr const char* kEvidence = "evidence";

class Recorder {
 public:
  // observed ≤ allowed passes. NaN never passes.
  void bound(const std::string& name, const char* basis, double observed,
             double allowed) {
    PropertyResult& r = row(name, basis);
    const double slack = allowed - observed;
    ++r.checked;
    if (slack >= 0.0) ++r.passed;
    if (std::isnan(slack)) {
      r.worst_slack = -std::numeric_limits<double>::infinity();
    } else {
      r.worst_slack = std::min(r.worst_slack, slack);
    }
  }

  void truth(const std::string& name, const char* basis, bool ok) {
    bound(name, basis, ok ? 0.0 : 1.0, 0.0);
  }

  void informational(const std::string& name, const char* basis, bool ok) {
    row(name, basis).informational = true;
    truth(name, basis, ok);
  }

  std::vector<PropertyResult> take() { return std::move(rows_); }

 private:
  PropertyResult& row(const std::string& name, const char* basis) {
    auto it = index_.find(name);
    if (it != index_.end()) return rows_[it->second];
    index_.emplace(name, rows_.size());
    PropertyResult r;
    r.name = name;
    r.basis = basis;
    rows_.push_back(std::move(r));
    return rows_.back();
  }

  std::vector<PropertyResult> rows_;
  std::map<std::string, std::size_t> index_;
};

ModuleElement diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return ModuleElement(m);
}

void remark_checks(Recorder& rec) {
  const ModuleElement t = diag2(1.0, 1.0);
  const ModuleElement s = diag2(-1.0, 1.0);
  const ModuleElement r = diag2(-1.0, 0.0);
  const double tol = 1e-9;

  const DerivativePair ts = rho_pair(t, s);
  const DerivativePair tr = rho_pair(t, r);
  rec.bound("remark: rho+(T,S) = 1", kCertificate, std::abs(ts.rho_plus - 1.0), tol);
  rec.bound("remark: rho-(T,S) = -1", kCertificate, std::abs(ts.rho_minus + 1.0), tol);
  rec.bound("remark: rho-(T,R) = -1", kCertificate, std::abs(tr.rho_minus + 1.0), tol);
  rec.bound("remark: rho+(T,R) = 0", kCertificate, std::abs(tr.rho_plus), tol);

  const bool rho_ts = is_rho_orthogonal(t, s).holds;
  const bool ip_ts = is_ip_orthogonal(t, s).holds;
  const bool rho_tr = is_rho_orthogonal(t, r).holds;
  const bool real_tr = is_bj_real(t, r).holds;
  const bool strong_ts = is_bj_strong(t, s).holds;
  const bool strong_tr = is_bj_strong(t, r).holds;
  rec.truth("remark: T rho-orthogonal to S", kCertificate, rho_ts);
  rec.truth("remark: T not orthogonal to S", kCertificate, !ip_ts);
  rec.truth("remark: T not rho-orthogonal to R", kCertificate, !rho_tr);
  rec.truth("remark: T real-BJ-orthogonal to R", kCertificate, real_tr);
  rec.truth("remark: T not strongly BJ-orthogonal to S", kCertificate, !strong_ts);
  rec.truth("remark: T strongly BJ-orthogonal to R", kCertificate, strong_tr);
  rec.truth("remark: rho without strong BJ (T,S)", kCertificate,
            rho_ts && !strong_ts);
  rec.truth("remark: strong BJ without rho (T,R)", kCertificate,
            strong_tr && !rho_tr);

  // Definition-level confirmations.
  const ModuleElement c = diag2(1.0, -1.0);
  rec.bound("remark: ||T + SC|| = 0", kCertificate,
            module_norm(t + module_action(s, AlgebraElement(c.matrix()))), tol);
  rec.truth("remark: sampling finds a violator for (T,S)", kEvidence,
            !strong_bj_sample_oracle(t, s, 100, 0).holds);
  rec.truth("remark: sampling finds no violator for (T,R)", kEvidence,
            strong_bj_sample_oracle(t, r, 100, 0).holds);
  rec.truth("remark: real grid finds no violator for (T,R)", kEvidence,
            bj_real_grid_oracle(t, r).holds);

  // C² over C: x = (1, 0), y = (i, 0).
  ComplexMatrix xm = ComplexMatrix::Zero(2, 1);
  ComplexMatrix ym = ComplexMatrix::Zero(2, 1);
  xm(0, 0) = 1.0;
  ym(0, 0) = Complex(0.0, 1.0);
  const ModuleElement x(xm), y(ym);
  rec.truth("example: (1,0) not BJ-orthogonal to (i,0)", kCertificate,
            !is_bj(x, y).holds);
  rec.truth("example: (1,0) real-BJ-orthogonal to (i,0)", kCertificate,
            is_bj_real(x, y).holds);
  rec.truth("example: grid finds lambda = i", kEvidence, !bj_grid_oracle(x, y).holds);
  rec.truth("example: real grid finds no violator", kEvidence,
            bj_real_grid_oracle(x, y).holds);
}

double scale_of(const ModuleElement& x, const ModuleElement& y) {
  return 1.0 + module_norm(x) * module_norm(y);
}

void matcore_checks(Recorder& rec, Sampler& s, const ModuleElement& x) {
  const ComplexMatrix& a = x.matrix();
  const ComplexMatrix b = s.gaussian_matrix(a.cols(), s.integer(1, 6));
  const double na = operator_norm(a);
  const double nb = operator_norm(b);
  rec.bound("matcore: submultiplicative", kCertificate, operator_norm(a * b),
            na * nb * (1.0 + 1e-12));
  rec.bound("matcore: C* identity", kCertificate,
            std::abs(operator_norm(a.adjoint() * a) - na * na), 1e-12 * (1.0 + na * na));

  const ComplexMatrix g = inner_product(x, x).matrix();
  const HermitianSpectrum spec = hermitian_spectrum(g);
  const ComplexMatrix rebuilt = spec.eigenvectors *
                                spec.eigenvalues.cast<Complex>().asDiagonal() *
                                spec.eigenvectors.adjoint();
  rec.bound("matcore: spectral reconstruction", kCertificate,
            operator_norm(rebuilt - g), 1e-10 * (1.0 + operator_norm(g)));
}

void hmodule_checks(Recorder& rec, Sampler& s, const ModuleElement& x,
                    const ModuleElement& y) {
  const double nx = module_norm(x);
  const double ny = module_norm(y);
  const ComplexMatrix xy = inner_product(x, y).matrix();
  const ComplexMatrix yx = inner_product(y, x).matrix();
  rec.bound("hmodule: norm Cauchy-Schwarz", kCertificate, operator_norm(xy),
            nx * ny + 1e-9 * (1.0 + nx * ny));
  rec.bound("hmodule: conjugate symmetry", kCertificate,
            operator_norm(yx - xy.adjoint()), 1e-12 * (1.0 + nx * ny));
  rec.bound("hmodule: <x,x> positive", kCertificate,
            -hermitian_spectrum(inner_product(x, x).matrix()).smallest(),
            1e-10 * (1.0 + nx * nx));
  const AlgebraElement a(s.gaussian_matrix(x.algebra_dim(), x.algebra_dim()));
  const ComplexMatrix lhs = inner_product(x, module_action(y, a)).matrix();
  rec.bound("hmodule: <x, ya> = <x, y>a", kCertificate,
            operator_norm(lhs - xy * a.matrix()),
            1e-10 * (1.0 + nx * ny * operator_norm(a.matrix())));
}

void face_checks(Recorder& rec, Sampler& s, const ModuleElement& x) {
  if (module_norm(x) <= kZeroNorm) return;
  const TopFace face = top_face(x);
  const ComplexMatrix g = inner_product(x, x).matrix();
  const Eigen::Index n = face.algebra_dim();
  const Eigen::Index k = face.dim();

  // Densities on the face attain ‖x‖².
  const StateWitness inner = s.density(k);
  const StateWitness on_face(face.isometry * inner.density() * face.isometry.adjoint());
  rec.bound("stateface: face states attain ||x||^2", kCertificate,
            std::abs(state_value(on_face, g).real() - face.lambda_max),
            1e-9 * (1.0 + face.lambda_max));

  // Densities with mass off the face fall short by at least gap·mass/2.
  if (k < n && !face.near_degenerate) {
    const StateWitness p = s.density(n);
    const ComplexMatrix proj = face.isometry * face.isometry.adjoint();
    const double off_mass =
        1.0 - state_value(p, proj).real();
    if (off_mass > 1e-6) {
      const double value = state_value(p, g).real();
      rec.bound("stateface: off-face states fall short", kCertificate, value,
                face.lambda_max - 0.5 * face.gap * off_mass);
    }
  }
}

void rho_checks(Recorder& rec, Sampler& s, const ModuleElement& x,
                const ModuleElement& y) {
  const double nx = module_norm(x);
  const double ny = module_norm(y);
  const double sc = scale_of(x, y);
  const DerivativePair r = rho_pair(x, y);

  // P1
  rec.bound("P1: rho- <= rho+", kCertificate, r.rho_minus - r.rho_plus, 1e-10 * sc);
  rec.bound("P1: |rho| <= ||x|| ||y||", kCertificate,
            std::max(std::abs(r.rho_plus), std::abs(r.rho_minus)), nx * ny + 1e-9 * sc);
  const DerivativePair xx = rho_pair(x, x);
  rec.bound("P1: rho(x,x) = ||x||^2", kCertificate,
            std::max(std::abs(xx.rho_plus - nx * nx), std::abs(xx.rho_minus - nx * nx)),
            1e-9 * (1.0 + nx * nx));

  // P2
  const DerivativePair neg_x = rho_pair(-x, y);
  const DerivativePair neg_y = rho_pair(x, -y);
  rec.bound("P2: sign symmetry", kCertificate,
            std::max({std::abs(neg_x.rho_plus + r.rho_minus),
                      std::abs(neg_x.rho_minus + r.rho_plus),
                      std::abs(neg_y.rho_plus + r.rho_minus),
                      std::abs(neg_y.rho_minus + r.rho_plus)}),
            1e-9 * sc);

  // P3
  const Complex alpha = 2.0 * s.complex_gaussian();
  const DerivativePair shifted = rho_pair(x, alpha * x + y);
  const double shift = alpha.real() * nx * nx;
  rec.bound("P3: rho(x, ax + y) = Re(a)||x||^2 + rho(x, y)", kCertificate,
            std::max(std::abs(shifted.rho_plus - shift - r.rho_plus),
                     std::abs(shifted.rho_minus - shift - r.rho_minus)),
            1e-8 * (1.0 + std::abs(alpha) * nx * nx + sc));

  // P4
  const Complex a = 2.0 * s.complex_gaussian();
  const Complex b = 2.0 * s.complex_gaussian();
  const DerivativePair scaled = rho_pair(a * x, b * y);
  const Complex rot = std::polar(1.0, std::arg(b) - std::arg(a));
  const DerivativePair rotated = rho_pair(x, rot * y);
  const double ab = std::abs(a) * std::abs(b);
  rec.bound("P4: rho(ax, by) = |ab| rho(x, e^{i(arg b - arg a)} y)", kCertificate,
            std::max(std::abs(scaled.rho_plus - ab * rotated.rho_plus),
                     std::abs(scaled.rho_minus - ab * rotated.rho_minus)),
            1e-8 * (1.0 + ab * sc));

  // P5
  if (nx > kZeroNorm) {
    double previous = std::numeric_limits<double>::infinity();
    double last = 0.0;
    const double slack = 1e-8 * (1.0 + ny * ny);
    for (double t : {1e-2, 1e-4, 1e-6}) {
      const double d = std::abs(rho_plus(x + t * y, y).value - r.rho_plus);
      rec.bound("P5: monotone approach", kCertificate, d, previous + slack);
      previous = d;
      last = d;
    }
    rec.bound("P5: final discrepancy", kCertificate, last, 1e-4 * (1.0 + ny * ny));
  }

  // Cauchy–Schwarz for a random state and for both extremal witnesses.
  const double cs_tol = 1e-9 * (1.0 + nx * nx * ny * ny);
  rec.bound("Cauchy-Schwarz gap", kCertificate,
            -cauchy_schwarz_gap(s.density(x.algebra_dim()), x, y), cs_tol);
  if (r.max_witness) {
    rec.bound("Cauchy-Schwarz gap", kCertificate,
              -cauchy_schwarz_gap(*r.max_witness, x, y), cs_tol);
    rec.bound("Cauchy-Schwarz gap", kCertificate,
              -cauchy_schwarz_gap(*r.min_witness, x, y), cs_tol);

    // The witnesses are face states realizing the extremes.
    const ComplexMatrix g = inner_product(x, x).matrix();
    const ComplexMatrix xy = inner_product(x, y).matrix();
    const double face_tol = 1e-8 * (1.0 + nx * nx);
    for (const StateWitness* w : {&*r.max_witness, &*r.min_witness}) {
      rec.bound("rho witnesses lie on the face", kCertificate,
                std::abs(state_value(*w, g).real() - nx * nx), face_tol);
    }
    rec.bound("rho witnesses realize the extremes", kCertificate,
              std::max(std::abs(state_value(*r.max_witness, xy).real() - r.rho_plus),
                       std::abs(state_value(*r.min_witness, xy).real() - r.rho_minus)),
              1e-8 * sc);
  }

  // Closed form against the definition.
  double fd_plus = 0.0, fd_minus = 0.0;
  try {
    fd_plus = rho_fd(x, y, Side::kPlus);
    fd_minus = rho_fd(x, y, Side::kMinus);
  } catch (const NoConvergence&) {
    rec.truth("closed form vs finite differences", kCertificate, false);
    return;
  }
  rec.bound("closed form vs finite differences", kCertificate,
            std::max(std::abs(fd_plus - r.rho_plus), std::abs(fd_minus - r.rho_minus)),
            1e-5 * sc);
  rec.bound("finite differences bracket the limit", kCertificate,
            std::max(r.rho_plus - fd_plus, fd_minus - r.rho_minus), 1e-9 * sc);
}

// Relation-specific checks on one witness; returns nothing, records rows.
void witness_checks(Recorder& rec, const OrthoReport& rep, const ModuleElement& x,
                    const ModuleElement& y) {
  const StateWitness* p = rep.state();
  if (!p) return;
  const double nx = module_norm(x);
  const double ny = module_norm(y);
  const ComplexMatrix g = inner_product(x, x).matrix();
  const ComplexMatrix xy = inner_product(x, y).matrix();
  rec.bound("witness: state on the face", kCertificate,
            std::abs(state_value(*p, g).real() - nx * nx), 1e-8 * (1.0 + nx * nx));
  switch (rep.relation) {
    case Relation::kBj:
      rec.bound("witness: bj annihilation", kCertificate,
                std::abs(state_value(*p, xy)), 1e-8 * (1.0 + nx * ny));
      break;
    case Relation::kBjReal:
      rec.bound("witness: bj-real annihilation", kCertificate,
                std::abs(state_value(*p, xy).real()), 1e-8 * (1.0 + nx * ny));
      break;
    case Relation::kBjStrong:
      rec.bound("witness: bj-strong annihilation", kCertificate,
                std::abs(state_value(*p, xy * xy.adjoint())),
                1e-8 * (1.0 + nx * nx * ny * ny));
      break;
    default:
      break;
  }
}

void relation_checks(Recorder& rec, Sampler& s, const ModuleElement& x,
                     const ModuleElement& y) {
  const double nx = module_norm(x);
  const double t = kDefaultOrthoTolerance;
  const OrthoReport ip = is_ip_orthogonal(x, y, t);
  const OrthoReport bj = is_bj(x, y, t);
  const OrthoReport real = is_bj_real(x, y, t);
  const OrthoReport strong = is_bj_strong(x, y, t);
  const OrthoReport rho = is_rho_orthogonal(x, y, t);

  auto implies = [&](const char* name, const OrthoReport& strong_rel, Relation weak) {
    if (!strong_rel.holds) return;
    rec.truth(name, kCertificate, decide(weak, x, y, 10.0 * t).holds);
  };
  implies("chain: ip => bj-strong", ip, Relation::kBjStrong);
  implies("chain: bj-strong => bj-real", strong, Relation::kBjReal);
  implies("chain: ip => rho", ip, Relation::kRho);
  implies("chain: rho => bj-real", rho, Relation::kBjReal);
  implies("chain: bj-strong => bj", strong, Relation::kBj);
  implies("chain: bj => bj-real", bj, Relation::kBjReal);

  for (const OrthoReport* rep : {&bj, &real, &strong}) {
    if (rep->holds) witness_checks(rec, *rep, x, y);
  }
  if (bj.holds && nx > kZeroNorm) {
    rec.truth("witness: bj certificate present", kCertificate, bj.state() != nullptr);
  }

  // m(y) inequality.
  if (bj.holds) {
    const double m = m_lower_bound(y);
    rec.bound("m(y) lower bound is nonnegative", kCertificate, -m, 1e-10 * (1.0 + module_norm(y) * module_norm(y)));
    for (int i = 0; i < 100; ++i) {
      const Complex lambda = std::polar(2.0 * std::sqrt(s.uniform()),
                                        2.0 * std::numbers::pi * s.uniform());
      const double lhs = std::pow(module_norm(x + lambda * y), 2);
      const double rhs = nx * nx + std::norm(lambda) * m;
      rec.bound("m(y) inequality", kCertificate, rhs - lhs, 1e-8);
    }
  }

  // Bhatia–Šemrl vectors.
  const ComplexMatrix& xm = x.matrix();
  const ComplexMatrix& ym = y.matrix();
  auto bs_check = [&](BjVariant variant, const char* name) {
    const ComplexVector v = bhatia_semrl_witness(x, y, variant, t);
    const ComplexVector xv = xm * v;
    const ComplexVector yv = ym * v;
    rec.bound(std::string(name) + ": unit vector", kCertificate,
              std::abs(v.norm() - 1.0), 1e-10);
    rec.bound(std::string(name) + ": ||Xv|| = ||X||", kCertificate,
              std::abs(xv.norm() - nx), 1e-8 * (1.0 + nx));
    const Complex ipv = xv.dot(yv);
    const double value = variant == BjVariant::kComplex ? std::abs(ipv)
                                                        : std::abs(ipv.real());
    rec.bound(std::string(name) + ": [Xv, Yv] = 0", kCertificate, value,
              1e-8 * scale_of(x, y));
  };
  if (bj.holds) bs_check(BjVariant::kComplex, "Bhatia-Semrl");
  if (real.holds) bs_check(BjVariant::kReal, "Bhatia-Semrl real");

  // Homogeneity.
  const Complex c = std::polar(0.5 + 1.5 * s.uniform(), 2.0 * std::numbers::pi * s.uniform());
  const Complex d = std::polar(0.5 + 1.5 * s.uniform(), 2.0 * std::numbers::pi * s.uniform());
  const double cr = (s.uniform() < 0.5 ? -1.0 : 1.0) * (0.5 + 1.5 * s.uniform());
  const double dr = (s.uniform() < 0.5 ? -1.0 : 1.0) * (0.5 + 1.5 * s.uniform());
  const ModuleElement cx = c * x, dy = d * y;
  const ModuleElement rx = Complex(cr) * x, ry = Complex(dr) * y;
  rec.truth("homogeneity: ip", kCertificate, is_ip_orthogonal(cx, dy, t).holds == ip.holds);
  rec.truth("homogeneity: bj", kCertificate, is_bj(cx, dy, t).holds == bj.holds);
  rec.truth("homogeneity: bj-strong", kCertificate,
            is_bj_strong(cx, dy, t).holds == strong.holds);
  rec.truth("homogeneity: bj-real", kCertificate, is_bj_real(rx, ry, t).holds == real.holds);
  rec.truth("homogeneity: rho", kCertificate,
            is_rho_orthogonal(rx, ry, t).holds == rho.holds);
}

void daugavet_checks(Recorder& rec, Sampler& s, const ModuleElement& x) {
  const double nx = module_norm(x);
  const RhoCubeReport cube = rho_cube_identity(x, 1e-8);
  rec.bound("rho(x, x<x,x>) = ||x||^4", kCertificate, cube.residual, 1e-8);

  for (auto [alpha, beta] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {3.0, 0.1}}) {
    const ModuleDaugavetReport rep = module_daugavet_check(x, alpha, beta);
    rec.bound("Daugavet: ||ax + bx<x,x>|| = a||x|| + b||x||^3", kCertificate,
              rep.residual, 1e-9);
    rec.bound("Daugavet: ||x<x,x>|| = ||x||^3", kCertificate, rep.cube_residual, 1e-9);

    const Complex c = std::polar(0.5 + 1.5 * s.uniform(), 2.0 * std::numbers::pi * s.uniform());
    const double c2 = std::norm(c);
    const ModuleDaugavetReport scaled = module_daugavet_check(c * x, alpha, beta / c2);
    rec.bound("Daugavet: scaling", kCertificate,
              std::abs(scaled.lhs / std::abs(c) - rep.lhs), 1e-9 * (1.0 + rep.rhs));
  }

  if (nx > kZeroNorm) {
    const OrthoReport par = is_norm_parallel(x, cubic_element(x));
    rec.truth("Daugavet: x parallel to x<x,x>", kCertificate, par.holds);
    if (par.unit()) {
      rec.bound("Daugavet: parallel with xi = 1", kCertificate,
                std::abs(*par.unit() - Complex(1.0)), 1e-6);
    }
    const OperatorDaugavetReport op = operator_daugavet_witness(x.matrix(), 1e-8);
    rec.truth("operator Daugavet witness", kCertificate, op.holds);
  }
}

void oracle_checks(Recorder& rec, std::uint64_t seed, int index,
                   const ModuleElement& x, const ModuleElement& y) {
  const OrthoReport bj = is_bj(x, y, 1e-6);
  const OracleVerdict grid = bj_grid_oracle(x, y, 4.0, 64, 1e-6);
  rec.truth("bj vs grid oracle: no certificate-TRUE/oracle-FALSE", kEvidence,
            !(bj.holds && !grid.holds));
  rec.informational("bj vs grid oracle: agreement", kEvidence, bj.holds == grid.holds);

  const OrthoReport real = is_bj_real(x, y, 1e-6);
  const OracleVerdict real_grid = bj_real_grid_oracle(x, y, 4.0, 64, 1e-6);
  rec.truth("bj-real vs grid oracle: no certificate-TRUE/oracle-FALSE", kEvidence,
            !(real.holds && !real_grid.holds));
  rec.informational("bj-real vs grid oracle: agreement", kEvidence,
                    real.holds == real_grid.holds);

  const OrthoReport strong = is_bj_strong(x, y, 1e-6);
  const OracleVerdict sampled =
      strong_bj_sample_oracle(x, y, 100, seed + static_cast<std::uint64_t>(index), 1e-6);
  rec.truth("bj-strong vs sampling oracle: no certificate-TRUE/oracle-FALSE", kEvidence,
            !(strong.holds && !sampled.holds));
  rec.informational("bj-strong vs sampling oracle: agreement", kEvidence,
                    strong.holds == sampled.holds);
}

void numrange_checks(Recorder& rec, Sampler& s, int index) {
  static constexpr int kSizes[] = {2, 3, 5};
  const int n = kSizes[index % 3];
  // Shifted so that both answers occur.
  const ComplexMatrix m = s.gaussian_matrix(n, n) +
                          1.5 * s.complex_gaussian() * ComplexMatrix::Identity(n, n);
  const double tol = 1e-9;
  const NumRangeDecision d = zero_in_numrange(m, tol);

  constexpr int kScan = 4096;
  double scan = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    scan = std::min(scan, numrange_support(m, 2.0 * std::numbers::pi * i / kScan));
  }
  // Between grid angles the support function exceeds the true minimum by at
  // most ‖M‖·(1 − cos(π/4096)); decisions inside that band are not compared.
  const double band = operator_norm(m) * (1.0 - std::cos(std::numbers::pi / kScan)) +
                      tol * d.scale;
  const bool scan_contains = scan >= 0.0;
  rec.truth("numrange vs dense scan", kCertificate,
            d.contains == scan_contains || std::abs(scan) <= band);
  if (d.contains) {
    rec.bound("numrange certificate residual", kCertificate, d.certificate_residual,
              tol * d.scale);
    const Complex phase = s.unit_phase();
    const NumRangeDecision r = zero_in_numrange(phase * m, tol);
    rec.truth("numrange: rotation keeps containment", kCertificate, r.contains);
    if (r.contains) {
      rec.bound("numrange: rotated certificate residual", kCertificate,
                r.certificate_residual, tol * r.scale);
    }
  } else {
    rec.bound("numrange: separating angle", kCertificate,
              numrange_support(m, d.theta), -tol * d.scale / 2.0);
  }
}

}  // namespace

bool SuiteReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.informational || p.pass(); });
}

const PropertyResult* SuiteReport::find(const std::string& name) const {
  for (const PropertyResult& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

SuiteReport remark_suite() {
  Recorder rec;
  remark_checks(rec);
  SuiteReport out;
  out.trials = 0;
  out.properties = rec.take();
  return out;
}

SuiteReport property_suite(std::uint64_t seed, int trials, const SuiteOptions& options) {
  if (trials < 1) throw PreconditionFailed("property_suite: trials must be >= 1");
  if (options.min_dim < 1 || options.max_dim < options.min_dim) {
    throw PreconditionFailed("property_suite: bad dimension range");
  }
  Recorder rec;
  remark_checks(rec);

  Sampler s(seed);
  std::map<std::string, int> kinds;
  for (int i = 0; i < trials; ++i) {
    const PairKind kind = kAllPairKinds[i % std::size(kAllPairKinds)];
    const PairInstance inst = random_pair(s, kind, options.min_dim, options.max_dim);
    ++kinds[std::string(pair_kind_name(kind))];

    matcore_checks(rec, s, inst.x);
    hmodule_checks(rec, s, inst.x, inst.y);
    face_checks(rec, s, inst.x);
    rho_checks(rec, s, inst.x, inst.y);
    relation_checks(rec, s, inst.x, inst.y);
    daugavet_checks(rec, s, inst.x);
    if (i < options.oracle_instances) {
      oracle_checks(rec, seed, i, inst.x, inst.y);
      numrange_checks(rec, s, i);
    }
  }

  SuiteReport out;
  out.seed = seed;
  out.trials = trials;
  out.properties = rec.take();
  out.instance_kinds.assign(kinds.begin(), kinds.end());
  return out;
}

}  // namespace modnorm::verify
