#include "modnorm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "modnorm/daugavet.hpp"
#include "modnorm/errors.hpp"
#include "modnorm/matrix_io.hpp"
#include "modnorm/normderiv.hpp"
#include "modnorm/ortho.hpp"

namespace modnorm::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string x_file;
  std::string y_file;
  std::string relation;
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> tol;
  bool oracle = false;
  std::uint64_t seed = 0;
  int trials = 200;
  std::string suite = "all";
  std::string json_out;
};

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_json(const ComplexVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_json(v[i]));
  return a;
}

json state_json(const std::optional<StateWitness>& p) {
  return p ? matrix_to_json(p->density()) : json(nullptr);
}

json shape_json(const ModuleElement& x) {
  return json{{"rows", x.rows()}, {"cols", x.algebra_dim()}};
}

ModuleElement load(const std::string& path) { return ModuleElement(read_matrix_file(path)); }

int cmd_rho(const Options& o, json& report) {
  const ModuleElement x = load(o.x_file);
  const ModuleElement y = load(o.y_file);
  require_same_shape(x, y, "rho");
  const DerivativePair r = rho_pair(x, y);
  report["shape"] = shape_json(x);
  report["rho_plus"] = r.rho_plus;
  report["rho_minus"] = r.rho_minus;
  report["rho"] = r.rho_mid;
  report["witnesses"] = {{"max", state_json(r.max_witness)},
                         {"min", state_json(r.min_witness)}};
  if (!o.oracle) return kExitHolds;

  const double fd_tol = o.tol.value_or(kFiniteDifferenceTolerance);
  const double plus = rho_fd(x, y, Side::kPlus, fd_tol);
  const double minus = rho_fd(x, y, Side::kMinus, fd_tol);
  const double agreement = 1e-5 * (1.0 + module_norm(x) * module_norm(y));
  const bool agrees = std::abs(plus - r.rho_plus) <= agreement &&
                      std::abs(minus - r.rho_minus) <= agreement;
  report["oracle"] = {{"rho_fd_plus", plus},
                      {"rho_fd_minus", minus},
                      {"fd_tol", fd_tol},
                      {"agreement_tol", agreement},
                      {"agrees", agrees}};
  return agrees ? kExitHolds : kExitFails;
}

int cmd_ortho(const Options& o, json& report) {
  const std::optional<Relation> rel = parse_relation(o.relation);
  const ModuleElement x = load(o.x_file);
  const ModuleElement y = load(o.y_file);
  require_same_shape(x, y, "ortho");
  const double tol = o.tol.value_or(kDefaultOrthoTolerance);
  const OrthoReport rep = decide(*rel, x, y, tol);
  report["relation"] = std::string(relation_name(rep.relation));
  report["holds"] = rep.holds;
  report["margin"] = rep.margin;
  report["tol"] = rep.tol;
  if (const StateWitness* p = rep.state()) {
    report["witness"] = {{"kind", "state"}, {"density", matrix_to_json(p->density())}};
  } else if (const Complex* xi = rep.unit()) {
    report["witness"] = {{"kind", "unit"}, {"xi", complex_json(*xi)}};
  } else {
    report["witness"] = nullptr;
  }
  if (rep.holds && (*rel == Relation::kBj || *rel == Relation::kBjReal)) {
    const BjVariant variant =
        *rel == Relation::kBj ? BjVariant::kComplex : BjVariant::kReal;
    report["bhatia_semrl_vector"] = vector_json(bhatia_semrl_witness(x, y, variant, tol));
  }
  return rep.holds ? kExitHolds : kExitFails;
}

int cmd_daugavet(const Options& o, json& report) {
  const ModuleElement x = load(o.x_file);
  const double tol = o.tol.value_or(kDefaultDaugavetTolerance);
  const ModuleDaugavetReport m = module_daugavet_check(x, o.alpha, o.beta, tol);
  report["shape"] = shape_json(x);
  report["module"] = {{"alpha", m.alpha},         {"beta", m.beta},
                      {"lhs", m.lhs},             {"rhs", m.rhs},
                      {"residual", m.residual},   {"cube_norm", m.cube_norm},
                      {"norm_cubed", m.norm_cubed}, {"cube_residual", m.cube_residual},
                      {"holds", m.holds}};
  bool holds = m.holds;

  const RhoCubeReport c = rho_cube_identity(x, tol);
  json cube = {{"norm4", c.norm4},       {"rho_plus", c.rho_plus},
               {"rho_minus", c.rho_minus}, {"face_dim", c.face_dim},
               {"residual", c.residual}, {"holds", c.holds}};
  cube["max_witness_square"] =
      c.max_witness_square ? json(*c.max_witness_square) : json(nullptr);
  cube["min_witness_square"] =
      c.min_witness_square ? json(*c.min_witness_square) : json(nullptr);
  report["rho_cube"] = cube;
  holds = holds && c.holds;

  if (module_norm(x) > kZeroNorm) {
    const OperatorDaugavetReport op = operator_daugavet_witness(x.matrix(), tol);
    report["operator"] = {{"witness", vector_json(op.witness)},
                          {"norm_t", op.norm_t},
                          {"norm_ttt", op.norm_ttt},
                          {"norm_sum", op.norm_sum},
                          {"sum_residual", op.sum_residual},
                          {"attain_t", op.attain_t},
                          {"attain_ttt", op.attain_ttt},
                          {"cube_residual", op.cube_residual},
                          {"direction_gap", op.direction_gap},
                          {"compactness_hypothesis_vacuous",
                           op.compactness_hypothesis_vacuous},
                          {"holds", op.holds}};
    holds = holds && op.holds;
  } else {
    report["operator"] = nullptr;
  }
  report["holds"] = holds;
  return holds ? kExitHolds : kExitFails;
}

int cmd_check(const Options& o, json& report) {
  const verify::SuiteReport r = o.suite == "remark"
                                    ? verify::remark_suite()
                                    : verify::property_suite(o.seed, o.trials);
  report = suite_report_json(r);
  report["command"] = "check";
  report["suite"] = o.suite;
  return r.all_pass() ? kExitHolds : kExitFails;
}

json error_json(const char* kind, const std::exception& e) {
  return {{"kind", kind}, {"message", e.what()}};
}

}  // namespace

json suite_report_json(const verify::SuiteReport& report) {
  json props = json::array();
  for (const verify::PropertyResult& p : report.properties) {
    props.push_back({{"name", p.name},
                     {"basis", p.basis},
                     {"informational", p.informational},
                     {"checked", p.checked},
                     {"passed", p.passed},
                     {"pass", p.pass()},
                     {"worst_slack", std::isfinite(p.worst_slack) ? json(p.worst_slack)
                                                                  : json(nullptr)}});
  }
  json kinds = json::object();
  for (const auto& [name, count] : report.instance_kinds) kinds[name] = count;
  return {{"seed", report.seed},
          {"trials", report.trials},
          {"all_pass", report.all_pass()},
          {"instance_kinds", kinds},
          {"properties", props}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norm derivatives, orthogonality and Daugavet checks on M_{m,n}(C)",
               "modnorm"};
  app.require_subcommand(1);
  Options o;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--json-out", o.json_out, "Also write the report to FILE");
  };

  CLI::App* rho = app.add_subcommand("rho", "One-sided norm derivatives of x along y");
  rho->add_option("--x", o.x_file, "Matrix file for x")->required();
  rho->add_option("--y", o.y_file, "Matrix file for y")->required();
  rho->add_flag("--oracle", o.oracle, "Cross-check against finite differences");
  add_tol(rho);

  CLI::App* ortho = app.add_subcommand("ortho", "Decide an orthogonality relation");
  ortho->add_option("--x", o.x_file, "Matrix file for x")->required();
  ortho->add_option("--y", o.y_file, "Matrix file for y")->required();
  ortho->add_option("--relation", o.relation, "ip | bj | bj-real | bj-strong | rho | parallel")
      ->required()
      ->check(CLI::IsMember({"ip", "bj", "bj-real", "bj-strong", "rho", "parallel"}));
  add_tol(ortho);

  CLI::App* daug = app.add_subcommand("daugavet", "Daugavet identities for x and x<x,x>");
  daug->add_option("--x", o.x_file, "Matrix file for x")->required();
  daug->add_option("--alpha", o.alpha, "Positive weight of x")->check(CLI::PositiveNumber);
  daug->add_option("--beta", o.beta, "Positive weight of x<x,x>")->check(CLI::PositiveNumber);
  add_tol(daug);

  CLI::App* check = app.add_subcommand("check", "Run the seeded property suite");
  check->add_option("--suite", o.suite, "all | remark")
      ->check(CLI::IsMember({"all", "remark"}));
  check->add_option("--seed", o.seed, "Random seed");
  check->add_option("--trials", o.trials, "Number of random instances")
      ->check(CLI::Range(1, 1000000));
  check->add_option("--json-out", o.json_out, "Also write the report to FILE");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  json report;
  int code = kExitHolds;
  try {
    if (rho->parsed()) {
      report["command"] = "rho";
      code = cmd_rho(o, report);
    } else if (ortho->parsed()) {
      report["command"] = "ortho";
      code = cmd_ortho(o, report);
    } else if (daug->parsed()) {
      report["command"] = "daugavet";
      code = cmd_daugavet(o, report);
    } else {
      code = cmd_check(o, report);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ShapeMismatch& e) {
    report["error"] = error_json("shape_mismatch", e);
    code = kExitShape;
  } catch (const Error& e) {
    report["error"] = error_json("numerical", e);
    code = kExitNumeric;
  }

  const std::string text = report.dump(2);
  out << text << '\n';
  if (!o.json_out.empty()) {
    std::ofstream file(o.json_out);
    if (!file) {
      err << "error: cannot write " << o.json_out << '\n';
      return kExitParse;
    }
    file << text << '\n';
  }
  return code;
}

}  // namespace modnorm::cli
