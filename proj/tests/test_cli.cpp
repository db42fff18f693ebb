#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "modnorm/cli.hpp"
#include "modnorm/matrix_io.hpp"
#include "modnorm/sampler.hpp"

using namespace modnorm;
using namespace testing_helpers;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("modnorm_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const ComplexMatrix& m) {
    const std::string path = (dir_ / name).string();
    write_matrix_file(path, m);
    return path;
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "modnorm");
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  json output() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST(MatrixIo, RoundTripIsBitExact) {
  verify::Sampler s(1);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix m = s.gaussian_matrix(s.integer(1, 6), s.integer(1, 6));
    m(0, 0) = Complex(0.1, -1.0 / 3.0);
    const ComplexMatrix back = parse_matrix(format_matrix(m));
    ASSERT_EQ(back.rows(), m.rows());
    ASSERT_EQ(back.cols(), m.cols());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      EXPECT_EQ(back(i).real(), m(i).real());
      EXPECT_EQ(back(i).imag(), m(i).imag());
    }
  }
}

TEST(MatrixIo, RowMajorLayout) {
  const ComplexMatrix m =
      parse_matrix(R"({"rows": 2, "cols": 3, "entries": [[1,0],[2,0],[3,0],[4,0],[5,0],[6,1]]})");
  EXPECT_EQ(m(0, 2), Complex(3.0));
  EXPECT_EQ(m(1, 0), Complex(4.0));
  EXPECT_EQ(m(1, 2), Complex(6.0, 1.0));
}

TEST(MatrixIo, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_matrix("not json"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": 2, "cols": 2, "entries": [[1,0]]})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [[1]]})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": 0, "cols": 1, "entries": []})"), ParseError);
  EXPECT_THROW(parse_matrix(R"({"rows": 1, "cols": 1, "entries": [["a", 0]]})"), ParseError);
  EXPECT_THROW(parse_matrix("[1, 2]"), ParseError);
}

TEST_F(CliTest, RhoRemark) {
  const std::string t = write("t.json", ComplexMatrix::Identity(2, 2));
  const std::string s = write("s.json", diag({-1.0, 1.0}));
  EXPECT_EQ(run({"rho", "--x", t, "--y", s}), 0);
  const json j = output();
  EXPECT_NEAR(j["rho_plus"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["rho_minus"].get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(j["rho"].get<double>(), 0.0, 1e-12);
  EXPECT_TRUE(j["witnesses"]["max"].is_object());
}

TEST_F(CliTest, RhoZeroElement) {
  const std::string z = write("z.json", ComplexMatrix::Zero(2, 2));
  const std::string s = write("s.json", diag({-1.0, 1.0}));
  EXPECT_EQ(run({"rho", "--x", z, "--y", s}), 0);
  const json j = output();
  EXPECT_EQ(j["rho_plus"].get<double>(), 0.0);
  EXPECT_EQ(j["rho_minus"].get<double>(), 0.0);
  EXPECT_TRUE(j["witnesses"]["max"].is_null());
}

TEST_F(CliTest, RhoOracleAgrees) {
  verify::Sampler s(2);
  const std::string x = write("x.json", s.gaussian_matrix(3, 4));
  const std::string y = write("y.json", s.gaussian_matrix(3, 4));
  EXPECT_EQ(run({"rho", "--x", x, "--y", y, "--oracle"}), 0);
  const json j = output();
  const double tol = j["oracle"]["agreement_tol"].get<double>();
  EXPECT_TRUE(j["oracle"]["agrees"].get<bool>());
  EXPECT_LE(std::abs(j["oracle"]["rho_fd_plus"].get<double>() - j["rho_plus"].get<double>()), tol);
  EXPECT_LE(std::abs(j["oracle"]["rho_fd_minus"].get<double>() - j["rho_minus"].get<double>()), tol);
}

TEST_F(CliTest, OrthoExitCodes) {
  const std::string t = write("t.json", ComplexMatrix::Identity(2, 2));
  const std::string r = write("r.json", diag({-1.0, 0.0}));
  const std::string z = write("z.json", ComplexMatrix::Zero(2, 2));
  EXPECT_EQ(run({"ortho", "--relation", "bj-strong", "--x", t, "--y", r}), 0);
  EXPECT_TRUE(output()["holds"].get<bool>());
  EXPECT_EQ(output()["witness"]["kind"], "state");

  EXPECT_EQ(run({"ortho", "--relation", "rho", "--x", t, "--y", r}), 1);
  EXPECT_FALSE(output()["holds"].get<bool>());

  EXPECT_EQ(run({"ortho", "--relation", "ip", "--x", t, "--y", z}), 0);

  EXPECT_EQ(run({"ortho", "--relation", "bj", "--x", t, "--y", r}), 0);
  EXPECT_EQ(output()["bhatia_semrl_vector"].size(), 2u);

  EXPECT_EQ(run({"ortho", "--relation", "parallel", "--x", t, "--y", t}), 0);
  EXPECT_EQ(output()["witness"]["kind"], "unit");
}

TEST_F(CliTest, TolOverride) {
  const std::string t = write("t.json", ComplexMatrix::Identity(2, 2));
  ComplexMatrix near = diag({-1.0, 1e-6});
  const std::string r = write("r.json", near);
  // ρ+ = 1e-6, ρ− = −1: rho-orthogonality fails at any small tol.
  EXPECT_EQ(run({"ortho", "--relation", "ip", "--x", t, "--y", r, "--tol", "1e-9"}), 1);
  EXPECT_EQ(output()["tol"].get<double>(), 1e-9);
  ComplexMatrix tiny = diag({1e-8, 0.0});
  const std::string w = write("w.json", tiny);
  EXPECT_EQ(run({"ortho", "--relation", "ip", "--x", t, "--y", w}), 1);
  EXPECT_EQ(run({"ortho", "--relation", "ip", "--x", t, "--y", w, "--tol", "1e-7"}), 0);
}

TEST_F(CliTest, ParseAndShapeErrors) {
  const std::string t = write("t.json", ComplexMatrix::Identity(2, 2));
  const std::string wide = write("wide.json", ComplexMatrix::Identity(2, 3));
  const std::string bad = (dir_ / "bad.json").string();
  std::ofstream(bad) << "{\"rows\": 2}";

  EXPECT_EQ(run({"rho", "--x", t, "--y", bad}), 2);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_FALSE(err_.str().empty());

  EXPECT_EQ(run({"rho", "--x", t, "--y", (dir_ / "missing.json").string()}), 2);
  EXPECT_EQ(run({"ortho", "--relation", "nope", "--x", t, "--y", t}), 2);
  EXPECT_EQ(run({"rho", "--x", t}), 2);
  EXPECT_EQ(run({"frobnicate"}), 2);
  EXPECT_EQ(run({"daugavet", "--x", t, "--alpha", "-1"}), 2);

  EXPECT_EQ(run({"rho", "--x", t, "--y", wide}), 3);
  const json j = output();
  EXPECT_EQ(j["error"]["kind"], "shape_mismatch");
}

TEST_F(CliTest, Daugavet) {
  const std::string i = write("i.json", ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(run({"daugavet", "--x", i}), 0);
  json j = output();
  EXPECT_NEAR(j["module"]["residual"].get<double>(), 0.0, 1e-15);
  EXPECT_TRUE(j["holds"].get<bool>());

  const std::string d = write("d.json", diag({2.0, 1.0}));
  EXPECT_EQ(run({"daugavet", "--x", d, "--alpha", "0.5", "--beta", "2"}), 0);
  j = output();
  EXPECT_NEAR(j["operator"]["norm_t"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["operator"]["norm_ttt"].get<double>(), 8.0, 1e-12);
  EXPECT_NEAR(j["operator"]["norm_sum"].get<double>(), 10.0, 1e-12);
  EXPECT_NEAR(std::hypot(j["operator"]["witness"][0][0].get<double>(),
                         j["operator"]["witness"][0][1].get<double>()),
              1.0, 1e-12);
  EXPECT_TRUE(j["operator"]["compactness_hypothesis_vacuous"].get<bool>());

  verify::Sampler s(3);
  const std::string x = write("x.json", s.gaussian_matrix(4, 3));
  EXPECT_EQ(run({"daugavet", "--x", x, "--alpha", "3", "--beta", "0.1"}), 0);
  EXPECT_LE(output()["module"]["residual"].get<double>(), 1e-9);
}

TEST_F(CliTest, CheckWritesJsonOut) {
  const std::string out = (dir_ / "report.json").string();
  EXPECT_EQ(run({"check", "--suite", "remark", "--json-out", out}), 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  EXPECT_TRUE(j["all_pass"].get<bool>());
  EXPECT_EQ(j, output());

  EXPECT_EQ(run({"check", "--seed", "3", "--trials", "7"}), 0);
  EXPECT_EQ(output()["trials"].get<int>(), 7);
  EXPECT_EQ(run({"check", "--trials", "0"}), 2);
}
