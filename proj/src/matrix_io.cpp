#include "modnorm/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace modnorm {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

namespace {

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("matrix entry ") + what + " is not a number");
  return j.get<double>();
}

Eigen::Index dimension(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("matrix document needs integer \"") + key + "\"");
  }
  const auto v = j[key].get<long long>();
  if (v < 1) throw ParseError(std::string("matrix \"") + key + "\" must be positive");
  return static_cast<Eigen::Index>(v);
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix document must be a JSON object");
  const Eigen::Index rows = dimension(j, "rows");
  const Eigen::Index cols = dimension(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw ParseError("matrix document needs an \"entries\" array");
  }
  const json& entries = j["entries"];
  if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
    throw ParseError("matrix has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("matrix entries must be [re, im] pairs");
    }
    m(k / cols, k % cols) = Complex(number_at(e[0], "real part"), number_at(e[1], "imaginary part"));
  }
  return m;
}

std::string format_matrix(const ComplexMatrix& m) { return matrix_to_json(m).dump(); }

ComplexMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << format_matrix(m) << '\n';
}

}  // namespace modnorm
