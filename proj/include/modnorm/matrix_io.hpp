#pragma once

// Matrix files: {"rows": m, "cols": n, "entries": [[re, im], ...]}, row-major.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "modnorm/matcore.hpp"

namespace modnorm {

/// Raised for malformed matrix documents; the CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Shortest decimal form that parses back to the same double.
std::string format_matrix(const ComplexMatrix& m);
ComplexMatrix parse_matrix(const std::string& text);

}  // namespace modnorm
