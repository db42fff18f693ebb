#pragma once

// Command-line front end. Subcommands: rho, ortho, daugavet, check.
//
// Exit codes: 0 success / relation holds / all checks pass, 1 relation fails
// or a check fails, 2 bad arguments or unreadable matrix files (message on
// stderr, no JSON), 3 shape mismatch, 4 any other numerical error. Codes 3
// and 4 still print a JSON report with an "error" object.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "modnorm/property_suite.hpp"

namespace modnorm::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitShape = 3;
inline constexpr int kExitNumeric = 4;

/// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json suite_report_json(const verify::SuiteReport& report);

}  // namespace modnorm::cli
