#pragma once

#include "qsym/harness.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

struct SuiteReport {
  int precision = 64;
  std::uint64_t seed = 42;
  std::string regime = "real";
  std::vector<IdentityReport> results;
};

SuiteReport make_suite_report(const SuiteOptions& options, std::vector<IdentityReport> results);

// {"precision", "seed", "regime", "results": [...]}; residuals are JSON numbers
// rounded to double, worst_params an object of decimal strings, wall_time_ms
// null unless timing was requested. Output is a pure function of the report.
std::string to_json(const SuiteReport& report);
// Inverse of to_json up to the double rounding of the residuals.
SuiteReport suite_report_from_json(std::string_view text);

// One line per identity followed by a summary line.
std::string to_text(const SuiteReport& report);

// Registry listing: id, default trial count and reference, one per line.
std::string identity_listing();

}  // namespace qsym
