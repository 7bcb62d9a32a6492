#pragma once

#include "qsym/complex.hpp"
#include "qsym/registry.hpp"
#include "qsym/sampler.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qsym {

enum class Execution { Serial, Parallel };

struct SuiteOptions {
  std::vector<std::string> selection{"*"};  // glob patterns, case-insensitive; "all" = "*"
  Regime regime = Regime::RealGeneric;
  std::uint64_t seed = 42;
  int precision_digits = 64;
  std::optional<int> trials;  // replaces each identity's default trial count
  bool timing = false;        // fill wall_time_ms
  Execution execution = Execution::Parallel;
  int max_retries = 20;       // redraws after a non-generic draw
};

struct IdentityReport {
  std::string id;
  int trials = 0;
  Real max_abs_residual = 0;
  Real max_rel_residual = 0;
  ParamList worst_params;  // parameters of the trial with the largest relative residual
  bool pass = false;
  int precision_digits = 0;
  std::uint64_t seed = 0;
  std::string regime;
  std::optional<double> wall_time_ms;  // summed over trials
};

// Registry entries matched by at least one pattern, in registry order.
// DomainError("no matching identities ...") when some pattern matches nothing.
std::vector<const IdentityDescriptor*> select_identities(const std::vector<std::string>& patterns);

// Runs every selected identity for its trial count. Trials are independent and
// seeded from (seed, id, trial, attempt), so the result does not depend on the
// execution mode or thread count. Reports are sorted by id. A trial that still
// draws non-generic parameters after max_retries redraws, or that fails with any
// other error, fails its identity; the message lands in worst_params["error"].
std::vector<IdentityReport> run_suite(const SuiteOptions& options);

// run_suite on an explicit list of descriptors; options.selection is ignored.
std::vector<IdentityReport> run_identities(const std::vector<const IdentityDescriptor*>& selected,
                                           const SuiteOptions& options);

bool all_pass(const std::vector<IdentityReport>& reports);

// 10^(-p/2) at the harness working precision.
Real default_rel_tolerance(int precision_digits);

}  // namespace qsym
