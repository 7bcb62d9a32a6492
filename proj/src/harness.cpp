#include "qsym/harness.hpp"

#include "qsym/context.hpp"
#include "qsym/errors.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <utility>

namespace qsym {

namespace {

struct TrialSlot {
  Residual residual;
  ParamList params;
  std::string error;
  double ms = 0;
};

TrialSlot run_trial(const IdentityDescriptor& d, const SuiteOptions& o,
                    const ContextOptions& copts, int trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialSlot slot;
  std::string last;
  bool done = false;
  for (int attempt = 0; attempt <= o.max_retries && !done; ++attempt) {
    Sampler sampler(o.regime, o.seed, d.id, trial, attempt);
    try {
      const Complex q = sampler.q();
      QContext ctx(q, copts);
      TrialOutcome out = d.evaluate(ctx, sampler);
      slot.params = {{"trial", std::to_string(trial)},
                     {"attempt", std::to_string(attempt)},
                     {"q", to_string(q, ctx.working_digits())}};
      slot.params.insert(slot.params.end(), out.params.begin(), out.params.end());
      if (!out.residual.where.empty()) slot.params.emplace_back("location", out.residual.where);
      slot.residual = std::move(out.residual);
      done = true;
    } catch (const NonGenericError& e) {
      last = e.what();
    } catch (const std::exception& e) {
      slot.params = {{"trial", std::to_string(trial)}, {"attempt", std::to_string(attempt)}};
      slot.error = e.what();
      break;
    }
  }
  if (!done && slot.error.empty()) {
    slot.params = {{"trial", std::to_string(trial)}};
    slot.error = "no generic draw after " + std::to_string(o.max_retries) + " retries: " + last;
  }
  slot.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
  return slot;
}

}  // namespace

Real default_rel_tolerance(int precision_digits) {
  PrecisionScope scope(precision_digits + QContext::kGuardDigits);
  return boost::multiprecision::pow(Real(10), Real(-precision_digits) / 2);
}

std::vector<const IdentityDescriptor*> select_identities(const std::vector<std::string>& patterns) {
  if (patterns.empty()) throw DomainError("no matching identities: empty selection");
  std::vector<bool> chosen(registry().size(), false);
  for (const std::string& raw : patterns) {
    std::string pat = raw;
    std::string lower = raw;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "all") pat = "*";
    bool hit = false;
    for (size_t i = 0; i < registry().size(); ++i)
      if (fnmatch(pat.c_str(), registry()[i].id.c_str(), FNM_CASEFOLD) == 0) {
        chosen[i] = true;
        hit = true;
      }
    if (!hit) throw DomainError("no matching identities for '" + raw + "'");
  }
  std::vector<const IdentityDescriptor*> out;
  for (size_t i = 0; i < registry().size(); ++i)
    if (chosen[i]) out.push_back(&registry()[i]);
  return out;
}

std::vector<IdentityReport> run_suite(const SuiteOptions& o) {
  return run_identities(select_identities(o.selection), o);
}

std::vector<IdentityReport> run_identities(const std::vector<const IdentityDescriptor*>& selected,
                                           const SuiteOptions& o) {
  if (o.precision_digits < 16) throw DomainError("precision must be at least 16 digits");
  if (o.trials && *o.trials < 1) throw DomainError("trial count must be positive");
  if (o.max_retries < 0) throw DomainError("retry count must be nonnegative");

  PrecisionScope scope(o.precision_digits + QContext::kGuardDigits);
  const Real tolerance = default_rel_tolerance(o.precision_digits);
  ContextOptions copts;
  copts.precision_digits = o.precision_digits;
  copts.singular_threshold =
      boost::multiprecision::pow(Real(10), Real(-o.precision_digits) / 4);

  struct Task {
    size_t identity;
    int trial;
  };
  std::vector<Task> tasks;
  std::vector<size_t> first_task;
  for (size_t i = 0; i < selected.size(); ++i) {
    first_task.push_back(tasks.size());
    const int n = o.trials ? *o.trials : selected[i]->default_trials;
    for (int t = 0; t < n; ++t) tasks.push_back({i, t});
  }
  first_task.push_back(tasks.size());

  std::vector<TrialSlot> slots(tasks.size());
  const auto count = static_cast<long>(tasks.size());
  auto work = [&](long k) {
    const Task& t = tasks[static_cast<size_t>(k)];
    slots[static_cast<size_t>(k)] = run_trial(*selected[t.identity], o, copts, t.trial);
  };
  if (o.execution == Execution::Parallel) {
    // Dispatched from the back of the registry.
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = count - 1; k >= 0; --k) work(k);
  } else {
    for (long k = 0; k < count; ++k) work(k);
  }

  std::vector<IdentityReport> reports;
  for (size_t i = 0; i < selected.size(); ++i) {
    IdentityReport r;
    r.id = selected[i]->id;
    r.precision_digits = o.precision_digits;
    r.seed = o.seed;
    r.regime = regime_name(o.regime);
    r.trials = static_cast<int>(first_task[i + 1] - first_task[i]);
    bool failed = false;
    bool have_worst = false;
    double ms = 0;
    for (size_t k = first_task[i]; k < first_task[i + 1]; ++k) {
      const TrialSlot& s = slots[k];
      ms += s.ms;
      if (failed) continue;
      if (!s.error.empty()) {
        failed = true;
        r.worst_params = s.params;
        r.worst_params.emplace_back("error", s.error);
        continue;
      }
      if (s.residual.abs_err > r.max_abs_residual) r.max_abs_residual = s.residual.abs_err;
      if (!have_worst || s.residual.rel_err > r.max_rel_residual) {
        r.max_rel_residual = s.residual.rel_err;
        r.worst_params = s.params;
        have_worst = true;
      }
    }
    r.pass = !failed && r.max_rel_residual < tolerance;
    if (o.timing) r.wall_time_ms = ms;
    reports.push_back(std::move(r));
  }
  std::sort(reports.begin(), reports.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.id < b.id; });
  return reports;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const IdentityReport& r) { return r.pass; });
}

}  // namespace qsym
