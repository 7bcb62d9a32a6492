// Acceptance checks; one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "qsym/harness.hpp"
#include "qsym/report.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifndef QSYM_CLI_PATH
#error "QSYM_CLI_PATH must name the qsym executable"
#endif

using namespace qsym;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string sci(const Real& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", static_cast<double>(x));
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Run {
  std::vector<IdentityReport> reports;
  double seconds = 0;
};

Run run(std::vector<std::string> ids, int trials, int precision = 64,
        Regime regime = Regime::RealGeneric, bool timing = false) {
  SuiteOptions o;
  o.selection = std::move(ids);
  o.trials = trials;
  o.precision_digits = precision;
  o.regime = regime;
  o.timing = timing;
  const auto t0 = std::chrono::steady_clock::now();
  Run r;
  r.reports = run_suite(o);
  r.seconds = seconds_since(t0);
  return r;
}

const IdentityReport& get(const Run& r, const std::string& id) {
  for (const auto& x : r.reports)
    if (x.id == id) return x;
  throw std::runtime_error("missing report " + id);
}

// Every report completed (no failed trials) with max_rel below `bound`.
Outcome all_below(const Run& r, const Real& bound, int min_trials) {
  Outcome out{true, ""};
  Real worst = 0;
  std::string worst_id;
  for (const auto& x : r.reports) {
    bool failed_trial = false;
    for (const auto& [k, v] : x.worst_params)
      if (k == "error") failed_trial = true;
    if (failed_trial || x.trials < min_trials || !(x.max_rel_residual < bound)) {
      out.pass = false;
      out.detail += x.id + (failed_trial ? " errored; " : " exceeded; ");
    }
    if (x.max_rel_residual >= worst) {
      worst = x.max_rel_residual;
      worst_id = x.id;
    }
  }
  out.detail += "worst " + sci(worst) + " (" + worst_id + ")";
  return out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + QSYM_CLI_PATH + "\" " + args;
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::vector<std::string> kBasic = {"QBINREC", "QBID1", "QBID2", "QBID3",
                                            "QBID4",   "QPFID2", "QPFID3", "ID1",
                                            "ID2",     "QID1",  "QID2"};

Outcome criterion1() {
  Run r = run(kBasic, 25);
  Outcome o = all_below(r, Real("1e-32"), 25);
  o.pass = o.pass && r.reports.size() == kBasic.size() && r.seconds < 30;
  o.detail += ", " + std::to_string(r.reports.size()) + " identities x 25 draws in " +
              std::to_string(r.seconds).substr(0, 5) + " s";
  return o;
}

Outcome criterion2() {
  PrecisionScope scope(64 + QContext::kGuardDigits);
  Run r = run({"HID1"}, 10, 64, Regime::SmallQ);
  const Real bound = Real(100) * boost::multiprecision::pow(Real(10), Real(-64));
  Outcome o = all_below(r, bound, 10);
  o.detail += " vs bound " + sci(bound);
  return o;
}

Run g_q3j64, g_q6j64;

Outcome criterion3() {
  g_q3j64 = run({"RF-VDW", "RF-REC"}, 10);
  Outcome o = all_below(g_q3j64, Real("1e-32"), 10);
  // VdW against the recursion follows from both agreeing with Racah-Fock.
  const Real pair = get(g_q3j64, "RF-VDW").max_rel_residual + get(g_q3j64, "RF-REC").max_rel_residual;
  o.pass = o.pass && pair < Real("1e-32") && g_q3j64.seconds < 60;
  o.detail += ", VdW-vs-recursion bound " + sci(pair) + ", " +
              std::to_string(g_q3j64.seconds).substr(0, 5) + " s";
  return o;
}

Outcome criterion4() { return all_below(run({"ORTH1", "ORTH2"}, 10), Real("1e-32"), 10); }

Outcome criterion5() { return all_below(run({"YBR-MODULE"}, 5), Real("1e-32"), 5); }

Outcome criterion6() {
  g_q6j64 = run({"Q6J-ORACLE"}, 10);
  return all_below(g_q6j64, Real("1e-30"), 10);
}

Outcome criterion7() {
  Run r = run({"QSORTH", "QSRACAH", "QSBE", "QSYB"}, 10, 64, Regime::RealGeneric, true);
  Outcome o = all_below(r, Real("1e-30"), 10);
  // Summed single-thread time over the ten pentagon draws.
  const double pentagon_s = *get(r, "QSBE").wall_time_ms / 1000.0;
  o.pass = o.pass && pentagon_s < 20;
  o.detail += ", pentagon draw set " + std::to_string(pentagon_s).substr(0, 5) + " s";
  return o;
}

Outcome criterion8() {
  return all_below(run({"LEMMA2", "LEMMA3", "LEMMA5", "LEMMA6", "LEMMA7"}, 10), Real("1e-32"), 10);
}

Outcome criterion9() { return all_below(run({"INTERTWINE"}, 10), Real("1e-32"), 10); }

Outcome criterion10() {
  Run q3j128 = run({"RF-VDW", "RF-REC"}, 10, 128);
  Run q6j128 = run({"Q6J-ORACLE"}, 10, 128);
  Outcome o{true, ""};
  auto compare = [&](const Run& lo, const Run& hi, const std::string& id) {
    const Real a = get(lo, id).max_rel_residual, b = get(hi, id).max_rel_residual;
    const bool ok = a > 0 && b <= a * Real("1e-20");
    o.pass = o.pass && ok;
    o.detail += id + " " + sci(a) + " -> " + sci(b) + (ok ? "; " : " (insufficient); ");
  };
  compare(g_q3j64, q3j128, "RF-VDW");
  compare(g_q3j64, q3j128, "RF-REC");
  compare(g_q6j64, q6j128, "Q6J-ORACLE");
  return o;
}

Outcome criterion11() {
  const std::string a = "acceptance_seed7_a.json", b = "acceptance_seed7_b.json";
  const int ea = run_cli("verify --suite all --seed 7 --format json --out " + a);
  const int eb = run_cli("verify --suite all --seed 7 --format json --out " + b);
  const std::string ja = slurp(a), jb = slurp(b);
  Outcome o;
  o.pass = ea == 0 && eb == 0 && !ja.empty() && ja == jb;
  o.detail = "exit codes " + std::to_string(ea) + "/" + std::to_string(eb) + ", " +
             std::to_string(ja.size()) + " bytes, " + (ja == jb ? "identical" : "different");
  std::remove(a.c_str());
  std::remove(b.c_str());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"q-binomial, bracket and Pochhammer identities < 1e-32, 25 draws, under 30 s", criterion1},
      {"q-Gauss summation in the small-q regime < 100 poch_tail_eps", criterion2},
      {"q3j Racah-Fock / Van der Waerden / recursion agreement < 1e-32, under 60 s", criterion3},
      {"q3j orthogonality < 1e-32", criterion4},
      {"module-level Yang-Baxter < 1e-32 at depth 4", criterion5},
      {"q6j closed formula vs contraction < 1e-30", criterion6},
      {"q6j orthogonality, Racah, pentagon, Yang-Baxter < 1e-30; pentagon under 20 s",
       criterion7},
      {"q6j summation lemmas < 1e-32", criterion8},
      {"q3j intertwiner property < 1e-32", criterion9},
      {"precision 128 shrinks criteria 3 and 6 residuals by 1e20", criterion10},
      {"verify --suite all --seed 7 is byte-identical across runs", criterion11},
  };
  std::cout << "threads: " << omp_get_max_threads() << std::endl;
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
              << criteria[i].first << " | " << o.detail << " ["
              << std::to_string(seconds_since(t0)).substr(0, 5) << " s]" << std::endl;
  }
  std::cout << (criteria.size() - static_cast<size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
