#include "qsym/complex.hpp"
#include "qsym/context.hpp"
#include "qsym/errors.hpp"
#include "qsym/harness.hpp"
#include "qsym/q3j.hpp"
#include "qsym/q6j.hpp"
#include "qsym/qarith.hpp"
#include "qsym/report.hpp"
#include "qsym/verma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct Config {
  int precision = 64;
  std::uint64_t seed = 42;
  std::string regime = "real";
  std::string out;
  std::string format = "text";
};

struct EvalArgs {
  std::string kind;
  std::string q = "2";
  std::optional<std::string> l1, l2, l3, lambda, x;
  std::optional<int> j, k1, k2, k, n, j12, j23, j123;
};

struct VerifyArgs {
  std::vector<std::string> suite{"all"};
  std::optional<int> trials;
  bool timing = false;
  bool serial = false;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file " + cfg.out);
  f << text;
}

template <class T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& kind) {
  if (!v) throw InvalidInput("eval " + kind + " requires " + flag);
  return *v;
}

qsym::Complex weight(const std::optional<std::string>& v, const char* flag,
                     const std::string& kind) {
  return qsym::parse_complex(need(v, flag, kind));
}

int run_eval(const Config& cfg, const EvalArgs& a) {
  using namespace qsym;
  PrecisionScope scope(cfg.precision + QContext::kGuardDigits);
  QContext ctx(parse_complex(a.q), cfg.precision);
  const std::string& kind = a.kind;
  Complex value;
  if (kind == "q3j-psi" || kind == "q3j-pi") {
    CGKey key;
    key.l1 = weight(a.l1, "--l1", kind);
    key.l2 = weight(a.l2, "--l2", kind);
    key.J = need(a.j, "--j", kind);
    key.k1 = need(a.k1, "--k1", kind);
    key.k2 = need(a.k2, "--k2", kind);
    key.variant = kind == "q3j-psi" ? CGVariant::Psi : CGVariant::Pi;
    value = q3j(ctx, key);
  } else if (kind == "q6j") {
    SixJKey key;
    key.l1 = weight(a.l1, "--l1", kind);
    key.l2 = weight(a.l2, "--l2", kind);
    key.l3 = weight(a.l3, "--l3", kind);
    key.J12 = need(a.j12, "--j12", kind);
    key.J23 = need(a.j23, "--j23", kind);
    key.J123 = need(a.j123, "--j123", kind);
    value = q6j_closed(ctx, key);
  } else if (kind == "rmatrix") {
    value = rmat_elem(ctx, weight(a.l1, "--l1", kind), weight(a.l2, "--l2", kind),
                      need(a.k1, "--k1", kind), need(a.k2, "--k2", kind), need(a.n, "--n", kind));
  } else if (kind == "alpha") {
    value = alpha(ctx, weight(a.lambda, "--lambda", kind), need(a.k, "--k", kind));
  } else if (kind == "qnum") {
    value = qnum(ctx, weight(a.x, "--x", kind));
  } else {
    throw InvalidInput("unknown eval kind " + kind);
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["precision"] = cfg.precision;
    j["re"] = to_string(value.real(), cfg.precision);
    j["im"] = to_string(value.imag(), cfg.precision);
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, to_string(value, cfg.precision) + "\n");
  }
  return kExitPass;
}

int run_verify(const Config& cfg, const VerifyArgs& v) {
  using namespace qsym;
  SuiteOptions o;
  o.selection.clear();
  for (const std::string& s : v.suite) {
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) o.selection.push_back(part);
  }
  o.regime = *parse_regime(cfg.regime);
  o.seed = cfg.seed;
  o.precision_digits = cfg.precision;
  o.trials = v.trials;
  o.timing = v.timing;
  o.execution = v.serial ? Execution::Serial : Execution::Parallel;
  SuiteReport report = make_suite_report(o, run_suite(o));
  emit(cfg, cfg.format == "json" ? to_json(report) : to_text(report));
  return all_pass(report.results) ? kExitPass : kExitFail;
}

int run_list(const Config& cfg) {
  if (cfg.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : qsym::registry())
      arr.push_back({{"id", d.id}, {"reference", d.reference}, {"default_trials", d.default_trials}});
    emit(cfg, arr.dump(2) + "\n");
  } else {
    emit(cfg, qsym::identity_listing());
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum 3j/6j symbols for Uq(sl2) Verma modules and identity verification"};
  app.require_subcommand(1);
  Config cfg;
  if (const char* env = std::getenv("QSYM_PRECISION")) {
    try {
      size_t used = 0;
      cfg.precision = std::stoi(env, &used);
      if (used != std::strlen(env)) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: QSYM_PRECISION is not an integer: '" << env << "'\n";
      return kExitInvalid;
    }
  }
  app.add_option("--precision", cfg.precision,
                 "working precision in decimal digits (>= 16; env QSYM_PRECISION)")
      ->check(CLI::Range(16, 100000));
  app.add_option("--seed", cfg.seed, "suite seed");
  app.add_option("--regime", cfg.regime, "parameter regime")
      ->check(CLI::IsMember({"real", "complex", "smallq"}));
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a single symbol");
  eval->fallthrough();
  eval->add_option("kind", ea.kind, "q3j-psi | q3j-pi | q6j | rmatrix | alpha | qnum")
      ->required()
      ->check(CLI::IsMember({"q3j-psi", "q3j-pi", "q6j", "rmatrix", "alpha", "qnum"}));
  eval->add_option("--q", ea.q, "deformation parameter (default 2)");
  eval->add_option("--l1", ea.l1, "weight lambda1");
  eval->add_option("--l2", ea.l2, "weight lambda2");
  eval->add_option("--l3", ea.l3, "weight lambda3");
  eval->add_option("--lambda", ea.lambda, "weight for alpha");
  eval->add_option("--x", ea.x, "argument of the q-number");
  eval->add_option("--j", ea.j, "defect J");
  eval->add_option("--k1", ea.k1, "depth k1");
  eval->add_option("--k2", ea.k2, "depth k2");
  eval->add_option("--k", ea.k, "depth k");
  eval->add_option("--n", ea.n, "R-matrix depth shift");
  eval->add_option("--j12", ea.j12, "defect J12");
  eval->add_option("--j23", ea.j23, "defect J23");
  eval->add_option("--j123", ea.j123, "defect J123");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->fallthrough();
  verify->add_option("--suite", va.suite, "identity ids or glob patterns, comma separated; all = *");
  verify->add_option("--trials", va.trials, "trials per identity")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", va.timing, "record wall_time_ms");
  verify->add_flag("--serial", va.serial, "run the serial reference path");

  auto* list = app.add_subcommand("list", "print the identity ledger");
  list->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (cfg.precision < 16 || cfg.precision > 100000) {
    std::cerr << "error: precision must be between 16 and 100000 digits\n";
    return kExitInvalid;
  }

  try {
    if (*eval) return run_eval(cfg, ea);
    if (*verify) return run_verify(cfg, va);
    return run_list(cfg);
  } catch (const qsym::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}
