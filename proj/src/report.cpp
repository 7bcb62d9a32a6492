#include "qsym/report.hpp"

#include "qsym/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qsym {

namespace {

using nlohmann::ordered_json;

std::string short_sci(const Real& x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", static_cast<double>(x));
  return buf;
}

}  // namespace

SuiteReport make_suite_report(const SuiteOptions& options, std::vector<IdentityReport> results) {
  SuiteReport r;
  r.precision = options.precision_digits;
  r.seed = options.seed;
  r.regime = regime_name(options.regime);
  r.results = std::move(results);
  return r;
}

std::string to_json(const SuiteReport& report) {
  ordered_json results = ordered_json::array();
  for (const IdentityReport& r : report.results) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.worst_params) params[k] = v;
    ordered_json j;
    j["id"] = r.id;
    j["trials"] = r.trials;
    j["max_abs_residual"] = static_cast<double>(r.max_abs_residual);
    j["max_rel_residual"] = static_cast<double>(r.max_rel_residual);
    j["worst_params"] = std::move(params);
    j["pass"] = r.pass;
    j["precision_digits"] = r.precision_digits;
    j["seed"] = r.seed;
    j["regime"] = r.regime;
    j["wall_time_ms"] = r.wall_time_ms ? ordered_json(*r.wall_time_ms) : ordered_json(nullptr);
    results.push_back(std::move(j));
  }
  ordered_json top;
  top["precision"] = report.precision;
  top["seed"] = report.seed;
  top["regime"] = report.regime;
  top["results"] = std::move(results);
  return top.dump(2) + "\n";
}

SuiteReport suite_report_from_json(std::string_view text) {
  ordered_json top;
  try {
    top = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
  try {
    SuiteReport out;
    out.precision = top.at("precision").get<int>();
    out.seed = top.at("seed").get<std::uint64_t>();
    out.regime = top.at("regime").get<std::string>();
    for (const auto& j : top.at("results")) {
      IdentityReport r;
      r.id = j.at("id").get<std::string>();
      r.trials = j.at("trials").get<int>();
      r.max_abs_residual = Real(j.at("max_abs_residual").get<double>());
      r.max_rel_residual = Real(j.at("max_rel_residual").get<double>());
      for (const auto& [k, v] : j.at("worst_params").items())
        r.worst_params.emplace_back(k, v.get<std::string>());
      r.pass = j.at("pass").get<bool>();
      r.precision_digits = j.at("precision_digits").get<int>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.regime = j.at("regime").get<std::string>();
      if (!j.at("wall_time_ms").is_null()) r.wall_time_ms = j.at("wall_time_ms").get<double>();
      out.results.push_back(std::move(r));
    }
    return out;
  } catch (const ordered_json::exception& e) {
    throw DomainError(std::string("report does not match the schema: ") + e.what());
  }
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  size_t width = 4;
  for (const auto& r : report.results) width = std::max(width, r.id.size());
  int passed = 0;
  for (const IdentityReport& r : report.results) {
    passed += r.pass ? 1 : 0;
    os << (r.pass ? "PASS  " : "FAIL  ") << r.id << std::string(width - r.id.size() + 2, ' ')
       << "trials=" << r.trials << "  max_rel=" << short_sci(r.max_rel_residual)
       << "  max_abs=" << short_sci(r.max_abs_residual);
    if (r.wall_time_ms) os << "  time=" << static_cast<long>(*r.wall_time_ms + 0.5) << "ms";
    os << '\n';
    if (!r.pass)
      for (const auto& [k, v] : r.worst_params) os << "      " << k << " = " << v << '\n';
  }
  os << passed << "/" << report.results.size() << " identities passed (precision "
     << report.precision << ", seed " << report.seed << ", regime " << report.regime << ")\n";
  return os.str();
}

std::string identity_listing() {
  std::ostringstream os;
  size_t width = 0;
  for (const auto& d : registry()) width = std::max(width, d.id.size());
  for (const auto& d : registry())
    os << d.id << std::string(width - d.id.size() + 2, ' ') << d.default_trials << "  "
       << d.reference << '\n';
  return os.str();
}

}  // namespace qsym
