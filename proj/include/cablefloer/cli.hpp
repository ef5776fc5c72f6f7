#pragma once

// Command-line front end, minus flag parsing: a RunConfig in, an exit code
// and text on two streams out.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

#include "cablefloer/json_io.hpp"
#include "cablefloer/pipeline.hpp"
#include "cablefloer/report.hpp"
#include "cablefloer/selfcheck.hpp"
#include "json.hpp"

namespace cablefloer::cli {

constexpr int kOk = 0;
constexpr int kBadInput = 1;
constexpr int kInconsistent = 2;

struct RunConfig {
  std::string delta;
  std::optional<std::int64_t> tau;
  std::int64_t p = 0;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> q;
  std::string mode = "hfk";  // hfk | tau | selfcheck
  std::string format;        // json | tsv | poly | svg | ascii; empty picks the mode default
  std::string filter;        // strict | repair; empty defers to CABLEFLOER_FILTER_MODE
  std::string dump;          // typeD | typeA | complex
  std::uint64_t seed = 1;
  std::size_t count = 200;
};

/// Fills delta/tau (and p/n when not already set) from
/// {"delta": [ints], "tau": int, "p": int, "n": int}.
inline void apply_input_json(RunConfig& cfg, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("delta") || !j["delta"].is_array())
    throw InputError("input JSON needs a \"delta\" array");
  std::string delta;
  for (const auto& c : j["delta"]) {
    if (!c.is_number_integer()) throw InputError("delta entries must be integers");
    if (!delta.empty()) delta += ',';
    delta += std::to_string(c.get<std::int64_t>());
  }
  auto integer = [&](const char* key) -> std::optional<std::int64_t> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
    return j[key].get<std::int64_t>();
  };
  const auto tau = integer("tau");
  if (!tau) throw InputError("input JSON needs an integer \"tau\"");
  cfg.delta = delta;
  cfg.tau = tau;
  if (auto p = integer("p"); p && cfg.p == 0) cfg.p = *p;
  if (auto n = integer("n"); n && !cfg.n) cfg.n = n;
}

inline FilterMode filter_mode(const RunConfig& cfg) {
  std::string choice = cfg.filter;
  if (choice.empty())
    if (const char* env = std::getenv("CABLEFLOER_FILTER_MODE")) choice = env;
  if (choice.empty() || choice == "repair") return FilterMode::repair;
  if (choice == "strict") return FilterMode::strict;
  throw InputError("filter mode must be strict or repair, got '" + choice + "'");
}

/// Symmetry and Euler failures point at a pipeline bug, not at the input.
inline int checks_exit_code(const HfkChecks& checks) {
  return checks.symmetry && checks.euler ? kOk : kInconsistent;
}

namespace detail {

inline int run_tau_mode(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.tau) throw InputError("--tau is required");
  if (cfg.n && cfg.q) throw InputError("give either --n or --q, not both");
  if (!cfg.n && !cfg.q) throw InputError("--mode tau needs --n or --q");
  const auto q = cfg.q ? *cfg.q : cfg.p * *cfg.n + 1;
  const auto r = tau_pq(*cfg.tau, cfg.p, q);
  if (cfg.format == "json")
    out << nlohmann::json{{"tau", r.value}, {"branch", std::string(to_string(r.branch))}}.dump(2) << '\n';
  else
    out << r.value << '\n';
  return kOk;
}

inline int run_hfk_mode(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.tau) throw InputError("--tau is required");
  if (cfg.q) throw InputError("--q is only accepted with --mode tau; use --n");
  if (!cfg.n) throw InputError("--n is required");
  if (cfg.delta.empty()) throw InputError("--delta or --input is required");
  if (cfg.p <= 1) throw InputError("--p must be > 1");

  const auto r = compute_hfk({parse_delta(cfg.delta), *cfg.tau, cfg.p, *cfg.n}, filter_mode(cfg));

  if (cfg.dump == "typeD") {
    out << to_json(r.typeD).dump(2) << '\n';
  } else if (cfg.dump == "typeA") {
    out << to_json(r.typeA, static_cast<std::size_t>(r.typeA.max_hat_arity() + 1)).dump(2) << '\n';
  } else if (cfg.dump == "complex") {
    out << to_json(r.complex).dump(2) << '\n';
  } else if (cfg.format.empty() || cfg.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else if (cfg.format == "tsv") {
    out << to_tsv(r.ranks);
  } else if (cfg.format == "poly") {
    out << to_poly(r.ranks) << '\n';
  } else if (cfg.format == "svg") {
    out << to_svg(r.ranks);
  } else if (cfg.format == "ascii") {
    out << to_ascii(r.ranks);
  } else {
    throw InputError("unknown format '" + cfg.format + "'");
  }

  if (r.checks.table.advisory && !r.checks.table_match)
    err << "note: total rank " << r.ranks.total() << " differs from the table value " << r.checks.table.value
        << " in an advisory cell\n";
  const auto code = checks_exit_code(r.checks);
  if (code != kOk)
    err << "error: symmetry " << (r.checks.symmetry ? "ok" : "FAILED") << ", Euler characteristic "
        << (r.checks.euler ? "ok" : "FAILED") << '\n';
  return code;
}

inline int run_selfcheck_mode(const RunConfig& cfg, std::ostream& out) {
  const auto rep = cablefloer::run_selfcheck(cfg.seed, cfg.count);
  if (cfg.format == "json") {
    nlohmann::json j{{"cases", rep.cases}, {"checked", rep.checked}, {"ok", rep.ok()}};
    j["failures"] = nlohmann::json::array();
    for (const auto& f : rep.failures) j["failures"].push_back({{"property", f.property}, {"input", f.input}});
    j["advisory_mismatches"] = rep.advisory_mismatches;
    out << j.dump(2) << '\n';
  } else {
    out << "cases: " << rep.cases << '\n';
    for (const auto& [prop, k] : rep.checked) out << "  " << prop << ": " << k << " checked\n";
    for (const auto& f : rep.failures) out << "FAIL " << f.property << ": " << f.input << '\n';
    out << "advisory table mismatches: " << rep.advisory_mismatches.size() << '\n';
    out << (rep.ok() ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  }
  return rep.ok() ? kOk : kInconsistent;
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.mode == "tau") return detail::run_tau_mode(cfg, out);
    if (cfg.mode == "selfcheck") return detail::run_selfcheck_mode(cfg, out);
    if (cfg.mode == "hfk") return detail::run_hfk_mode(cfg, out, err);
    throw InputError("unknown mode '" + cfg.mode + "'");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
}

}  // namespace cablefloer::cli
