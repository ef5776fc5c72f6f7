#pragma once

// Randomized property grid over thin inputs. Shared by the CLI's selfcheck
// mode and the test suite.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cablefloer/pipeline.hpp"

namespace cablefloer {

struct ThinSample {
  LaurentPolynomial delta;
  std::int64_t tau = 0;
  std::map<std::int64_t, std::int64_t> squares;  // corner -> count, as generated
};

/// Draws a thin (Delta, tau) by choosing square counts first: one staircase
/// of length 2|tau| plus symmetric squares, genus at most `max_genus`.
class ThinSampler {
 public:
  explicit ThinSampler(std::uint64_t seed, std::int64_t max_tau = 2, std::int64_t max_genus = 4)
      : rng_(seed), max_tau_(max_tau), max_genus_(max_genus) {}

  ThinSample next() {
    ThinSample out;
    out.tau = uniform(-max_tau_, max_tau_);
    const auto t = std::abs(out.tau);
    const auto g = uniform(std::max<std::int64_t>(t, out.tau == 0 ? 0 : 1), max_genus_);
    for (std::int64_t i = 0; i < g; ++i) {
      const auto v = uniform(0, 2);
      if (v) out.squares[i] = out.squares[-i] = v;
    }
    // the top square has to exist for the genus to be g
    if (g > t && !out.squares.count(g - 1)) out.squares[g - 1] = out.squares[1 - g] = 1;

    std::map<std::int64_t, std::int64_t> magnitude;
    for (const auto& [i, v] : out.squares) {
      magnitude[i + 1] += v;
      magnitude[i] += 2 * v;
      magnitude[i - 1] += v;
    }
    for (auto i = -t; i <= t; ++i) magnitude[i] += 1;
    for (const auto& [i, v] : magnitude)
      if (v) out.delta.add_term(i, ((i - out.tau) % 2 == 0) ? v : -v);
    return out;
  }

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 rng_;
  std::int64_t max_tau_;
  std::int64_t max_genus_;
};

struct PropertyCase {
  LaurentPolynomial delta;
  std::int64_t tau = 0;
  std::int64_t p = 2;
  std::int64_t n = 0;

  std::string describe() const {
    return "delta=" + delta.to_string() + " tau=" + std::to_string(tau) + " p=" + std::to_string(p) +
           " n=" + std::to_string(n);
  }
};

inline std::vector<PropertyCase> property_grid(std::uint64_t seed, std::size_t count, std::int64_t max_p = 5,
                                               std::int64_t max_n = 4) {
  ThinSampler sampler(seed);
  std::vector<PropertyCase> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto s = sampler.next();
    const auto p = sampler.uniform(2, max_p);
    const auto n = sampler.uniform(-max_n, max_n);
    out.push_back({s.delta, s.tau, p, n});
  }
  return out;
}

/// Each square summand pairs to exactly 6p - 4 surviving generators.
inline bool check_square_contributions(const HfkResult& r) {
  const auto filtered = grading_filter(r.complex, FilterMode::repair).first;
  int squares = 0;
  for (const auto& g : r.typeD.generators)
    if (g.part == DPart::square) squares = std::max(squares, g.square + 1);
  for (int s = 0; s < squares; ++s) {
    const auto sub = subcomplex(filtered, [&](const TensorGenerator& t) {
      const auto& d = r.typeD.generators[t.d_side];
      return d.part == DPart::square && d.square == s;
    });
    if (reduce(sub).total() != 6 * r.input.p - 4) return false;
  }
  return true;
}

/// Every closed-form grading names an existing generator and agrees with the
/// group computation. Returns the number of generators compared, or -1.
inline std::int64_t check_closed_form(const HfkResult& r) {
  const auto expected = closed_form_gradings(r.model, r.input.p, r.input.n);
  std::map<std::string, NormalizedGrading> actual;
  for (const auto& g : r.complex.generators) actual[g.name] = g.normalized;
  for (const auto& [name, grading] : expected) {
    auto it = actual.find(name);
    if (it == actual.end() || !(it->second == grading)) return -1;
  }
  return static_cast<std::int64_t>(expected.size());
}

struct PropertyFailure {
  std::string property;
  std::string input;
};

struct SelfcheckReport {
  std::size_t cases = 0;
  std::map<std::string, std::size_t> checked;  // property -> cases it applied to
  std::vector<PropertyFailure> failures;
  std::vector<std::string> advisory_mismatches;

  bool ok() const { return failures.empty(); }
};

inline SelfcheckReport run_selfcheck(std::uint64_t seed, std::size_t count) {
  SelfcheckReport rep;
  auto record = [&](const std::string& property, bool ok, const PropertyCase& c) {
    ++rep.checked[property];
    if (!ok) rep.failures.push_back({property, c.describe()});
  };
  for (const auto& c : property_grid(seed, count)) {
    ++rep.cases;
    HfkResult r;
    try {
      r = compute_hfk({c.delta, c.tau, c.p, c.n}, c.tau == 0 ? FilterMode::strict : FilterMode::repair);
    } catch (const std::exception& e) {
      rep.failures.push_back({std::string("pipeline: ") + e.what(), c.describe()});
      continue;
    }
    record("symmetry", r.checks.symmetry, c);
    record("euler", r.checks.euler, c);
    record("square_contribution", check_square_contributions(r), c);
    record("closed_form_gradings", check_closed_form(r) >= 0, c);
    record("tau_formulas", r.tau.value == tau_pq(c.tau, c.p, c.p * c.n + 1).value, c);
    record("no_dropped_arrows", r.filter.dropped.empty(), c);
    if (r.checks.table.advisory) {
      if (!r.checks.table_match)
        rep.advisory_mismatches.push_back(c.describe() + " computed=" + std::to_string(r.ranks.total()) +
                                          " table=" + std::to_string(r.checks.table.value));
    } else {
      record("table_rank", r.checks.table_match, c);
    }
    if (c.p == 2) record("p2_mirror", mirror_check(c.delta, c.tau, c.n, hfk_ranks), c);
  }
  return rep;
}

}  // namespace cablefloer
