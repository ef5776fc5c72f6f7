#pragma once

// Homology of a bigraded complex over F2, reported as ranks per
// (Alexander, Maslov) bigrading.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cablefloer/box_pairing.hpp"
#include "cablefloer/errors.hpp"

namespace cablefloer {

using Bigrading = std::pair<std::int64_t, std::int64_t>;  // (alexander, maslov)

struct RankTable {
  std::map<Bigrading, std::int64_t> ranks;

  void add(std::int64_t alexander, std::int64_t maslov, std::int64_t r = 1) {
    if (r == 0) return;
    auto& slot = ranks[{alexander, maslov}];
    slot += r;
    if (slot == 0) ranks.erase({alexander, maslov});
  }

  std::int64_t rank(std::int64_t alexander, std::int64_t maslov) const {
    auto it = ranks.find({alexander, maslov});
    return it == ranks.end() ? 0 : it->second;
  }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [k, r] : ranks) t += r;
    return t;
  }

  /// Alexander gradings with multiplicity, ascending.
  std::vector<std::int64_t> alexander_multiset() const {
    std::vector<std::int64_t> out;
    for (const auto& [k, r] : ranks) out.insert(out.end(), static_cast<std::size_t>(r), k.first);
    return out;
  }

  friend bool operator==(const RankTable&, const RankTable&) = default;
};

enum class FilterMode { strict, repair };

struct DroppedArrow {
  std::string source;
  std::string target;
  std::int64_t delta_alexander = 0;
  std::int64_t delta_maslov = 0;
};

struct FilterReport {
  std::vector<DroppedArrow> dropped;
};

/// Keeps only arrows that preserve Alexander grading and drop Maslov by one.
/// Strict mode throws on the first offender instead.
inline std::pair<BigradedComplex, FilterReport> grading_filter(const BigradedComplex& complex, FilterMode mode) {
  BigradedComplex out;
  out.generators = complex.generators;
  FilterReport report;
  for (const auto& a : complex.arrows) {
    const auto& s = complex.generators[a.source];
    const auto& t = complex.generators[a.target];
    const auto dA = t.alexander - s.alexander;
    const auto dM = t.maslov - s.maslov;
    if (dA == 0 && dM == -1) {
      out.arrows.push_back(a);
      continue;
    }
    if (mode == FilterMode::strict)
      throw ConsistencyError("arrow " + complex.describe(a) + " changes bigrading by (" + std::to_string(dA) + ", " +
                             std::to_string(dM) + ")");
    report.dropped.push_back({s.name, t.name, dA, dM});
  }
  return {std::move(out), std::move(report)};
}

/// Arrows with both endpoints in the selected generator set, reindexed.
template <typename Pred>
BigradedComplex subcomplex(const BigradedComplex& complex, Pred keep) {
  BigradedComplex out;
  std::vector<std::optional<std::size_t>> remap(complex.generators.size());
  for (std::size_t i = 0; i < complex.generators.size(); ++i) {
    if (!keep(complex.generators[i])) continue;
    remap[i] = out.generators.size();
    out.generators.push_back(complex.generators[i]);
  }
  for (const auto& a : complex.arrows)
    if (remap[a.source] && remap[a.target]) out.arrows.push_back({*remap[a.source], *remap[a.target]});
  return out;
}

/// Throws ConsistencyError unless the differential squares to zero mod 2.
inline void check_d_squared(const BigradedComplex& complex) {
  std::vector<std::vector<std::size_t>> out(complex.generators.size());
  for (const auto& a : complex.arrows) out[a.source].push_back(a.target);
  for (std::size_t x = 0; x < out.size(); ++x) {
    std::map<std::size_t, int> hits;
    for (auto y : out[x])
      for (auto z : out[y]) hits[z] ^= 1;
    for (const auto& [z, parity] : hits)
      if (parity)
        throw ConsistencyError("d^2 != 0: " + complex.generators[x].name + " reaches " + complex.generators[z].name +
                               " an odd number of times");
  }
}

/// Reduces the complex by repeated arrow cancellation over F2 and bins the
/// survivors by bigrading. Arrows must already respect the bigrading, so
/// each Alexander grading is reduced on its own. `order_seed` shuffles the
/// cancellation order; the result does not depend on it.
inline RankTable reduce(const BigradedComplex& complex, std::optional<std::uint64_t> order_seed = std::nullopt) {
  check_d_squared(complex);
  const auto n = complex.generators.size();
  for (const auto& a : complex.arrows)
    if (complex.generators[a.source].alexander != complex.generators[a.target].alexander)
      throw ConsistencyError("reduce() needs a grading-filtered complex; offending arrow " + complex.describe(a));

  std::vector<std::set<std::size_t>> out(n), in(n);
  for (const auto& a : complex.arrows) {
    // parallel arrows cancel mod 2
    if (out[a.source].erase(a.target)) {
      in[a.target].erase(a.source);
    } else {
      out[a.source].insert(a.target);
      in[a.target].insert(a.source);
    }
  }

  std::map<std::int64_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[complex.generators[i].alexander].push_back(i);

  std::vector<char> alive(n, 1);
  // zig-zag: every other w -> y picks up x's other targets, then x, y go
  auto cancel = [&](std::size_t x, std::size_t y) {
    const std::vector<std::size_t> sources(in[y].begin(), in[y].end());
    const std::vector<std::size_t> targets(out[x].begin(), out[x].end());
    for (auto w : sources) {
      if (w == x) continue;
      for (auto z : targets) {
        if (z == y) continue;
        if (out[w].erase(z)) {
          in[z].erase(w);
        } else {
          out[w].insert(z);
          in[z].insert(w);
        }
      }
    }
    for (auto v : {x, y}) {
      for (auto z : out[v]) in[z].erase(v);
      for (auto w : in[v]) out[w].erase(v);
      out[v].clear();
      in[v].clear();
      alive[v] = 0;
    }
  };

  std::mt19937_64 rng(order_seed.value_or(0));
  for (auto& [alexander, members] : blocks) {
    if (order_seed) std::shuffle(members.begin(), members.end(), rng);
    // a cancellation can hand new arrows to generators already passed over
    for (bool changed = true; changed;) {
      changed = false;
      for (auto x : members) {
        if (!alive[x] || out[x].empty()) continue;
        auto it = out[x].begin();
        if (order_seed) std::advance(it, static_cast<long>(rng() % out[x].size()));
        cancel(x, *it);
        changed = true;
      }
    }
  }

  RankTable table;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) table.add(complex.generators[i].alexander, complex.generators[i].maslov);
  return table;
}

}  // namespace cablefloer
