#pragma once

// Type D module of the n-framed complement of a thin knot, built directly
// from the model complex: the staircase, one 8-generator gadget per square,
// and the framing-dependent unstable chain of mu generators.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cablefloer/alexander_model.hpp"
#include "cablefloer/errors.hpp"
#include "cablefloer/grading_group.hpp"

namespace cablefloer {

enum class Idempotent { iota0, iota1 };

/// Reeb elements of the torus algebra, named by chord index.
enum class Chord { rho1, rho2, rho3, rho12, rho23, rho123 };

inline std::string_view chord_label(Chord c) {
  switch (c) {
    case Chord::rho1: return "1";
    case Chord::rho2: return "2";
    case Chord::rho3: return "3";
    case Chord::rho12: return "12";
    case Chord::rho23: return "23";
    case Chord::rho123: return "123";
  }
  return "?";
}

inline Chord parse_chord(std::string_view label) {
  if (label == "1") return Chord::rho1;
  if (label == "2") return Chord::rho2;
  if (label == "3") return Chord::rho3;
  if (label == "12") return Chord::rho12;
  if (label == "23") return Chord::rho23;
  if (label == "123") return Chord::rho123;
  throw InputError("unknown Reeb chord label '" + std::string(label) + "'");
}

/// Which part of the model a generator comes from.
enum class DPart { staircase, unstable, square };

struct DGenerator {
  std::string name;
  Idempotent idempotent = Idempotent::iota0;
  GradingElement grading;  // right-coset representative modulo <h>
  DPart part = DPart::staircase;
  int square = -1;         // 0-based square index for DPart::square
  std::int64_t level = 0;  // square level; unused otherwise
};

struct DEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  Chord label = Chord::rho1;
};

struct NamedEdge {
  std::string source;
  std::string target;
  Chord label = Chord::rho1;

  friend bool operator==(const NamedEdge&, const NamedEdge&) = default;
};

struct TypeDModule {
  std::int64_t tau = 0;
  std::int64_t n = 0;
  std::vector<DGenerator> generators;
  std::vector<DEdge> edges;
  GradingElement h;

  std::int64_t framing_offset() const { return 2 * tau - n; }  // m

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return i;
    return std::nullopt;
  }

  /// Outgoing edges per generator, in insertion order.
  std::vector<std::vector<DEdge>> adjacency() const {
    std::vector<std::vector<DEdge>> out(generators.size());
    for (const auto& e : edges) out[e.source].push_back(e);
    return out;
  }

  std::size_t count(Idempotent idem) const {
    std::size_t k = 0;
    for (const auto& g : generators) k += g.idempotent == idem;
    return k;
  }
};

namespace detail {

inline std::string indexed(std::string_view stem, std::int64_t i) { return std::string(stem) + std::to_string(i); }

inline std::string square_name(int square, std::string_view corner) {
  return "s" + std::to_string(square + 1) + "." + std::string(corner);
}

}  // namespace detail

/// h = (m/2 - 1/2 - l; -1, m + 2l; 0), the boundary periodic-domain grading.
inline GradingElement framing_h(std::int64_t tau, std::int64_t n) {
  const auto l = -tau;
  const auto m = 2 * tau - n;
  return GradingElement::doubled(m - 1 - 2 * l, -2, 2 * (m + 2 * l), 0);
}

/// Grading of staircase generator u_j (is_u) or v_j.
inline GradingElement staircase_grading(std::int64_t tau, bool is_u, std::int64_t j) {
  const bool odd = j % 2 != 0;
  const std::int64_t k = odd ? (j - 1) / 2 : j / 2;
  const std::int64_t s = tau <= 0 ? 1 : -1;  // the tau > 0 list is the tau <= 0 list with k -> -k
  if (is_u) {
    if (odd) return GradingElement::integral(s * k, 0, s * 2 * k, 0);                // (k; 0, 2k; 0)
    return GradingElement::doubled(s * (2 * k - 1), 0, s * 2 * (2 * k - 1), 0);       // (k-1/2; 0, 2k-1; 0)
  }
  if (odd) return GradingElement::doubled(-1, -1, s * (4 * k + 1), 0);                // (-1/2; -1/2, 2k+1/2; 0)
  return GradingElement::doubled(s * (4 * k - 1), 1, s * (4 * k - 1), 0);             // (2k-1/2; 1/2, 2k-1/2; 0)
}

/// Grading of mu_{i+1} in the unstable chain.
inline GradingElement mu_grading(std::int64_t tau, std::int64_t n, std::int64_t i) {
  const auto l = -tau;
  const auto m = 2 * tau - n;
  if (m > 0) return GradingElement::doubled(2 * i - 1, -1, 2 * i + 1 + 4 * l, 0);   // (i-1/2; -1/2, i+1/2+2l; 0)
  if (m < 0) return GradingElement::doubled(-2 * i - 1, -1, -2 * i - 1 + 4 * l, 0);  // (-i-1/2; -1/2, -i-1/2+2l; 0)
  throw ConsistencyError("no mu generators when n = 2 tau");
}

/// Gradings of a level-0 square; corner is one of x1..x4, y1..y4.
inline GradingElement square_base_grading(std::string_view corner) {
  if (corner == "x1") return GradingElement::identity();
  if (corner == "x2") return GradingElement::doubled(-1, 0, -2, 0);
  if (corner == "x3") return GradingElement::identity();
  if (corner == "x4") return GradingElement::doubled(1, 0, 2, 0);
  if (corner == "y1") return GradingElement::doubled(-1, 1, -1, 0);
  if (corner == "y2") return GradingElement::doubled(-1, -1, -1, 0);
  if (corner == "y3") return GradingElement::doubled(1, 1, 1, 0);
  if (corner == "y4") return GradingElement::doubled(-1, -1, 1, 0);
  throw InputError("unknown square corner '" + std::string(corner) + "'");
}

/// Right multiplier moving a square to level t: (t/2; 0, t; 0).
inline GradingElement level_shift(std::int64_t t) { return GradingElement::doubled(t, 0, 2 * t, 0); }

struct UnstableChain {
  std::vector<std::string> mu;
  std::vector<NamedEdge> edges;
};

/// The string joining the staircase ends u_{2|tau|+1} (end A) and u_1 (end B).
///   m = 0: A --D12--> B
///   m > 0: A --D1--> mu_1 <--D23-- mu_2 <-- ... <--D23-- mu_m <--D3-- B
///   m < 0: A --D123--> mu_1 --D23--> ... --D23--> mu_|m| --D2--> B
inline UnstableChain unstable_chain(std::int64_t tau, std::int64_t n) {
  const auto m = 2 * tau - n;
  const auto end_a = detail::indexed("u", 2 * std::abs(tau) + 1);
  const std::string end_b = "u1";
  UnstableChain out;
  const auto len = std::abs(m);
  for (std::int64_t j = 1; j <= len; ++j) out.mu.push_back(detail::indexed("mu", j));
  if (m == 0) {
    out.edges.push_back({end_a, end_b, Chord::rho12});
  } else if (m > 0) {
    out.edges.push_back({end_a, out.mu.front(), Chord::rho1});
    for (std::int64_t j = 1; j < len; ++j)
      out.edges.push_back({detail::indexed("mu", j + 1), detail::indexed("mu", j), Chord::rho23});
    out.edges.push_back({end_b, out.mu.back(), Chord::rho3});
  } else {
    out.edges.push_back({end_a, out.mu.front(), Chord::rho123});
    for (std::int64_t j = 1; j < len; ++j)
      out.edges.push_back({detail::indexed("mu", j), detail::indexed("mu", j + 1), Chord::rho23});
    out.edges.push_back({out.mu.back(), end_b, Chord::rho2});
  }
  return out;
}

/// Builds the type D module of (K, n).
///
/// Staircase arrows of the model complex become coefficient maps as follows:
/// a vertical arrow u -> u' gives u --D1--> v and u' --D123--> v, and a
/// horizontal arrow u -> u' gives u --D3--> v --D2--> u'. For tau <= 0 the
/// vertical arrows are u_{2t+1} -> u_{2t+2} and the horizontal ones
/// u_{2t+3} -> u_{2t+2}; for tau > 0 they are u_{2t} -> u_{2t-1} and
/// u_{2t} -> u_{2t+1}. Each square (corner x1, horizontal target x2,
/// vertical target x3, far corner x4) is treated the same way. A square
/// counted by c_i sits at level i - tau.
inline TypeDModule build_typeD(const ThinModel& model, std::int64_t n) {
  const auto tau = model.params.tau;
  const auto L = std::abs(tau);
  TypeDModule D;
  D.tau = tau;
  D.n = n;
  D.h = framing_h(tau, n);

  std::map<std::string, std::size_t> index;
  auto add = [&](std::string name, Idempotent idem, GradingElement gr, DPart part, int square = -1,
                 std::int64_t level = 0) {
    index[name] = D.generators.size();
    D.generators.push_back({std::move(name), idem, gr, part, square, level});
  };
  auto edge = [&](const std::string& s, const std::string& t, Chord c) {
    D.edges.push_back({index.at(s), index.at(t), c});
  };

  for (std::int64_t j = 1; j <= 2 * L + 1; ++j)
    add(detail::indexed("u", j), Idempotent::iota0, staircase_grading(tau, true, j), DPart::staircase);
  for (std::int64_t j = 1; j <= 2 * L; ++j)
    add(detail::indexed("v", j), Idempotent::iota1, staircase_grading(tau, false, j), DPart::staircase);

  auto u = [](std::int64_t j) { return detail::indexed("u", j); };
  auto v = [](std::int64_t j) { return detail::indexed("v", j); };
  if (tau <= 0) {
    for (std::int64_t t = 0; t < L; ++t) {
      edge(u(2 * t + 1), v(2 * t + 1), Chord::rho1);
      edge(u(2 * t + 2), v(2 * t + 1), Chord::rho123);
      edge(u(2 * t + 3), v(2 * t + 2), Chord::rho3);
      edge(v(2 * t + 2), u(2 * t + 2), Chord::rho2);
    }
  } else {
    for (std::int64_t t = 1; t <= L; ++t) {
      edge(u(2 * t), v(2 * t - 1), Chord::rho1);
      edge(u(2 * t - 1), v(2 * t - 1), Chord::rho123);
      edge(u(2 * t), v(2 * t), Chord::rho3);
      edge(v(2 * t), u(2 * t + 1), Chord::rho2);
    }
  }

  const auto chain = unstable_chain(tau, n);
  for (std::size_t i = 0; i < chain.mu.size(); ++i)
    add(chain.mu[i], Idempotent::iota1, mu_grading(tau, n, static_cast<std::int64_t>(i)), DPart::unstable);
  for (const auto& e : chain.edges) edge(e.source, e.target, e.label);

  static constexpr std::string_view corners0[] = {"x1", "x2", "x3", "x4"};
  static constexpr std::string_view corners1[] = {"y1", "y2", "y3", "y4"};
  static const NamedEdge gadget[] = {
      {"x1", "y4", Chord::rho1}, {"x3", "y4", Chord::rho123}, {"x2", "y2", Chord::rho1},
      {"x4", "y2", Chord::rho123}, {"x1", "y1", Chord::rho3}, {"y1", "x2", Chord::rho2},
      {"x3", "y3", Chord::rho3}, {"y3", "x4", Chord::rho2},
  };
  int square = 0;
  for (const auto& [corner_grading, count] : model.square_counts) {
    const auto level = corner_grading - tau;
    const auto shift = level_shift(level);
    for (std::int64_t r = 0; r < count; ++r, ++square) {
      for (auto c : corners0)
        add(detail::square_name(square, c), Idempotent::iota0, square_base_grading(c) * shift, DPart::square,
            square, level);
      for (auto c : corners1)
        add(detail::square_name(square, c), Idempotent::iota1, square_base_grading(c) * shift, DPart::square,
            square, level);
      for (const auto& e : gadget)
        edge(detail::square_name(square, e.source), detail::square_name(square, e.target), e.label);
    }
  }
  return D;
}

}  // namespace cablefloer
