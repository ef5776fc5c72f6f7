#pragma once

// Reference computations that share no code with the library: plain maps for
// polynomials, the numerical semigroup for torus knots, the L-space
// staircase for HFK-hat, and dense linear algebra over F2 for homology.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Poly = std::map<std::int64_t, std::int64_t>;               // degree -> coefficient
using Table = std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t>;  // (a, m) -> rank

inline Poly clean(Poly p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
  return p;
}

inline Poly multiply(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) out[i + j] += a * b;
  return clean(out);
}

inline Poly substitute_power(const Poly& x, std::int64_t k) {
  Poly out;
  for (const auto& [i, a] : x) out[i * k] = a;
  return out;
}

/// Symmetrized Alexander polynomial of T(p, q) from the semigroup <p, |q|>:
/// Delta(t) = (1 - t) * sum over semigroup elements s of t^s, truncated.
inline Poly torus_delta(std::int64_t p, std::int64_t q) {
  q = std::abs(q);
  if (p == 1 || q == 1) return {{0, 1}};
  const auto top = (p - 1) * (q - 1);
  std::vector<bool> in(static_cast<std::size_t>(top + 2), false);
  for (std::int64_t i = 0; i * p <= top + 1; ++i)
    for (std::int64_t j = 0; i * p + j * q <= top + 1; ++j) in[static_cast<std::size_t>(i * p + j * q)] = true;
  Poly out;
  for (std::int64_t s = 0; s <= top; ++s) {
    if (!in[static_cast<std::size_t>(s)]) continue;
    out[s - top / 2] += 1;
    if (s + 1 <= top) out[s + 1 - top / 2] -= 1;
  }
  return clean(out);
}

/// HFK-hat of an L-space knot read off its Alexander polynomial: the top
/// generator sits in Maslov 0, then Maslov drops by 2*(gap) - 1 and 1
/// alternately going down the terms.
inline Table lspace_staircase(const Poly& delta) {
  std::vector<std::int64_t> degrees;
  for (auto it = delta.rbegin(); it != delta.rend(); ++it) degrees.push_back(it->first);
  Table out;
  std::int64_t m = 0;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k > 0) m -= (k % 2 == 1) ? 2 * (degrees[k - 1] - degrees[k]) - 1 : 1;
    out[{degrees[k], m}] = 1;
  }
  return out;
}

inline Table mirror(const Table& t) {
  Table out;
  for (const auto& [key, r] : t) out[{-key.first, -key.second}] = r;
  return out;
}

/// HFK-hat of T(p, q) for any q coprime to p (negative q via the mirror).
inline Table torus_hfk(std::int64_t p, std::int64_t q) {
  const auto t = lspace_staircase(torus_delta(p, q));
  return q < 0 ? mirror(t) : t;
}

// --- F2 linear algebra -----------------------------------------------------

using Row = std::vector<std::uint8_t>;
using Matrix = std::vector<Row>;

inline std::size_t rank_f2(Matrix m) {
  std::size_t rank = 0;
  const auto rows = m.size();
  const auto cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && !m[pivot][c]) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != rank && m[r][c])
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

struct Gen {
  std::int64_t a = 0;
  std::int64_t m = 0;
};

/// Homology by rank-nullity: dim C - rank(d out) - rank(d in), per bigrading.
inline Table homology(const std::vector<Gen>& gens, const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  const auto n = gens.size();
  Matrix d(n, Row(n, 0));
  for (const auto& [s, t] : arrows) d[t][s] ^= 1;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[{gens[i].a, gens[i].m}].push_back(i);
  auto block = [&](const std::vector<std::size_t>& targets, const std::vector<std::size_t>& sources) {
    Matrix b(targets.size(), Row(sources.size(), 0));
    for (std::size_t r = 0; r < targets.size(); ++r)
      for (std::size_t c = 0; c < sources.size(); ++c) b[r][c] = d[targets[r]][sources[c]];
    return rank_f2(b);
  };
  Table out;
  for (const auto& [key, members] : groups) {
    const auto [a, m] = key;
    std::int64_t dim = static_cast<std::int64_t>(members.size());
    if (auto below = groups.find({a, m - 1}); below != groups.end())
      dim -= static_cast<std::int64_t>(block(below->second, members));
    if (auto above = groups.find({a, m + 1}); above != groups.end())
      dim -= static_cast<std::int64_t>(block(members, above->second));
    if (dim) out[key] = dim;
  }
  return out;
}

/// A random bigraded complex with known homology: cancelling pairs plus
/// survivors, then scrambled by random changes of basis inside each
/// bigrading so the arrows no longer form a matching.
struct RandomComplex {
  std::vector<Gen> gens;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  Table expected;
};

inline RandomComplex random_complex(std::mt19937_64& rng, std::size_t pairs, std::size_t survivors,
                                    std::size_t scrambles) {
  RandomComplex out;
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  for (std::size_t k = 0; k < pairs; ++k) {
    const auto a = pick(-1, 1), m = pick(-2, 2);
    matching.emplace_back(out.gens.size(), out.gens.size() + 1);
    out.gens.push_back({a, m});
    out.gens.push_back({a, m - 1});
  }
  for (std::size_t k = 0; k < survivors; ++k) {
    const auto a = pick(-1, 1), m = pick(-2, 2);
    out.gens.push_back({a, m});
    out.expected[{a, m}] += 1;
  }
  const auto n = out.gens.size();
  Matrix d(n, Row(n, 0));  // d[target][source]
  for (const auto& [s, t] : matching) d[t][s] = 1;
  // new basis e_j' = e_j + e_i, same bigrading: d' = E d E with E = E^-1 over F2
  for (std::size_t k = 0; n > 0 && k < scrambles; ++k) {
    const auto i = static_cast<std::size_t>(rng() % n), j = static_cast<std::size_t>(rng() % n);
    if (i == j || out.gens[i].a != out.gens[j].a || out.gens[i].m != out.gens[j].m) continue;
    for (std::size_t r = 0; r < n; ++r) d[r][j] ^= d[r][i];  // right multiply: column j += column i
    for (std::size_t c = 0; c < n; ++c) d[i][c] ^= d[j][c];  // left multiply: row i += row j
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t)
      if (d[t][s]) out.arrows.emplace_back(s, t);
  return out;
}

}  // namespace oracle
