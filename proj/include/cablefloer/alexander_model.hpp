#pragma once

// Model complex of a Floer-homologically thin knot, read off from its
// symmetrized Alexander polynomial and tau: one staircase of length
// 2|tau|+1 plus c_i "square" summands whose upper-right corner sits in
// Alexander grading i.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>

#include "cablefloer/errors.hpp"
#include "cablefloer/laurent_polynomial.hpp"

namespace cablefloer {

struct ThinParams {
  std::int64_t tau = 0;
  std::int64_t l = 0;  // -tau, the staircase parameter
  std::int64_t a = 0;  // sum of |coefficients| of Delta, i.e. total rank of HFK-hat(K)
  std::int64_t s = 0;  // number of square summands
  std::int64_t g = 0;  // top nonzero degree of Delta

  friend bool operator==(const ThinParams&, const ThinParams&) = default;
};

struct ThinModel {
  ThinParams params;
  /// c_i keyed by the corner's Alexander grading; zero counts are not stored.
  std::map<std::int64_t, std::int64_t> square_counts;

  std::int64_t staircase_length() const { return 2 * std::abs(params.tau) + 1; }

  std::int64_t squares_at(std::int64_t i) const {
    auto it = square_counts.find(i);
    return it == square_counts.end() ? 0 : it->second;
  }
};

/// Checks that (delta, tau) could come from a thin knot and derives the
/// counting parameters. Rejects asymmetric polynomials, |Delta(1)| != 1,
/// non-alternating coefficient signs, and a non-integral or negative s.
inline ThinParams validate_thin(const LaurentPolynomial& delta, std::int64_t tau) {
  if (delta.is_zero()) throw InputError("Alexander polynomial is zero");
  if (!delta.is_symmetric()) throw InputError("Alexander polynomial is not symmetric: " + delta.to_string());
  const auto at_one = delta.at_one();
  if (at_one != 1 && at_one != -1)
    throw InputError("|Delta(1)| must be 1, got Delta(1) = " + std::to_string(at_one));

  // Thin knots have Delta coefficients of sign eps * (-1)^i.
  const auto top = delta.max_degree();
  const bool top_positive = delta.coeff(top) > 0;
  for (const auto& [d, c] : delta.terms()) {
    const bool parity_flip = ((top - d) % 2) != 0;
    if ((c > 0) != (top_positive != parity_flip))
      throw InputError("coefficient signs of Delta do not alternate; input is not thin");
  }

  ThinParams out;
  out.tau = tau;
  out.l = -tau;
  out.a = delta.abs_sum();
  out.g = top;
  const auto rest = out.a - 2 * std::abs(tau) - 1;
  if (rest < 0 || rest % 4 != 0)
    throw InputError("a - 2|tau| - 1 = " + std::to_string(rest) +
                     " is not a nonnegative multiple of 4; no thin knot has this (Delta, tau)");
  out.s = rest / 4;
  if (out.g < std::abs(tau))
    throw InputError("|tau| = " + std::to_string(std::abs(tau)) + " exceeds the degree of Delta");
  return out;
}

/// Rank of HFK-hat(K) in Alexander grading i once the staircase generator
/// (present for |i| <= |tau|) is removed.
inline std::map<std::int64_t, std::int64_t> a_prime(const LaurentPolynomial& delta, std::int64_t tau) {
  const auto g = delta.max_degree();
  const auto abs_tau = std::abs(tau);
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t i = -g; i <= g; ++i) {
    const auto ai = std::abs(delta.coeff(i));
    const auto v = std::abs(i) > abs_tau ? ai : ai - 1;
    if (v < 0)
      throw InputError("no staircase generator fits in Alexander grading " + std::to_string(i) +
                       " (coefficient is zero but |i| <= |tau|)");
    out[i] = v;
  }
  return out;
}

/// Number of squares with corner in each Alexander grading, by the downward
/// recursion c_i = a'_{i+1} - 2 c_{i+1} - c_{i+2} starting from c_i = 0 for
/// i >= g. The recursion is run two steps past -g+1 so the bottom equations
/// are checked too; symmetry and the total are verified independently.
inline std::map<std::int64_t, std::int64_t> square_counts(const LaurentPolynomial& delta, std::int64_t tau) {
  const auto params = validate_thin(delta, tau);
  const auto ap = a_prime(delta, tau);
  const auto g = params.g;
  auto a_at = [&](std::int64_t i) {
    auto it = ap.find(i);
    return it == ap.end() ? std::int64_t{0} : it->second;
  };

  std::map<std::int64_t, std::int64_t> c;
  auto c_at = [&](std::int64_t i) {
    auto it = c.find(i);
    return it == c.end() ? std::int64_t{0} : it->second;
  };
  for (std::int64_t i = g - 1; i >= -g - 1; --i) {
    const auto v = a_at(i + 1) - 2 * c_at(i + 1) - c_at(i + 2);
    if (v < 0)
      throw InputError("square count c_" + std::to_string(i) + " = " + std::to_string(v) +
                       " is negative; (Delta, tau) is not realizable by a thin knot");
    if (v != 0) c[i] = v;
  }
  if (c_at(-g) != 0 || c_at(-g - 1) != 0)
    throw InputError("square recursion does not close at the bottom degree; input is not thin-realizable");

  std::int64_t total = 0;
  for (const auto& [i, v] : c) {
    if (c_at(-i) != v) throw InputError("square counts are not symmetric; input is not thin-realizable");
    total += v;
  }
  if (total != params.s)
    throw InputError("square counts sum to " + std::to_string(total) + " but s = " + std::to_string(params.s));
  return c;
}

inline ThinModel build_model(const LaurentPolynomial& delta, std::int64_t tau) {
  return ThinModel{validate_thin(delta, tau), square_counts(delta, tau)};
}

}  // namespace cablefloer
