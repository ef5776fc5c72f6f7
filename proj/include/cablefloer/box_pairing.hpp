#pragma once

// Box tensor product CFA-hat(p,1) [x] CFD-hat(K,n). Generators pair by
// idempotent; an arrow a1 d1 -> a2 d2 appears for every coefficient-map path
// d1 -> ... -> d2 whose label sequence is the input sequence of a
// U-power-zero operation m(a1, ...) = a2. Bigradings come from the grading
// group: the product gr(a) gr(d) is normalized in <g>\G/<h> to (N, A'),
// then A = A' + c and M = N + 2A.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cablefloer/alexander_model.hpp"
#include "cablefloer/grading_group.hpp"
#include "cablefloer/typea_pattern.hpp"
#include "cablefloer/typed_complement.hpp"

namespace cablefloer {

struct TensorGenerator {
  std::size_t a_side = 0;  // index into TypeAModule::generators()
  std::size_t d_side = 0;  // index into TypeDModule::generators
  std::string name;        // e.g. "b3 s2.y4"
  NormalizedGrading normalized;
  std::int64_t alexander = 0;
  std::int64_t maslov = 0;
};

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
  friend auto operator<=>(const Arrow&, const Arrow&) = default;
};

struct BigradedComplex {
  std::vector<TensorGenerator> generators;
  std::vector<Arrow> arrows;

  std::string describe(const Arrow& a) const {
    return generators[a.source].name + " -> " + generators[a.target].name;
  }
};

inline std::string tensor_name(const TypeAModule& A, const TypeDModule& D, std::size_t ai, std::size_t di) {
  return A.generators()[ai].name + " " + D.generators[di].name;
}

/// All pairs (a-side, d-side) with matching idempotents, a-side major.
inline std::vector<std::pair<std::size_t, std::size_t>> tensor_generators(const TypeAModule& A,
                                                                          const TypeDModule& D) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t ai = 0; ai < A.generators().size(); ++ai)
    for (std::size_t di = 0; di < D.generators.size(); ++di)
      if (A.generators()[ai].pairs_with == D.generators[di].idempotent) out.emplace_back(ai, di);
  return out;
}

/// c = l p - n p (p-1) / 2
inline std::int64_t shift_constant(std::int64_t l, std::int64_t p, std::int64_t n) {
  return l * p - n * p * (p - 1) / 2;
}

/// Differential of the box tensor product over the given generator list.
/// Paths are enumerated up to the longest hat operation.
inline std::vector<Arrow> tensor_differential(const TypeAModule& A, const TypeDModule& D,
                                              const std::vector<std::pair<std::size_t, std::size_t>>& gens) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < gens.size(); ++i) index[gens[i]] = i;
  const auto adj = D.adjacency();
  const auto max_len = A.max_hat_arity();

  std::vector<Arrow> arrows;
  std::vector<Chord> labels;
  // depth-first over label paths starting at d
  auto walk = [&](auto&& self, std::size_t src, std::size_t ai, std::size_t d) -> void {
    if (!labels.empty()) {
      if (auto op = A.find(ai, labels); op && op->u_power == 0) {
        auto it = index.find({op->target, d});
        if (it == index.end())
          throw ConsistencyError("operation output " + A.generators()[op->target].name + " does not pair with " +
                                 D.generators[d].name);
        arrows.push_back({src, it->second});
      }
    }
    if (labels.size() >= max_len) return;
    for (const auto& e : adj[d]) {
      labels.push_back(e.label);
      self(self, src, ai, e.target);
      labels.pop_back();
    }
  };
  for (std::size_t i = 0; i < gens.size(); ++i) walk(walk, i, gens[i].first, gens[i].second);
  return arrows;
}

inline NormalizedGrading tensor_normalized(const TypeAModule& A, const TypeDModule& D, std::size_t ai,
                                           std::size_t di) {
  return normalize_double_coset(A.generators()[ai].grading * D.generators[di].grading, A.g(), D.h);
}

/// Assigns (N, A'), Alexander and Maslov gradings to each generator.
inline std::vector<TensorGenerator> tensor_gradings(const TypeAModule& A, const TypeDModule& D,
                                                    const std::vector<std::pair<std::size_t, std::size_t>>& gens,
                                                    std::int64_t shift) {
  std::vector<TensorGenerator> out;
  out.reserve(gens.size());
  for (const auto& [ai, di] : gens) {
    TensorGenerator t;
    t.a_side = ai;
    t.d_side = di;
    t.name = tensor_name(A, D, ai, di);
    t.normalized = tensor_normalized(A, D, ai, di);
    t.alexander = t.normalized.Aprime + shift;
    t.maslov = t.normalized.N + 2 * t.alexander;
    out.push_back(std::move(t));
  }
  return out;
}

inline BigradedComplex box_tensor(const TypeAModule& A, const TypeDModule& D) {
  const auto gens = tensor_generators(A, D);
  const auto c = shift_constant(-D.tau, A.p(), D.n);
  return BigradedComplex{tensor_gradings(A, D, gens, c), tensor_differential(A, D, gens)};
}

// ---------------------------------------------------------------------------
// Closed-form (N, A') gradings, used to cross-check the group arithmetic.

namespace closed_form {

/// Families of generators on a square; `k` is 1..p-1 for the b_k rows, `i`
/// is 0..p-2 for the b_{2p-i-2} rows.
enum class SquareFamily { a_x1, a_x3, a_x4, bk_y1, bp_y1, bk_y4, bi_y4, bk_y2, bk_y3, bi_y3 };

/// (N, A') of a generator on a square in the given level.
inline NormalizedGrading square(SquareFamily f, std::int64_t level, std::int64_t p, std::int64_t n,
                                std::int64_t l, std::int64_t k = 0, std::int64_t i = 0) {
  using F = SquareFamily;
  if (level % 2 == 0) {
    const auto t = level / 2;
    switch (f) {
      case F::a_x1:
      case F::a_x3: return {2 * t, -2 * p * t};
      case F::a_x4: return {2 * t + 1, -2 * p * t - p};
      case F::bk_y1: return {4 * k * t + 2 * t - 2 * k - k * k * n - 2 * k * l - k * n, -2 * p * t + k + k * n * p};
      case F::bp_y1:
        return {4 * p * t - 2 * t - 2 * p + 1 - n * p * p + n * p + 2 * l - 2 * l * p,
                -2 * p * t + p + n * p * p - n * p};
      case F::bk_y4:
        return {4 * k * t - 2 * t - k * k * n + k * n - 2 * k * l + 2 * l, -2 * p * t - p + k + k * n * p - n * p};
      case F::bi_y4: return {4 * i * t + 2 * t - 1 - i * i * n - 2 * i * l - i * n, -2 * p * t + i * n * p};
      case F::bk_y2:
        return {4 * k * t - 2 * t - 2 * k + 1 - k * k * n + k * n - 2 * k * l + 2 * l,
                -2 * p * t + k + k * n * p - n * p};
      case F::bk_y3: return {4 * k * t + 2 * t + 1 - k * k * n - 2 * k * l - k * n, -2 * p * t + k - p + k * n * p};
      case F::bi_y3:
        return {4 * i * t + 6 * t - i * i * n - 3 * i * n - 2 * i * l - 2 * n - 2 * l,
                -2 * p * t + i * n * p + n * p};
    }
  } else {
    const auto t = (level + 1) / 2;  // level = 2t - 1
    switch (f) {
      case F::a_x1:
      case F::a_x3: return {2 * t - 1, -2 * p * t + p};
      case F::a_x4: return {2 * t, -2 * p * t};
      case F::bk_y1:
        return {4 * k * t + 2 * t - 4 * k - 1 - k * k * n - k * n - 2 * k * l, -2 * p * t + k + p + k * n * p};
      case F::bp_y1:
        return {4 * p * t - 2 * t - 4 * p + 2 - n * p * p + n * p - 2 * l * p + 2 * l,
                -2 * p * t + 2 * p + n * p * p - n * p};
      case F::bk_y4:
        return {4 * k * t - 2 * t - 2 * k + 1 - k * k * n + k * n - 2 * k * l + 2 * l,
                -2 * p * t + k + k * n * p - n * p};
      case F::bi_y4:
        return {4 * i * t + 2 * t - 2 * i - 2 - i * i * n - 2 * i * l - i * n, -2 * t * p + p + i * n * p};
      case F::bk_y2:
        return {4 * k * t - 2 * t - 4 * k + 2 - k * k * n + k * n - 2 * k * l + 2 * l,
                -2 * p * t + k + p + k * n * p - n * p};
      case F::bk_y3: return {4 * k * t + 2 * t - 2 * k - k * k * n - 2 * k * l - k * n, -2 * p * t + k + k * n * p};
      case F::bi_y3:
        return {4 * i * t + 6 * t - 2 * i - 3 - i * i * n - 3 * i * n - 2 * i * l - 2 * n - 2 * l,
                -2 * p * t + p + i * n * p + n * p};
    }
  }
  throw ConsistencyError("unknown square family");
}

/// (N, A') of b mu_{j+1}; `bk` selects b_k (k in 1..p-1), otherwise b_{2p-i-2}.
inline NormalizedGrading mu(bool bk, std::int64_t idx, std::int64_t j, std::int64_t p, std::int64_t n,
                            std::int64_t l, std::int64_t m) {
  if (m > 0) {
    if (!bk) {
      const auto i = idx;
      return {2 * i * j + 2 * j - 1 + 2 * i * l + 2 * l - i * i * n - i * n, -j * p - 2 * l * p + i * n * p};
    }
    const auto k = idx;
    return {2 * j * k - k * k * n + k * n + 2 * k * l, -j * p + k - p + k * n * p - 2 * l * p - n * p};
  }
  if (!bk) {
    const auto i = idx;
    return {-2 * i * j - 2 * i - 2 * j - 2 + 2 * i * l + 2 * l - i * i * n - i * n,
            j * p + p - 2 * l * p + i * n * p};
  }
  const auto k = idx;
  return {-2 * j * k - 2 * k + 1 - k * k * n + k * n + 2 * k * l, j * p + k + k * n * p - n * p - 2 * l * p};
}

}  // namespace closed_form

/// Closed-form (N, A') for every tensor generator whose family has a printed
/// formula, keyed by tensor generator name. Square indices follow
/// build_typeD's order.
inline std::map<std::string, NormalizedGrading> closed_form_gradings(const ThinModel& model, std::int64_t p,
                                                                     std::int64_t n) {
  using closed_form::SquareFamily;
  const auto tau = model.params.tau;
  const auto l = -tau;
  const auto L = std::abs(l);
  const auto m = 2 * tau - n;
  std::map<std::string, NormalizedGrading> out;
  auto bname = [](std::int64_t k) { return "b" + std::to_string(k); };

  // Rows shared by the y4 / y3 style generators: all b's.
  auto y_rows = [&](const std::string& dname, SquareFamily fk, SquareFamily fi, std::int64_t level) {
    for (std::int64_t k = 1; k <= p - 1; ++k)
      out[bname(k) + " " + dname] = closed_form::square(fk, level, p, n, l, k);
    for (std::int64_t i = 0; i <= p - 2; ++i)
      out[bname(2 * p - i - 2) + " " + dname] = closed_form::square(fi, level, p, n, l, 0, i);
  };

  int square = 0;
  for (const auto& [corner, count] : model.square_counts) {
    const auto level = corner - tau;
    for (std::int64_t r = 0; r < count; ++r, ++square) {
      auto nm = [&](const char* c) { return detail::square_name(square, c); };
      out["a " + nm("x1")] = closed_form::square(SquareFamily::a_x1, level, p, n, l);
      out["a " + nm("x3")] = closed_form::square(SquareFamily::a_x3, level, p, n, l);
      out["a " + nm("x4")] = closed_form::square(SquareFamily::a_x4, level, p, n, l);
      for (std::int64_t k = 1; k <= p - 1; ++k) {
        out[bname(k) + " " + nm("y1")] = closed_form::square(SquareFamily::bk_y1, level, p, n, l, k);
        out[bname(k) + " " + nm("y2")] = closed_form::square(SquareFamily::bk_y2, level, p, n, l, k);
      }
      out[bname(p) + " " + nm("y1")] = closed_form::square(SquareFamily::bp_y1, level, p, n, l);
      y_rows(nm("y4"), SquareFamily::bk_y4, SquareFamily::bi_y4, level);
      y_rows(nm("y3"), SquareFamily::bk_y3, SquareFamily::bi_y3, level);
    }
  }

  // Staircase generators share gradings with square generators:
  //   tau <= 0: u_{2t+1} ~ a x3 (level 2t),  v_{2t+1} ~ y4 (level 2t),
  //             u_{2t+2} ~ a x3 (level 2t+1), v_{2t+2} ~ y3 (level 2t+1)
  //   tau > 0:  u_{2t+1} ~ a x4 (level -2t-1), v_{2t+1} ~ y4 (level -2t-1),
  //             u_{2t+2} ~ a x3 (level -2t-1), v_{2t+2} ~ y3 (level -2t-2)
  for (std::int64_t t = 0; 2 * t + 1 <= 2 * L + 1; ++t) {
    const auto u_odd = "u" + std::to_string(2 * t + 1);
    const auto v_odd = "v" + std::to_string(2 * t + 1);
    const auto u_even = "u" + std::to_string(2 * t + 2);
    const auto v_even = "v" + std::to_string(2 * t + 2);
    if (tau <= 0) {
      out["a " + u_odd] = closed_form::square(SquareFamily::a_x3, 2 * t, p, n, l);
      if (2 * t + 1 <= 2 * L) {
        y_rows(v_odd, SquareFamily::bk_y4, SquareFamily::bi_y4, 2 * t);
        out["a " + u_even] = closed_form::square(SquareFamily::a_x3, 2 * t + 1, p, n, l);
        y_rows(v_even, SquareFamily::bk_y3, SquareFamily::bi_y3, 2 * t + 1);
      }
    } else {
      out["a " + u_odd] = closed_form::square(SquareFamily::a_x4, -2 * t - 1, p, n, l);
      if (2 * t + 1 <= 2 * L) {
        y_rows(v_odd, SquareFamily::bk_y4, SquareFamily::bi_y4, -2 * t - 1);
        out["a " + u_even] = closed_form::square(SquareFamily::a_x3, -2 * t - 1, p, n, l);
        y_rows(v_even, SquareFamily::bk_y3, SquareFamily::bi_y3, -2 * t - 2);
      }
    }
  }

  for (std::int64_t j = 0; j < std::abs(m); ++j) {
    const auto mu_name = "mu" + std::to_string(j + 1);
    for (std::int64_t k = 1; k <= p - 1; ++k) out[bname(k) + " " + mu_name] = closed_form::mu(true, k, j, p, n, l, m);
    for (std::int64_t i = 0; i <= p - 2; ++i)
      out[bname(2 * p - i - 2) + " " + mu_name] = closed_form::mu(false, i, j, p, n, l, m);
  }
  return out;
}

}  // namespace cablefloer
