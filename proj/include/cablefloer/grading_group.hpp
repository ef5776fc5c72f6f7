#pragma once

// Exact arithmetic in the torus-boundary grading group: quadruples of
// half-integers (a; b, c; d) with
//   (a1;b1,c1;d1)(a2;b2,c2;d2) = (a1+a2 + b1*c2 - c1*b2; b1+b2, c1+c2; d1+d2).
// Every entry is stored doubled so half-integers stay exact.

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "cablefloer/errors.hpp"

namespace cablefloer {

/// A half-integer stored as twice its value.
struct Half {
  std::int64_t twice = 0;

  static constexpr Half from_int(std::int64_t v) { return Half{2 * v}; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr std::int64_t as_integer() const { return twice / 2; }

  friend constexpr bool operator==(Half, Half) = default;
};

inline std::string to_string(Half h) {
  if (h.is_integer()) return std::to_string(h.as_integer());
  return std::to_string(h.twice) + "/2";
}

class GradingElement {
 public:
  constexpr GradingElement() = default;

  /// From doubled entries: (a2/2; b2/2, c2/2; d2/2).
  static constexpr GradingElement doubled(std::int64_t a2, std::int64_t b2, std::int64_t c2,
                                          std::int64_t d2) {
    GradingElement x;
    x.a2_ = a2;
    x.b2_ = b2;
    x.c2_ = c2;
    x.d2_ = d2;
    return x;
  }

  static constexpr GradingElement integral(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return doubled(2 * a, 2 * b, 2 * c, 2 * d);
  }

  static constexpr GradingElement identity() { return GradingElement{}; }

  /// lambda = (1; 0, 0; 0), the central element.
  static constexpr GradingElement lambda() { return integral(1, 0, 0, 0); }

  constexpr Half a() const { return Half{a2_}; }
  constexpr Half b() const { return Half{b2_}; }
  constexpr Half c() const { return Half{c2_}; }
  constexpr Half d() const { return Half{d2_}; }

  constexpr std::int64_t a2() const { return a2_; }
  constexpr std::int64_t b2() const { return b2_; }
  constexpr std::int64_t c2() const { return c2_; }
  constexpr std::int64_t d2() const { return d2_; }

  friend constexpr bool operator==(const GradingElement&, const GradingElement&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << cablefloer::to_string(a()) << "; " << cablefloer::to_string(b()) << ", "
       << cablefloer::to_string(c()) << "; " << cablefloer::to_string(d()) << ')';
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const GradingElement& x) { return os << x.to_string(); }

 private:
  std::int64_t a2_ = 0;
  std::int64_t b2_ = 0;
  std::int64_t c2_ = 0;
  std::int64_t d2_ = 0;
};

inline GradingElement gmul(const GradingElement& x, const GradingElement& y) {
  // doubled determinant term is (B1*C2 - C1*B2) / 2 in doubled units
  const std::int64_t det4 = x.b2() * y.c2() - x.c2() * y.b2();
  if (det4 % 2 != 0)
    throw ConsistencyError("grading product leaves the half-integer lattice: " + x.to_string() + " * " +
                           y.to_string());
  return GradingElement::doubled(x.a2() + y.a2() + det4 / 2, x.b2() + y.b2(), x.c2() + y.c2(),
                                 x.d2() + y.d2());
}

inline GradingElement operator*(const GradingElement& x, const GradingElement& y) { return gmul(x, y); }

inline GradingElement ginv(const GradingElement& x) {
  return GradingElement::doubled(-x.a2(), -x.b2(), -x.c2(), -x.d2());
}

/// Powers of a single element commute with each other, so the determinant
/// term always vanishes and x^k is the entrywise multiple.
inline GradingElement gpow(const GradingElement& x, std::int64_t k) {
  return GradingElement::doubled(k * x.a2(), k * x.b2(), k * x.c2(), k * x.d2());
}

/// Gradings of the six Reeb elements of the torus algebra.
inline GradingElement rho_grading(std::string_view label) {
  static const GradingElement r1 = GradingElement::doubled(-1, 1, -1, 0);
  static const GradingElement r2 = GradingElement::doubled(-1, 1, 1, 0);
  static const GradingElement r3 = GradingElement::doubled(-1, -1, 1, 0);
  if (label == "1") return r1;
  if (label == "2") return r2;
  if (label == "3") return r3;
  if (label == "12") return r1 * r2;
  if (label == "23") return r2 * r3;
  if (label == "123") return r1 * r2 * r3;
  throw InputError("unknown Reeb chord label '" + std::string(label) + "'");
}

struct NormalizedGrading {
  std::int64_t N = 0;
  std::int64_t Aprime = 0;

  friend bool operator==(const NormalizedGrading&, const NormalizedGrading&) = default;
};

/// Picks the representative g^alpha * x * h^beta of the double coset
/// <g>\x/<h> whose middle entries vanish and returns its outer entries.
/// beta is fixed from the b-slot first (h has b = -1), then alpha from the
/// c-slot (g has middle (0, 1)).
inline NormalizedGrading normalize_double_coset(const GradingElement& x, const GradingElement& g,
                                                const GradingElement& h) {
  if (g.b2() != 0 || g.c2() != 2)
    throw ConsistencyError("left normalizer must have middle entries (0, 1), got " + g.to_string());
  if (h.b2() != -2) throw ConsistencyError("right normalizer must have b = -1, got " + h.to_string());

  if (!x.b().is_integer())
    throw ConsistencyError("b-entry of " + x.to_string() + " is not an integer; cannot clear it with h");
  const auto beta = x.b().as_integer();
  const auto y = x * gpow(h, beta);
  if (!y.c().is_integer())
    throw ConsistencyError("c-entry of " + y.to_string() + " is not an integer; cannot clear it with g");
  const auto alpha = -y.c().as_integer();
  const auto z = gpow(g, alpha) * y;
  if (z.b2() != 0 || z.c2() != 0) throw ConsistencyError("normalization failed to clear " + z.to_string());
  if (!z.a().is_integer() || !z.d().is_integer())
    throw ConsistencyError("normalized grading " + z.to_string() + " has non-integral entries");
  return NormalizedGrading{z.a().as_integer(), z.d().as_integer()};
}

}  // namespace cablefloer
