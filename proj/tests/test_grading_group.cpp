#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "cablefloer/grading_group.hpp"

using namespace cablefloer;
using G = GradingElement;

namespace {

// Random elements with the half-integer parity pattern of the gradings that
// actually occur: b and c both integral or both half-integral, so every
// product stays in the lattice.
G random_element(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  const int half = pick(0, 1);
  return G::doubled(pick(-12, 12), 2 * pick(-6, 6) + half, 2 * pick(-6, 6) + half, 2 * pick(-6, 6));
}

}  // namespace

TEST(GradingGroup, ProductLaw) {
  EXPECT_EQ(G::integral(0, 1, 0, 0) * G::integral(0, 0, 1, 0), G::integral(1, 1, 1, 0));
  EXPECT_EQ(rho_grading("1") * rho_grading("2"), G::doubled(-1, 2, 0, 0));
  EXPECT_EQ(rho_grading("12"), G::doubled(-1, 2, 0, 0));
  EXPECT_EQ(rho_grading("2"), G::doubled(-1, 1, 1, 0));
  EXPECT_EQ(rho_grading("123"), rho_grading("1") * rho_grading("2") * rho_grading("3"));
  EXPECT_EQ(rho_grading("23"), rho_grading("2") * rho_grading("3"));
  EXPECT_THROW(rho_grading("13"), InputError);
}

TEST(GradingGroup, Inverse) {
  EXPECT_EQ(ginv(G::identity()), G::identity());
  EXPECT_EQ(ginv(G::doubled(-1, 1, -1, 0)), G::doubled(1, -1, 1, 0));
  EXPECT_EQ(G::doubled(-1, 1, -1, 0) * G::doubled(1, -1, 1, 0), G::identity());
}

TEST(GradingGroup, Powers) {
  const auto g = G::doubled(-1, 0, 2, 4);  // (-1/2; 0, 1; 2)
  EXPECT_EQ(gpow(g, -2), G::integral(1, 0, -2, -4));
  EXPECT_EQ(gpow(g, -2), ginv(g) * ginv(g));
  EXPECT_EQ(gpow(G::lambda(), 3), G::integral(3, 0, 0, 0));
  EXPECT_EQ(gpow(g, -3), G::doubled(3, 0, -6, -12));
  const auto h = G::doubled(-3, -2, 4, 0);
  EXPECT_EQ(gpow(h, 1), h);
  EXPECT_EQ(gpow(h, 3), h * h * h);
}

TEST(GradingGroup, RejectsQuarterIntegers) {
  EXPECT_THROW(G::doubled(0, 1, 0, 0) * G::doubled(0, 0, 1, 0), ConsistencyError);
}

TEST(GradingGroup, ToString) { EXPECT_EQ(G::doubled(-3, -2, 4, 0).to_string(), "(-3/2; -1, 2; 0)"); }

TEST(GradingGroupProperty, AssociativeWithInversesAndCentralLambda) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
    ASSERT_EQ((x * y) * z, x * (y * z)) << x << y << z;
    ASSERT_EQ(x * ginv(x), G::identity()) << x;
    ASSERT_EQ(ginv(x) * x, G::identity()) << x;
    ASSERT_EQ(G::lambda() * x, x * G::lambda()) << x;
    ASSERT_EQ(ginv(x * y), ginv(y) * ginv(x)) << x << y;
  }
}

TEST(DoubleCoset, Examples) {
  const auto g = G::doubled(-1, 0, 2, 4);   // (-1/2; 0, 1; 2)
  const auto h = G::doubled(-3, -2, 4, 0);  // (-3/2; -1, 2; 0)
  EXPECT_EQ(normalize_double_coset(G::identity(), g, h), (NormalizedGrading{0, 0}));
  EXPECT_EQ(normalize_double_coset(G::integral(1, 0, 2, 0), g, h), (NormalizedGrading{2, -4}));
  EXPECT_EQ(normalize_double_coset(G::integral(3, 1, 1, -1), g, h), (NormalizedGrading{6, -7}));
}

TEST(DoubleCoset, RejectsWrongNormalizers) {
  const auto g = G::doubled(-1, 0, 2, 4);
  const auto h = G::doubled(-3, -2, 4, 0);
  EXPECT_THROW(normalize_double_coset(G::identity(), h, h), ConsistencyError);
  EXPECT_THROW(normalize_double_coset(G::identity(), g, g), ConsistencyError);
}

TEST(DoubleCosetProperty, InvariantAlongCosets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = 2 + static_cast<int>(rng() % 4);
    const auto m = static_cast<int>(rng() % 9) - 4, l = static_cast<int>(rng() % 5) - 2;
    const auto g = G::doubled(-1, 0, 2, 2 * p);
    const auto h = G::doubled(m - 1 - 2 * l, -2, 2 * (m + 2 * l), 0);
    // integral middle entries keep normalization possible
    const auto x = G::integral(static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4,
                               static_cast<int>(rng() % 9) - 4, static_cast<int>(rng() % 9) - 4);
    auto normalized = [&](const G& y) -> std::optional<NormalizedGrading> {
      try {
        return normalize_double_coset(y, g, h);
      } catch (const ConsistencyError&) {
        return std::nullopt;  // coset without an integral representative
      }
    };
    const auto i = static_cast<int>(rng() % 7) - 3, j = static_cast<int>(rng() % 7) - 3;
    ASSERT_EQ(normalized(gpow(g, i) * x * gpow(h, j)), normalized(x)) << x << " i=" << i << " j=" << j;
  }
}
