#include <gtest/gtest.h>

#include "cablefloer/pipeline.hpp"
#include "oracles.hpp"

using namespace cablefloer;

namespace {

LaurentPolynomial from_oracle(const oracle::Poly& p) { return LaurentPolynomial(LaurentPolynomial::map_type(p.begin(), p.end())); }

RankTable table_of(std::initializer_list<std::tuple<std::int64_t, std::int64_t, std::int64_t>> entries) {
  RankTable t;
  for (const auto& [a, m, r] : entries) t.add(a, m, r);
  return t;
}

}  // namespace

TEST(Tau, Cable) {
  EXPECT_EQ(tau_cable(0, 2, 1), (TauResult{1, TauBranch::nonneg_case}));
  EXPECT_EQ(tau_cable(0, 5, 3).value, 30);
  EXPECT_EQ(tau_cable(-1, 2, -2), (TauResult{-3, TauBranch::shifted_case}));
  EXPECT_EQ(tau_cable(0, 2, -1).branch, TauBranch::shifted_case);
  EXPECT_THROW(tau_cable(0, 1, 1), InputError);
}

TEST(Tau, GeneralQ) {
  EXPECT_EQ(tau_pq(0, 2, 3).value, 1);
  EXPECT_EQ(tau_pq(1, 3, 2).value, 4);
  EXPECT_EQ(tau_pq(-1, 2, -3).value, -3);
  EXPECT_THROW(tau_pq(0, 3, 0), InputError);   // 1 - p < q < 1
  EXPECT_THROW(tau_pq(0, 3, -1), InputError);
  EXPECT_EQ(tau_pq(0, 3, -2).value, -1);       // q = 1 - p
  EXPECT_THROW(tau_pq(1, 4, 6), InputError);   // not coprime
}

TEST(Tau, FourBallGenus) {
  EXPECT_EQ(four_ball_genus_of_cable(1, 2, 3), 3);
  EXPECT_THROW(four_ball_genus_of_cable(-1, 2, 3), InputError);
  EXPECT_THROW(four_ball_genus_of_cable(1, 2, -3), InputError);
}

TEST(Tau, CableAgreesWithGeneralQ) {
  for (std::int64_t tau = -3; tau <= 3; ++tau)
    for (std::int64_t p = 2; p <= 7; ++p)
      for (std::int64_t n = -5; n <= 5; ++n)
        ASSERT_EQ(tau_cable(tau, p, n), tau_pq(tau, p, p * n + 1)) << tau << " " << p << " " << n;
  for (std::int64_t p = 2; p <= 7; ++p) {
    for (std::int64_t q = 1; q <= 30; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ASSERT_EQ(tau_pq(0, p, q).value, (p - 1) * (q - 1) / 2);
    }
  }
}

TEST(TableRank, Cells) {
  EXPECT_EQ(table_rank(0, 6, 5, 3).value, 181);
  EXPECT_FALSE(table_rank(0, 6, 5, 3).advisory);
  EXPECT_EQ(table_rank(0, 0, 2, -2).value, 3);
  EXPECT_FALSE(table_rank(0, 0, 2, -2).advisory);
  EXPECT_EQ(table_rank(1, 0, 2, 1).value, 7);
  EXPECT_TRUE(table_rank(1, 0, 2, 1).advisory);
  EXPECT_TRUE(table_rank(-1, 0, 3, -2).advisory);
  EXPECT_FALSE(table_rank(-1, 0, 3, -3).advisory);
}

TEST(Symmetry, Check) {
  EXPECT_TRUE(check_symmetry(RankTable{}));
  EXPECT_TRUE(check_symmetry(table_of({{40, 2, 2}, {-40, -78, 2}})));
  EXPECT_FALSE(check_symmetry(table_of({{1, 0, 1}})));
  EXPECT_TRUE(check_symmetry(table_of({{1, 0, 1}, {0, -1, 1}, {-1, -2, 1}})));
}

TEST(Euler, Characteristic) {
  EXPECT_EQ(euler_characteristic(table_of({{1, 0, 1}, {0, -1, 1}, {-1, -2, 1}})), parse_delta("1,-1,1"));
  EXPECT_TRUE(euler_characteristic(RankTable{}).is_zero());
}

TEST(TorusAlexander, AgreesWithSemigroupOracle) {
  for (std::int64_t p = 1; p <= 7; ++p) {
    for (std::int64_t q = -25; q <= 25; ++q) {
      if (q == 0 || std::gcd(p, q) != 1) continue;
      ASSERT_EQ(torus_alexander(p, q), from_oracle(oracle::torus_delta(p, q))) << p << "," << q;
    }
  }
}

TEST(CableAlexander, Examples) {
  EXPECT_EQ(cable_alexander(parse_delta("1"), 2, 3), parse_delta("1,-1,1"));
  EXPECT_EQ(cable_alexander(parse_delta("1,-1,1"), 2, 3), (LaurentPolynomial{{3, 1}, {2, -1}, {0, 1}, {-2, -1}, {-3, 1}}));
  EXPECT_EQ(cable_alexander(parse_delta("2,-6,9,-6,2"), 4, 1), parse_delta("2,-6,9,-6,2").substitute_power(4));
}

TEST(Mirror, P2Consistency) {
  EXPECT_TRUE(mirror_check(parse_delta("1,-1,1"), 1, 1, hfk_ranks));
  EXPECT_EQ(hfk_ranks(parse_delta("1,-1,1"), 1, 2, 1).total(), 5);
  EXPECT_EQ(hfk_ranks(parse_delta("1,-1,1"), -1, 2, -2).total(), 5);
  EXPECT_TRUE(mirror_check(parse_delta("1"), 0, 1, hfk_ranks));
  EXPECT_EQ(hfk_ranks(parse_delta("1"), 0, 2, -2).total(), 3);
  EXPECT_TRUE(mirror_check(parse_delta("-1,3,-1"), 0, 0, hfk_ranks));
}
