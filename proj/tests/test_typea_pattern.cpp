#include <gtest/gtest.h>

#include <set>

#include "cablefloer/typea_pattern.hpp"

using namespace cablefloer;
using G = GradingElement;
using C = Chord;

namespace {

std::optional<AOperation> op(const TypeAModule& A, const std::string& source, std::vector<Chord> seq) {
  for (std::size_t i = 0; i < A.generators().size(); ++i)
    if (A.generators()[i].name == source) return A.find(i, seq);
  ADD_FAILURE() << "no generator " << source;
  return std::nullopt;
}

std::string target(const TypeAModule& A, const std::optional<AOperation>& o) {
  return o ? A.generators()[o->target].name : "<none>";
}

}  // namespace

TEST(TypeA, OperationsAtP2) {
  const TypeAModule A(2);
  auto m1 = op(A, "b1", {});
  ASSERT_TRUE(m1);
  EXPECT_EQ(target(A, m1), "b2");
  EXPECT_EQ(m1->u_power, 1);

  auto m2 = op(A, "a", {C::rho1});
  EXPECT_EQ(target(A, m2), "b2");
  EXPECT_EQ(m2->u_power, 0);

  auto m3 = op(A, "a", {C::rho3, C::rho2});
  EXPECT_EQ(target(A, m3), "a");
  EXPECT_EQ(m3->u_power, 2);

  auto m4 = op(A, "a", {C::rho3, C::rho2, C::rho1});
  EXPECT_EQ(target(A, m4), "b1");
  EXPECT_EQ(m4->u_power, 1);

  EXPECT_FALSE(op(A, "a", {C::rho2}));
  EXPECT_FALSE(op(A, "b2", {}));
  EXPECT_FALSE(op(A, "a", {C::rho12, C::rho1}));  // i = 1 > p - 2
}

TEST(TypeA, OperationsAtP3) {
  const TypeAModule A(3);
  auto x = op(A, "b4", {C::rho2, C::rho1});
  EXPECT_EQ(target(A, x), "b3");
  EXPECT_EQ(x->u_power, 0);
  auto y = op(A, "a", {C::rho12, C::rho1});
  EXPECT_EQ(target(A, y), "b3");
  EXPECT_EQ(y->u_power, 0);
  auto z = op(A, "a", {C::rho3, C::rho23, C::rho23, C::rho2});
  EXPECT_EQ(target(A, z), "a");
  EXPECT_EQ(z->u_power, 9);
}

TEST(TypeA, GeneratorGradings) {
  const TypeAModule A(2);
  EXPECT_EQ(A.generators()[2].grading, G::doubled(-1, 1, -1, 0));
  EXPECT_EQ(A.generators()[1].grading, G::doubled(1, 1, -1, -2));
  EXPECT_EQ(A.g(), G::doubled(-1, 0, 2, 4));
  EXPECT_THROW(TypeAModule(1), InputError);
}

TEST(TypeA, HatOperations) {
  const TypeAModule p2(2);
  const auto h2 = p2.hat_operations();
  ASSERT_EQ(h2.size(), 1u);
  EXPECT_EQ(h2[0], (AOperation{0, {C::rho1}, 0, 2}));

  const TypeAModule p3(3);
  const auto h3 = p3.hat_operations();
  const std::set<std::pair<std::string, std::string>> got = [&] {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& o : h3) {
      std::string in;
      for (auto c : o.inputs) in += std::string(chord_label(c)) + ",";
      s.insert({p3.generators()[o.source].name + ":" + in, p3.generators()[o.target].name});
    }
    return s;
  }();
  EXPECT_EQ(got, (std::set<std::pair<std::string, std::string>>{
                     {"a:1,", "b4"}, {"a:12,1,", "b3"}, {"b4:2,1,", "b3"}}));

  for (std::int64_t p = 2; p <= 8; ++p) {
    const TypeAModule A(p);
    EXPECT_EQ(static_cast<std::int64_t>(A.hat_operations().size()), (p - 1) + (p - 2) * (p - 1) / 2) << p;
  }
}

// m_{k+1}(x, r_1, ..., r_k) = U^u y forces
//   gr(x) gr(r_1) ... gr(r_k) = lambda^{1-k} U^u g^alpha gr(y)
// for some alpha, with gr(U) = (0; 0, 0; -1).
TEST(TypeAProperty, OperationsRespectGradings) {
  const auto U = G::integral(0, 0, 0, -1);
  for (std::int64_t p = 2; p <= 6; ++p) {
    const TypeAModule A(p);
    for (const auto& o : A.operations(8)) {
      auto lhs = A.generators()[o.source].grading;
      for (auto c : o.inputs) lhs = lhs * rho_grading(chord_label(c));
      const auto k = static_cast<std::int64_t>(o.inputs.size());
      const auto rest = lhs * ginv(A.generators()[o.target].grading) * gpow(G::lambda(), k - 1) * gpow(U, -o.u_power);
      ASSERT_EQ(rest.b2(), 0);
      ASSERT_EQ(rest.c2() % 2, 0);
      ASSERT_EQ(rest, gpow(A.g(), rest.c2() / 2))
          << "p=" << p << " " << A.generators()[o.source].name << " -> " << A.generators()[o.target].name;
    }
  }
}
