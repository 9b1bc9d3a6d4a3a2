#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "vogelcas/rootsys.hpp"

namespace vogelcas {

void PrintTo(const AlgebraId& id, std::ostream* os) { *os << id.label(); }

namespace {

RootSystem build(const char* name) { return RootSystem::build(AlgebraId::parse(name)); }

bool contains(std::span<const Vec> xs, const Vec& v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

TEST(RootSystemTest, A1) {
  const RootSystem rs = build("A1");
  ASSERT_EQ(rs.roots().size(), 2u);
  const Vec theta{1, -1};
  EXPECT_EQ(rs.theta(), theta);
  EXPECT_EQ(rs.rho(), (Vec{Rational(1, 2), Rational(-1, 2)}));
  EXPECT_EQ(rs.scale(), Rational(1));
  EXPECT_EQ(rs.b_form(theta, theta), Rational(2));
  EXPECT_EQ(rs.dual_coxeter(), Rational(2));
  EXPECT_EQ(rs.weyl_adjoint_dim(), Rational(3));
}

TEST(RootSystemTest, A2) {
  const RootSystem rs = build("A2");
  EXPECT_EQ(rs.theta(), (Vec{1, 0, -1}));
  EXPECT_EQ(rs.rho(), (Vec{1, 0, -1}));
  EXPECT_EQ(rs.b_form(rs.rho(), rs.theta()), Rational(2));
  EXPECT_EQ(rs.weyl_adjoint_dim(), Rational(8));
}

TEST(RootSystemTest, C2UsesHalfScale) {
  const RootSystem rs = build("C2");
  EXPECT_EQ(rs.scale(), Rational(1, 2));
  EXPECT_EQ(rs.b_form(Vec{2, 0}, Vec{2, 0}), Rational(2));
  EXPECT_EQ(rs.theta(), (Vec{2, 0}));
}

TEST(RootSystemTest, G2UsesThirdScale) {
  const RootSystem rs = build("G2");
  EXPECT_EQ(rs.roots().size(), 12u);
  EXPECT_EQ(rs.scale(), Rational(1, 3));
  EXPECT_EQ(rs.theta(), (Vec{-1, -1, 2}));
  EXPECT_EQ(rs.dual_coxeter(), Rational(4));
}

TEST(RootSystemTest, ExceptionalSizes) {
  EXPECT_EQ(build("F4").roots().size(), 48u);
  EXPECT_EQ(build("E6").roots().size(), 72u);
  EXPECT_EQ(build("E7").roots().size(), 126u);
  const RootSystem e8 = build("E8");
  EXPECT_EQ(e8.roots().size(), 240u);
  EXPECT_EQ(e8.ambient_dim(), 8u);
  EXPECT_EQ(e8.dual_coxeter(), Rational(30));
  EXPECT_EQ(build("F4").weyl_adjoint_dim(), Rational(52));
}

TEST(RootSystemTest, BFormDimensionMismatch) {
  EXPECT_THROW(build("A2").b_form(Vec{1, 0}, Vec{1, 0, 0}), std::invalid_argument);
}

TEST(RootSystemTest, SuperalgebraRejected) {
  EXPECT_THROW(RootSystem::build(AlgebraId::parse("sl(4|2)")), std::invalid_argument);
}

class SuiteRootSystemTest : public ::testing::TestWithParam<AlgebraId> {};

TEST_P(SuiteRootSystemTest, Invariants) {
  const AlgebraId id = GetParam();
  const RootSystem rs = RootSystem::build(id);
  const auto roots = rs.roots();
  const auto pos = rs.positive_roots();

  ASSERT_EQ(pos.size() * 2, roots.size());
  for (const Vec& mu : pos) {
    EXPECT_TRUE(contains(roots, -mu));
    EXPECT_FALSE(contains(pos, -mu));
  }

  Vec sum(rs.ambient_dim());
  for (const Vec& mu : pos) sum = sum + mu;
  for (auto& x : sum) x /= Rational(2);
  EXPECT_EQ(sum, rs.rho());

  EXPECT_EQ(rs.b_form(rs.theta(), rs.theta()), Rational(2));

  // theta - mu is a nonnegative integer combination of simple roots.
  for (const Vec& mu : roots) {
    const Vec c = rs.simple_coordinates(rs.theta() + (-mu));
    for (const Rational& x : c) EXPECT_TRUE(x.is_integer() && x.sign() >= 0);
  }

  const Vec shifted = rs.theta() + rs.rho();
  for (const Vec& mu : pos) {
    EXPECT_GT(rs.b_form(shifted, mu), Rational(0));
    EXPECT_GT(rs.b_form(rs.rho(), mu), Rational(0));
  }

  EXPECT_EQ(rs.dual_coxeter(), lookup(id).t());
  EXPECT_EQ(rs.weyl_adjoint_dim(), dim_g(lookup(id)));

  // Killing consistency on simple pairs.
  const Rational two_h = Rational(2) * rs.dual_coxeter();
  for (const Vec& x : rs.simple_roots())
    for (const Vec& y : rs.simple_roots()) {
      Rational s;
      for (const Vec& mu : roots) s += rs.b_form(x, mu) * rs.b_form(y, mu);
      EXPECT_EQ(s, two_h * rs.b_form(x, y));
    }
}

INSTANTIATE_TEST_SUITE_P(DefaultSuite, SuiteRootSystemTest, ::testing::ValuesIn(default_suite()),
                         [](const ::testing::TestParamInfo<AlgebraId>& info) {
                           return info.param.label();
                         });

}  // namespace
}  // namespace vogelcas
