#include <gtest/gtest.h>

#include <cmath>

#include "faultcalc/dist.hpp"
#include "faultcalc/errors.hpp"

using namespace faultcalc;

namespace {
Value i(std::int64_t n) { return Value::integer(n); }
}  // namespace

TEST(Probability, RejectsOutsideUnitInterval) {
  EXPECT_THROW(Probability(-0.01), DomainError);
  EXPECT_THROW(Probability(1.01), DomainError);
  EXPECT_THROW(Probability(std::nan("")), DomainError);
  EXPECT_DOUBLE_EQ(Probability(0.25).complement(), 0.75);
}

TEST(Dist, ConstructorChecksMass) {
  EXPECT_THROW((Dist{{i(1), 0.5}, {i(2), 0.4}}), DomainError);
  EXPECT_THROW((Dist{{i(1), 1.5}, {i(2), -0.5}}), DomainError);
  EXPECT_NO_THROW((Dist{{i(1), 0.5}, {i(2), 0.5 + 5e-10}}));
}

TEST(Dist, DuplicatesMerge) {
  const Dist d{{i(1), 0.25}, {i(1), 0.25}, {i(2), 0.5}};
  EXPECT_EQ(d.size(), 2u);
  EXPECT_DOUBLE_EQ(d.mass(i(1)), 0.5);
  EXPECT_DOUBLE_EQ(d.mass(i(7)), 0.0);
}

TEST(Dist, ChoiceMixes) {
  const Dist d = choice(Probability(0.3), dirac(i(1)), dirac(i(2)));
  EXPECT_DOUBLE_EQ(d.mass(i(1)), 0.3);
  EXPECT_DOUBLE_EQ(d.mass(i(2)), 0.7);
  // Degenerate choices drop the unused branch entirely.
  EXPECT_EQ(choice(Probability(1.0), dirac(i(1)), dirac(i(2))).size(), 1u);
}

TEST(Dist, MonadUnitLaws) {
  const Dist d{{i(1), 0.2}, {i(2), 0.8}};
  const auto k = [](const Value& v) { return Dist{{v, 0.5}, {i(v.as_int() + 10), 0.5}}; };
  EXPECT_EQ(tv_distance(bind(dirac(i(1)), k), k(i(1))), 0.0);
  EXPECT_EQ(tv_distance(bind(d, [](const Value& v) { return dirac(v); }), d), 0.0);
}

TEST(Dist, BindAssociates) {
  const Dist d{{i(0), 0.1}, {i(1), 0.9}};
  const auto k = [](const Value& v) { return Dist{{i(v.as_int() * 2), 0.3}, {i(v.as_int() + 1), 0.7}}; };
  const auto h = [](const Value& v) { return Dist{{i(v.as_int() % 2), 0.6}, {i(5), 0.4}}; };
  const Dist lhs = bind(bind(d, k), h);
  const Dist rhs = bind(d, [&](const Value& v) { return bind(k(v), h); });
  EXPECT_LE(tv_distance(lhs, rhs), 1e-15);
}

TEST(Dist, PairIsIndependentProduct) {
  const Dist d{{i(0), 0.25}, {i(1), 0.75}};
  const Dist e{{i(5), 0.4}, {i(6), 0.6}};
  const Dist p = pair(d, e);
  EXPECT_DOUBLE_EQ(p.mass(Value::pair(i(1), i(6))), 0.75 * 0.6);
  EXPECT_LE(tv_distance(first_marginal(p), d), 1e-15);
  EXPECT_LE(tv_distance(second_marginal(p), e), 1e-15);
}

TEST(Dist, TvDistanceByHand) {
  const Dist d{{i(0), 0.5}, {i(1), 0.5}};
  const Dist e{{i(1), 0.25}, {i(2), 0.75}};
  // |0.5-0| + |0.5-0.25| + |0-0.75| = 1.5
  EXPECT_DOUBLE_EQ(tv_distance(d, e), 0.75);
  EXPECT_EQ(tv_distance(d, d), 0.0);
}

TEST(Dist, PruningDropsNegligibleMass) {
  const Dist d = choice(Probability(1e-17), dirac(i(1)), dirac(i(2)));
  EXPECT_EQ(d.size(), 1u);
}

TEST(Render, SortsByMassThenValue) {
  const Dist d{{i(3), 0.81}, {i(1), 0.01}, {i(2), 0.18}};
  EXPECT_EQ(render(d), "3\t81.0%\n2\t18.0%\n1\t1.0%\n");
  const Dist tie{{i(6), 0.5}, {i(4), 0.5}};
  EXPECT_EQ(render(tie), "4\t50.0%\n6\t50.0%\n");
}

TEST(Render, RoundsHalfAwayFromZero) {
  EXPECT_EQ(format_percent(0.0005), "0.1%");
  EXPECT_EQ(format_percent(0.00049), "0.0%");
  EXPECT_EQ(format_percent(0.6561), "65.6%");
  EXPECT_EQ(format_percent(0.10305), "10.3%");
  EXPECT_EQ(format_percent(1.0), "100.0%");
}

TEST(Render, CompoundValues) {
  EXPECT_EQ(render(Value::pair(i(5), i(2))), "(5,2)");
  EXPECT_EQ(render(Value::text("ab")), "\"ab\"");
}

TEST(ProbFn, KleisliAndSplit) {
  const ProbFn succ = ProbFn::sharp([](const Value& v) { return i(v.as_int() + 1); });
  const ProbFn coin([](const Value& v) { return Dist{{v, 0.5}, {i(0), 0.5}}; });
  const Dist d = kleisli(succ, coin)(i(4));
  EXPECT_DOUBLE_EQ(d.mass(i(5)), 0.5);
  EXPECT_DOUBLE_EQ(d.mass(i(1)), 0.5);
  const Dist s = split(succ, coin)(i(4));
  EXPECT_DOUBLE_EQ(s.mass(Value::pair(i(5), i(0))), 0.5);
  const std::vector<Value> ins{i(0), i(1)};
  EXPECT_TRUE(is_sharp(succ, ins));
  EXPECT_FALSE(is_sharp(coin, ins));
}
