#include <gtest/gtest.h>

#include <sstream>

#include "faultcalc/errors.hpp"
#include "faultcalc/laws.hpp"
#include "faultcalc/report.hpp"

using namespace faultcalc;

namespace {

laws::TrialConfig quick() {
  laws::TrialConfig c;
  c.trials = 60;
  c.max_dim = 4;
  return c;
}

}  // namespace

class EveryLaw : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryLaw, HoldsOrFailsAsExpected) {
  const auto r = laws::check_law(GetParam(), quick());
  EXPECT_TRUE(r.ok()) << laws::serialize(r) << "\n" << r.witness << "\n" << r.note;
  EXPECT_EQ(r.trials, 60u);
}

INSTANTIATE_TEST_SUITE_P(Catalogue, EveryLaw, ::testing::ValuesIn(laws::law_names()),
                         [](const auto& info) { return info.param; });

TEST(Laws, ExpectedFailuresAreMarked) {
  const auto r = laws::check_law("weak_product", quick());
  EXPECT_EQ(r.status, laws::Status::ExpectedFail);
  EXPECT_GE(r.max_dev, 0.2);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_EQ(laws::check_law("khatri_fusion_general", quick()).status, laws::Status::ExpectedFail);
  EXPECT_EQ(laws::check_law("khatri_fusion_sharp", quick()).status, laws::Status::Pass);
}

TEST(Laws, DeterministicForSeed) {
  auto cfg = quick();
  cfg.trials = 30;
  std::ostringstream a, b, c;
  laws::write_reports(a, laws::check_all(cfg), true);
  laws::write_reports(b, laws::check_all(cfg), true);
  EXPECT_EQ(a.str(), b.str());
  cfg.seed = 2;
  laws::write_reports(c, laws::check_all(cfg), true);
  EXPECT_NE(a.str(), c.str());
}

TEST(Laws, SerializeFormat) {
  laws::LawReport r;
  r.law = "x";
  r.trials = 5;
  r.max_dev = 1.5e-16;
  r.status = laws::Status::Pass;
  EXPECT_EQ(laws::serialize(r), "x\tpass\t1.500e-16\t5");
}

TEST(Laws, ConfigValidation) {
  laws::TrialConfig c;
  c.trials = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.max_dim = 1;
  EXPECT_THROW(c.validate(), DomainError);
  c = {};
  c.tol = 0;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(laws::check_law("no_such_law", {}), DomainError);
}

TEST(Laws, TrialStreamsDiffer) {
  auto a = laws::trial_rng(1, "x", 0), b = laws::trial_rng(1, "x", 1), c = laws::trial_rng(1, "y", 0);
  auto a2 = laws::trial_rng(1, "x", 0);
  const auto va = a();
  EXPECT_EQ(va, a2());
  EXPECT_NE(va, b());
  EXPECT_NE(va, c());
}

TEST(Laws, RandomGenerators) {
  auto rng = laws::trial_rng(3, "gen", 0);
  for (int t = 0; t < 50; ++t) {
    const Dim d = laws::random_dim(rng, 4, 2, 8);
    EXPECT_GE(d.size(), 1u);
    EXPECT_LE(d.size(), 8u);
    const Matrix m = laws::random_cs_matrix(rng, d, Dim::range(3));
    EXPECT_TRUE(column_stochastic(m));
    EXPECT_TRUE(is_sharp(laws::random_sharp(rng, Dim::range(3), d)));
    const double u = laws::uniform01(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(laws::below(rng, 5), 5u);
  }
}

TEST(WeakProduct, ReconstructionLosesCorrelation) {
  const Matrix k = laws::weak_product_witness();
  EXPECT_TRUE(column_stochastic(k));
  const Matrix r = laws::reconstruct(k);
  EXPECT_TRUE(column_stochastic(r));
  EXPECT_GE(max_abs_diff(r, k), 0.2);
  // Independent oracle: outer product of the two marginals of column 0.
  const double b0 = 0 + 0.2 + 0.2, b1 = 0.6 + 0 + 0;
  const double c0 = 0 + 0.6, c1 = 0.2 + 0, c2 = 0.2 + 0;
  const double want[6] = {b0 * c0, b0 * c1, b0 * c2, b1 * c0, b1 * c1, b1 * c2};
  for (std::size_t r6 = 0; r6 < 6; ++r6) EXPECT_NEAR(r.at(r6, 0), want[r6], 1e-12);
}

TEST(RiskPreorder, LinearFibonacciDominates) {
  const auto r = report::fib_risk(0.1, 6);
  EXPECT_TRUE(r.holds);
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_GE(r.h_correct[n] + 1e-12, r.g_correct[n]) << n;
  EXPECT_NEAR(r.g_correct[5], 0.6561, 1e-12);
  EXPECT_NEAR(r.h_correct[5], 0.729, 1e-12);
}

TEST(RiskPreorder, SharpFunctionIsTop) {
  auto rng = laws::trial_rng(9, "risk", 0);
  const Dim a = Dim::range(4), b = Dim::range(5);
  const Matrix f = laws::random_sharp(rng, a, b);
  for (int t = 0; t < 20; ++t) {
    EXPECT_TRUE(laws::risk_preorder(laws::random_cs_matrix(rng, a, b), f, f).holds);
  }
  const Matrix g = laws::random_cs_matrix(rng, a, b);
  EXPECT_FALSE(laws::risk_preorder(f, g, f).holds);
  EXPECT_THROW(laws::risk_preorder(g, g, g), DomainError);
  EXPECT_THROW(laws::risk_preorder(g, g, laws::random_sharp(rng, a, Dim::range(2))), DimensionError);
}
