#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "faultcalc/cases.hpp"
#include "faultcalc/errors.hpp"
#include "faultcalc/golden.hpp"

using namespace faultcalc;

namespace {

Value i(std::int64_t n) { return Value::integer(n); }

// Fault-bit enumeration. A program is run once to record its fault sites,
// then once per assignment of those sites; sites do not depend on data.
class Tape {
 public:
  bool fault(double p) {
    if (recording_) {
      probs_.push_back(p);
      return false;
    }
    return bits_[pos_++];
  }

  template <class F>
  static Dist enumerate(F program) {
    Tape t;
    program(t);
    const std::size_t k = t.probs_.size();
    std::map<Value, double> acc;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
      Tape run;
      run.recording_ = false;
      double w = 1.0;
      for (std::size_t j = 0; j < k; ++j) {
        const bool b = (mask >> j) & 1;
        run.bits_.push_back(b);
        w *= b ? t.probs_[j] : 1.0 - t.probs_[j];
      }
      acc[program(run)] += w;
    }
    std::vector<Dist::Entry> entries;
    for (const auto& [v, m] : acc) {
      if (m > 0) entries.emplace_back(v, m);
    }
    return Dist(entries);
  }

 private:
  bool recording_ = true;
  std::vector<double> probs_;
  std::vector<bool> bits_;
  std::size_t pos_ = 0;
};

std::int64_t fib_rec(Tape& t, double p, int n) {
  if (n < 2) return n;
  const auto x = fib_rec(t, p, n - 2);
  const auto y = fib_rec(t, p, n - 1);
  return t.fault(p) ? y : x + y;
}

std::int64_t fib_lin(Tape& t, double p, int n) {
  std::int64_t a = 0, b = 1;
  for (int j = 0; j < n; ++j) {
    const std::int64_t nb = t.fault(p) ? b : a + b;
    a = b;
    b = nb;
  }
  return a;
}

std::int64_t odd_rec(Tape& t, double q, int n) {
  if (n == 0) return 1;
  const auto o = odd_rec(t, q, n - 1);
  return q > 0 && t.fault(q) ? o : o + 2;
}

std::int64_t sq_rec(Tape& t, double p, double q, int n) {
  if (n == 0) return 0;
  const auto s = sq_rec(t, p, q, n - 1);
  const auto o = odd_rec(t, q, n - 1);
  return t.fault(p) ? o : s + o;
}

std::int64_t sq_lin(Tape& t, double p, double q, int n) {
  std::int64_t s = 0, o = 1;
  for (int j = 0; j < n; ++j) {
    const std::int64_t ns = t.fault(p) ? o : s + o;
    o = q > 0 && t.fault(q) ? o : o + 2;
    s = ns;
  }
  return s;
}

std::string drop_chars(Tape& t, double p, const std::string& s) {
  std::string kept;
  for (std::size_t j = s.size(); j-- > 0;) {
    if (!t.fault(p)) kept.insert(kept.begin(), s[j]);
  }
  return kept;
}

std::int64_t count_chars(Tape& t, double q, const std::string& s) {
  std::int64_t c = 0;
  for (std::size_t j = 0; j < s.size(); ++j) c += t.fault(q) ? 0 : 1;
  return c;
}

void expect_same(const Dist& got, const Dist& want, double tol = 1e-12) {
  EXPECT_LE(tv_distance(got, want), tol) << "got\n" << render(got) << "want\n" << render(want);
}

}  // namespace

TEST(FaultyAdd, Variants) {
  const Dist d = cases::fadd(Probability(0.1), 3)(i(4));
  EXPECT_DOUBLE_EQ(d.mass(i(4)), 0.1);
  EXPECT_DOUBLE_EQ(d.mass(i(7)), 0.9);
  EXPECT_DOUBLE_EQ(cases::fadd_zero(Probability(0.2), 3)(i(4)).mass(i(0)), 0.2);
  const Dist c = cases::fadd_combined(Probability(0.5), Probability(0.2), 3)(i(4));
  EXPECT_DOUBLE_EQ(c.mass(i(0)), 0.1);
  EXPECT_DOUBLE_EQ(c.mass(i(4)), 0.4);
  EXPECT_DOUBLE_EQ(c.mass(i(7)), 0.5);
}

TEST(Fibonacci, RecursiveMatchesFaultEnumeration) {
  for (double p : {0.0, 0.1, 0.37}) {
    for (int n = 0; n <= 7; ++n) {
      expect_same(cases::mfib(Probability(p), n), Tape::enumerate([&](Tape& t) { return i(fib_rec(t, p, n)); }));
    }
  }
}

TEST(Fibonacci, LinearMatchesFaultEnumeration) {
  for (double p : {0.0, 0.1, 0.37}) {
    for (int n = 0; n <= 10; ++n) {
      expect_same(cases::mfibl(Probability(p), n), Tape::enumerate([&](Tape& t) { return i(fib_lin(t, p, n)); }));
    }
  }
}

TEST(Fibonacci, VersionsDivergeFromFive) {
  const Probability p(0.1);
  EXPECT_LE(tv_distance(cases::mfib(p, 4), cases::mfibl(p, 4)), 1e-12);
  const double tv = tv_distance(Tape::enumerate([](Tape& t) { return i(fib_rec(t, 0.1, 5)); }),
                                Tape::enumerate([](Tape& t) { return i(fib_lin(t, 0.1, 5)); }));
  EXPECT_NEAR(tv_distance(cases::mfib(p, 5), cases::mfibl(p, 5)), tv, 1e-12);
  EXPECT_GE(tv, 0.05);
}

TEST(Fibonacci, FaultFreeIsSharp) {
  EXPECT_EQ(cases::mfib(Probability(0.0), 10).dirac_value(), i(55));
  EXPECT_EQ(cases::mfibl(Probability(0.0), 10).dirac_value(), i(55));
}

TEST(Squares, MatchFaultEnumeration) {
  for (double p : {0.1, 0.45}) {
    for (int n = 0; n <= 8; ++n) {
      const Dist want = Tape::enumerate([&](Tape& t) { return i(sq_lin(t, p, 0.0, n)); });
      expect_same(cases::msql(Probability(p), n), want);
      expect_same(cases::msq(Probability(p), n), want);
    }
  }
}

TEST(Squares, PrimedMatchFaultEnumeration) {
  const double p = 0.1, q = 0.2;
  for (int n = 0; n <= 4; ++n) {
    expect_same(cases::msq_prime(Probability(p), Probability(q), n),
                Tape::enumerate([&](Tape& t) { return i(sq_rec(t, p, q, n)); }));
    expect_same(cases::msql_prime(Probability(p), Probability(q), n),
                Tape::enumerate([&](Tape& t) { return i(sq_lin(t, p, q, n)); }));
  }
}

TEST(Squares, OddProjectionIsSharp) {
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(cases::msqlo(Probability(0.1), n).dirac_value(), i(2 * n + 1));
}

TEST(Doubling, IsBinomial) {
  const Dist d = cases::ftwice(Probability(0.25), 3);
  EXPECT_NEAR(d.mass(i(6)), 0.75 * 0.75 * 0.75, 1e-15);
  EXPECT_NEAR(d.mass(i(2)), 3 * 0.75 * 0.25 * 0.25, 1e-15);
}

TEST(ListFolds, MatchFaultEnumeration) {
  for (const std::string s : {"", "a", "abc", "abca"}) {
    expect_same(cases::fcat(Probability(0.1), Value::text(s)),
                Tape::enumerate([&](Tape& t) { return Value::text(drop_chars(t, 0.1, s)); }));
    expect_same(cases::fcount(Probability(0.15), Value::text(s)),
                Tape::enumerate([&](Tape& t) { return i(count_chars(t, 0.15, s)); }));
    const Dist pipe = Tape::enumerate([&](Tape& t) { return i(count_chars(t, 0.15, drop_chars(t, 0.1, s))); });
    expect_same(cases::pipeline_count_cat(Probability(0.1), Probability(0.15), Value::text(s)), pipe);
    expect_same(cases::pipeline_consolidated(Probability(0.1), Probability(0.15), Value::text(s)), pipe);
  }
}

TEST(ListFolds, SumAndCountPair) {
  const std::vector<std::int64_t> xs{2, 3, 4};
  const Dist want = Tape::enumerate([&](Tape& t) {
    std::int64_t sum = 0;
    for (std::size_t j = xs.size(); j-- > 0;) sum = t.fault(0.15) ? sum : sum + xs[j];
    std::int64_t c = 0;
    for (std::size_t j = 0; j < xs.size(); ++j) c += t.fault(0.1) ? 0 : 1;
    return Value::pair(i(sum), i(c));
  });
  const Value v = Value::list({i(2), i(3), i(4)});
  expect_same(cases::favg_pair(Probability(0.15), Probability(0.1), v), want);
  expect_same(cases::favg_split(Probability(0.15), Probability(0.1), v), want);
}

TEST(Registry, RunsEveryCase) {
  for (const auto& c : cases::registry()) {
    cases::CaseParams params;
    params.input = c.input == cases::InputKind::Natural ? i(3)
                   : c.input == cases::InputKind::Text ? Value::text("ab")
                                                       : Value::list({i(1), i(2)});
    EXPECT_NEAR(cases::run_case(c.name, params).total(), 1.0, 1e-12) << c.name;
  }
  EXPECT_NE(cases::find_case("msq_prime"), nullptr);
  EXPECT_EQ(cases::find_case("nope"), nullptr);
}

TEST(Registry, RejectsWrongCarrier) {
  EXPECT_THROW(cases::run_case("mfib", {0.1, 0.1, Value::text("x")}), DomainError);
  EXPECT_THROW(cases::run_case("mfib", {0.1, 0.1, i(-1)}), DomainError);
  EXPECT_THROW(cases::run_case("fcat", {0.1, 0.1, i(3)}), DomainError);
  EXPECT_THROW(cases::run_case("nope", {0.1, 0.1, i(3)}), DomainError);
}

TEST(Golden, EveryTableMatches) {
  for (const auto& t : golden::tables()) {
    const auto check = golden::compare(t.lines, cases::run_case(t.program, t.params));
    EXPECT_TRUE(check.ok) << t.id;
    for (const auto& l : check.lines) {
      EXPECT_TRUE(l.ok) << t.id << " " << render(l.value) << " printed " << l.expected << " got " << l.computed;
    }
  }
}

TEST(Golden, CompareCatchesMissingAndExtraLines) {
  const Dist d{{i(1), 0.5}, {i(2), 0.5}};
  EXPECT_FALSE(golden::compare({{i(1), 50.0}}, d).ok);
  EXPECT_FALSE(golden::compare({{i(1), 50.0}, {i(2), 49.9}}, d).ok);
  EXPECT_TRUE(golden::compare({{i(1), 50.0}, {i(2), 50.0}, {i(3), 0.0}}, d).ok);
}

TEST(Golden, PrintedPrecision) {
  EXPECT_TRUE(golden::matches_printed("0.81", 0.8100000000000001));
  EXPECT_TRUE(golden::matches_printed("0.0036", 0.0036000000000000008));
  EXPECT_FALSE(golden::matches_printed("0.18", 0.1851));
  EXPECT_TRUE(golden::matches_printed("0", 0.0));
  EXPECT_FALSE(golden::matches_printed("0", 1e-9));
}
