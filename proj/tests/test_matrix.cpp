#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "faultcalc/errors.hpp"
#include "faultcalc/kernels.hpp"
#include "faultcalc/matrix.hpp"

using namespace faultcalc;

namespace {

Value i(std::int64_t n) { return Value::integer(n); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t cols, std::size_t rows) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(cols * rows);
  for (auto& x : v) x = u(rng);
  return Matrix(Dim::range(cols), Dim::range(rows), std::move(v));
}

Matrix random_cs(std::mt19937_64& rng, const Dim& cols, const Dim& rows) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<double> v(cols.size() * rows.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    double s = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) s += v[r * cols.size() + c] = u(rng);
    for (std::size_t r = 0; r < rows.size(); ++r) v[r * cols.size() + c] /= s;
  }
  return Matrix(cols, rows, std::move(v));
}

// Textbook triple loop.
std::vector<double> naive_matmul(const Matrix& a, const Matrix& b) {
  std::vector<double> out(a.num_rows() * b.num_cols(), 0.0);
  for (std::size_t r = 0; r < a.num_rows(); ++r)
    for (std::size_t c = 0; c < b.num_cols(); ++c)
      for (std::size_t k = 0; k < a.num_cols(); ++k) out[r * b.num_cols() + c] += a.at(r, k) * b.at(k, c);
  return out;
}

}  // namespace

TEST(Dim, EnumerationOrder) {
  const Dim s = Dim::sum(Dim::range(2), Dim::booleans());
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s.element(0), Value::left(i(0)));
  EXPECT_EQ(s.element(2), Value::right(Value::boolean(false)));
  const Dim p = Dim::product(Dim::range(2), Dim::range(3));
  EXPECT_EQ(p.element(1), Value::pair(i(0), i(1)));
  EXPECT_EQ(p.element(3), Value::pair(i(1), i(0)));
  EXPECT_EQ(p.index_of(Value::pair(i(1), i(2))), 5u);
  EXPECT_FALSE(Dim::range(2) == Dim::booleans());
  EXPECT_EQ(Dim::unit().size(), 1u);
}

TEST(Matrix, ConstructionValidates) {
  EXPECT_THROW(Matrix(Dim::range(2), Dim::range(2), {1, 0, 0}), DimensionError);
  EXPECT_THROW(Matrix(Dim::range(1), Dim::range(2), {1, -1}), DomainError);
}

TEST(Matrix, ComposeMatchesNaiveProduct) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Matrix b = random_matrix(rng, 3 + t % 4, 5);
    const Matrix a = random_matrix(rng, 5, 2 + t % 3);
    const Matrix c = compose(a, b);
    const auto ref = naive_matmul(a, b);
    for (std::size_t k = 0; k < ref.size(); ++k) EXPECT_NEAR(c.data()[k], ref[k], 1e-14);
  }
  EXPECT_THROW(compose(Matrix(Dim::range(3), Dim::range(2)), Matrix(Dim::range(2), Dim::range(2))), DimensionError);
}

TEST(Kernels, ParallelIsBitwiseSerial) {
  using namespace kernels;
  std::mt19937_64 rng(11);
  // Sizes on both sides of the parallel threshold.
  for (std::size_t n : {7u, 40u, 97u}) {
    const Matrix a = random_matrix(rng, n, n + 3);
    const Matrix b = random_matrix(rng, n + 1, n);
    const Shape sa{a.num_rows(), a.num_cols()}, sb{b.num_rows(), b.num_cols()};
    std::vector<double> s(sa.rows * sb.cols), p(s.size());
    serial::matmul(a.data(), sa, b.data(), sb, s);
    parallel::matmul(a.data(), sa, b.data(), sb, p);
    EXPECT_EQ(s, p);

    const Matrix m = random_matrix(rng, 9, n / 4 + 1), k = random_matrix(rng, 9, n / 3 + 2);
    const Shape sm{m.num_rows(), m.num_cols()}, sk{k.num_rows(), k.num_cols()};
    std::vector<double> ks(sm.rows * sk.rows * 81), kp(ks.size());
    serial::kron(m.data(), sm, k.data(), sk, ks);
    parallel::kron(m.data(), sm, k.data(), sk, kp);
    EXPECT_EQ(ks, kp);
    std::vector<double> hs(sm.rows * sk.rows * 9), hp(hs.size());
    serial::khatri(m.data(), sm, k.data(), sk, hs);
    parallel::khatri(m.data(), sm, k.data(), sk, hp);
    EXPECT_EQ(hs, hp);
    std::vector<double> ds(a.data().size()), dp(ds.size());
    serial::hadamard(a.data(), a.data(), ds);
    parallel::hadamard(a.data(), a.data(), dp);
    EXPECT_EQ(ds, dp);
  }
}

TEST(Matrix, KronAndKhatriByIndex) {
  std::mt19937_64 rng(3);
  const Matrix m = random_matrix(rng, 3, 2), n = random_matrix(rng, 3, 4);
  const Matrix k = kron(m, n);
  ASSERT_EQ(k.num_rows(), 8u);
  ASSERT_EQ(k.num_cols(), 9u);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 9; ++c) EXPECT_EQ(k.at(r, c), m.at(r / 4, c / 3) * n.at(r % 4, c % 3));
  const Matrix h = khatri(m, n);
  ASSERT_EQ(h.num_cols(), 3u);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(h.at(r, c), m.at(r / 4, c) * n.at(r % 4, c));
  EXPECT_THROW(khatri(m, random_matrix(rng, 2, 2)), DimensionError);
}

TEST(Matrix, JuncSplitOplusBlocks) {
  std::mt19937_64 rng(5);
  const Matrix m = random_matrix(rng, 2, 3), n = random_matrix(rng, 4, 3);
  const Matrix j = junc(m, n);
  EXPECT_EQ(j.cols(), Dim::sum(Dim::range(2), Dim::range(4)));
  EXPECT_EQ(j.at(1, 1), m.at(1, 1));
  EXPECT_EQ(j.at(2, 5), n.at(2, 3));
  const Matrix s = split(converse(m), converse(n));
  EXPECT_TRUE(bitwise_equal(s, converse(j)));
  const Matrix o = oplus(m, n);
  EXPECT_EQ(o.num_rows(), 6u);
  EXPECT_EQ(o.at(0, 3), 0.0);
  EXPECT_EQ(o.at(4, 3), n.at(1, 1));
}

TEST(Matrix, ProjectionsAndInjections) {
  const Dim b = Dim::range(2), c = Dim::booleans();
  const Matrix f = fst_matrix(b, c);
  EXPECT_TRUE(is_sharp(f));
  const Matrix pt = Matrix::point(Dim::product(b, c), Value::pair(i(1), Value::boolean(true)));
  EXPECT_TRUE(bitwise_equal(compose(f, pt), Matrix::point(b, i(1))));
  EXPECT_TRUE(bitwise_equal(compose(snd_matrix(b, c), pt), Matrix::point(c, Value::boolean(true))));
  const Matrix l = inject_left(b, c);
  EXPECT_EQ(l.at(Value::left(i(1)), i(1)), 1.0);
}

TEST(Matrix, ChoiceAndStochasticity) {
  std::mt19937_64 rng(9);
  const Dim a = Dim::range(3), b = Dim::range(4);
  const Matrix m = random_cs(rng, a, b), n = random_cs(rng, a, b);
  const Matrix c = mat_choice(Probability(0.3), m, n);
  EXPECT_TRUE(column_stochastic(c));
  EXPECT_LE(max_abs_diff(c, add(scale(0.3, m), scale(0.7, n))), 1e-15);
  EXPECT_TRUE(column_stochastic(compose(random_cs(rng, b, a), m)));
  EXPECT_TRUE(column_stochastic(khatri(m, n)));
  EXPECT_FALSE(is_sharp(m));
}

TEST(Matrix, NegationWithFaultCsv) {
  const Dim b = Dim::booleans();
  const Matrix f = Matrix::from_function(b, b, [](const Value&) { return Value::boolean(false); });
  const Matrix neg = Matrix::from_function(b, b, [](const Value& v) { return Value::boolean(!v.as_bool()); });
  std::ostringstream os;
  write_csv(os, mat_choice(Probability(0.05), f, neg));
  EXPECT_EQ(os.str(), "0.05,1\n0.95,0\n");
}

TEST(Matrix, NumberFormatRoundTrips) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.6561), "0.6561");
  const double x = 0.1 * 0.1;
  EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Matrix, ProbFnRoundTrip) {
  const Dim d = Dim::range(3);
  const ProbFn f([](const Value& v) { return Dist{{v, 0.5}, {Value::integer((v.as_int() + 1) % 3), 0.5}}; });
  const Matrix m = from_probfn(f, d, d);
  EXPECT_TRUE(column_stochastic(m));
  const ProbFn g = to_probfn(m);
  for (const Value& v : d.elements()) EXPECT_EQ(tv_distance(f(v), g(v)), 0.0);
  EXPECT_THROW(g(i(9)), DomainError);
}

TEST(Matrix, TruncationNamesValue) {
  const ProbFn f = ProbFn::sharp([](const Value& v) { return Value::integer(v.as_int() * 2); });
  try {
    from_probfn(f, Dim::range(3), Dim::range(4));
    FAIL() << "expected TruncationError";
  } catch (const TruncationError& e) {
    EXPECT_NE(std::string(e.what()).find("value 4"), std::string::npos) << e.what();
  }
}

TEST(Matrix, RelabelKeepsEntries) {
  const Matrix m(Dim::range(2), Dim::range(2), {0.5, 1, 0.5, 0});
  const Matrix r = relabel(m, Dim::booleans(), Dim::booleans());
  EXPECT_EQ(r.at(1, 0), 0.5);
  EXPECT_THROW(relabel(m, Dim::range(3), Dim::range(2)), DimensionError);
}
