// Acceptance criteria 1-7, one PASS/FAIL line each. Exit status 1 if any fails.
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "faultcalc/cases.hpp"
#include "faultcalc/golden.hpp"
#include "faultcalc/laws.hpp"
#include "faultcalc/report.hpp"

using namespace faultcalc;

namespace {

constexpr double kTheoremTv = 1e-12;
constexpr double kFixpointTol = 1e-12;
constexpr double kWeakProductGap = 0.2;
constexpr double kDivergenceTv = 0.05;

int failures = 0;

void line(int n, const std::string& what, bool ok, const std::string& detail) {
  std::printf("criterion %d %-28s %s  %s\n", n, what.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

double binomial(int n, int k) {
  double c = 1;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

void golden_tables() {
  std::size_t passed = 0, lines = 0;
  for (const auto& t : golden::tables()) {
    const auto c = golden::compare(t.lines, cases::run_case(t.program, t.params));
    passed += c.ok;
    lines += t.lines.size();
  }
  const std::size_t total = golden::tables().size();
  line(1, "golden tables", passed == total,
       std::to_string(passed) + "/" + std::to_string(total) + " tables, " + std::to_string(lines) +
           " printed lines at +/-0.05 points");
}

void fixpoint_matrix() {
  // Round-trip through the CSV the CLI prints.
  std::ostringstream csv;
  write_csv(csv, report::ftwice_fixpoint(0.1, 4, 8));
  std::istringstream in(csv.str());
  std::vector<std::vector<double>> cells;
  for (std::string row; std::getline(in, row);) {
    std::istringstream rs(row);
    cells.emplace_back();
    for (std::string cell; std::getline(rs, cell, ',');) cells.back().push_back(std::stod(cell));
  }
  const auto& printed = golden::ftwice_fixpoint_cells();
  bool shape = cells.size() == printed.size();
  bool at_precision = shape;
  double dev = 0.0;
  for (std::size_t r = 0; shape && r < cells.size(); ++r) {
    shape = cells[r].size() == printed[r].size();
    for (std::size_t j = 0; shape && j < cells[r].size(); ++j) {
      at_precision = at_precision && golden::matches_printed(printed[r][j], cells[r][j]);
      const int k = static_cast<int>(r) / 2, jj = static_cast<int>(j);
      const double exact = (r % 2 == 0 && k <= jj) ? binomial(jj, k) * std::pow(0.9, k) * std::pow(0.1, jj - k) : 0.0;
      dev = std::max(dev, std::abs(cells[r][j] - exact));
    }
  }
  line(2, "fixpoint matrix", shape && at_precision && dev <= kFixpointTol,
       "9x5, printed cells " + std::string(at_precision ? "match" : "differ") + ", binomial dev " + fmt("%.1e", dev));
}

void weak_product() {
  const Matrix k = laws::weak_product_witness();
  const Matrix r = laws::reconstruct(k);
  const double gap = max_abs_diff(r, k);
  const double want[6] = {0.24, 0.08, 0.08, 0.36, 0.12, 0.12};
  double col = 0.0;
  for (std::size_t i = 0; i < 6; ++i) col = std::max(col, std::abs(r.at(i, 0) - want[i]));
  line(3, "weak-product counterexample", gap >= kWeakProductGap && col <= 1e-12,
       "max entry gap " + fmt("%.3f", gap) + ", first column dev " + fmt("%.1e", col));
}

void law_suite() {
  laws::TrialConfig cfg;  // seed 1, 1000 trials, max dim 6, tol 1e-9
  std::size_t ok = 0, expected = 0;
  const auto reports = laws::check_all(cfg);
  std::string failed;
  for (const auto& r : reports) {
    ok += r.ok();
    expected += r.status == laws::Status::ExpectedFail;
    if (!r.ok()) failed += " " + r.law;
  }
  line(4, "law suite", ok == reports.size(),
       std::to_string(ok) + "/" + std::to_string(reports.size()) + " laws (" + std::to_string(expected) +
           " expected failures)" + (failed.empty() ? "" : ", failed:" + failed));
}

void theorem_instances() {
  double fusion = 0.0;
  const double grid[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::string> strings{""};
  for (std::size_t i = 0; i < strings.size(); ++i) {
    if (strings[i].size() == 6) continue;
    strings.push_back(strings[i] + "a");
    strings.push_back(strings[i] + "b");
  }
  for (double p : grid) {
    for (double q : grid) {
      for (const auto& s : strings) {
        const Value v = Value::text(s);
        fusion = std::max(fusion, tv_distance(cases::pipeline_count_cat(Probability(p), Probability(q), v),
                                              cases::pipeline_consolidated(Probability(p), Probability(q), v)));
      }
    }
  }
  double split = 0.0;
  std::vector<std::vector<Value>> lists{{}};
  for (std::size_t i = 0; i < lists.size(); ++i) {
    if (lists[i].size() == 4) continue;
    for (int x = 1; x <= 3; ++x) {
      auto l = lists[i];
      l.push_back(Value::integer(x));
      lists.push_back(std::move(l));
    }
  }
  for (const auto& l : lists) {
    const Value v = Value::list(l);
    split = std::max(split, tv_distance(cases::favg_pair(Probability(0.15), Probability(0.1), v),
                                        cases::favg_split(Probability(0.15), Probability(0.1), v)));
  }
  double squares = 0.0;
  for (int n = 0; n <= 12; ++n) {
    squares = std::max(squares, tv_distance(cases::msq(Probability(0.1), n), cases::msql(Probability(0.1), n)));
  }
  const double fib = tv_distance(cases::mfib(Probability(0.1), 5), cases::mfibl(Probability(0.1), 5));
  line(5, "theorem instances",
       fusion <= kTheoremTv && split <= kTheoremTv && squares <= kTheoremTv && fib >= kDivergenceTv,
       "fusion " + fmt("%.1e", fusion) + " (" + std::to_string(strings.size() * 25) + " runs), banana-split " +
           fmt("%.1e", split) + " (" + std::to_string(lists.size()) + " lists), squares " + fmt("%.1e", squares) +
           ", mfib/mfibl n=5 TV " + fmt("%.4f", fib));
}

void risk_preorder() {
  const auto fib = report::fib_risk(0.1, 6);
  bool dominated = true;
  for (std::size_t n = 1; n <= 6; ++n) dominated = dominated && fib.column_holds[n];
  std::size_t below_top = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    auto rng = laws::trial_rng(1, "acceptance-risk", t);
    const Dim a = laws::random_dim(rng, 6, 2, 12), b = laws::random_dim(rng, 6, 2, 12);
    const Matrix f = laws::random_sharp(rng, a, b);
    below_top += laws::risk_preorder(laws::random_cs_matrix(rng, a, b), f, f).holds;
  }
  line(6, "risk preorder", dominated && below_top == 100,
       std::string("mfibl over mfib on 1..6 ") + (dominated ? "holds" : "fails") + ", g <=_f f in " +
           std::to_string(below_top) + "/100");
}

void side_conditions() {
  const Probability p(0.1);
  const Dist odd = cases::msqlo(p, 5);
  const bool dirac11 = odd.is_dirac() && odd.dirac_value() == Value::integer(11);
  std::vector<Value> inputs;
  for (int n = 0; n <= 6; ++n) inputs.push_back(Value::integer(n));
  const auto [sh, sk] = cases::sq_algebras(p);
  const auto [fh, fk] = cases::fib_algebras(p);
  const bool sq = tupled_from_mutual(sh, sk, inputs).report.holds();
  const bool fib = tupled_from_mutual(fh, fk, inputs).report.holds();
  line(7, "sharpness side conditions", dirac11 && sq && !fib,
       std::string("msqlo 5 ") + (dirac11 ? "Dirac at 11" : "not Dirac at 11") + ", sq/odd " +
           (sq ? "holds" : "fails") + ", fib " + (fib ? "holds" : "fails"));
}

}  // namespace

int main() {
  golden_tables();
  fixpoint_matrix();
  weak_product();
  law_suite();
  theorem_instances();
  risk_preorder();
  side_conditions();
  std::printf("%s: %d of 7 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
