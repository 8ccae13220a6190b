#include "faultcalc/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "faultcalc/cases.hpp"
#include "faultcalc/golden.hpp"
#include "faultcalc/recursion.hpp"

namespace faultcalc::report {

namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::int64_t fib(std::int64_t n) {
  std::int64_t a = 0, b = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t t = a + b;
    a = b;
    b = t;
  }
  return a;
}

double binomial(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

class Writer {
 public:
  std::ostringstream out;
  bool ok = true;

  void heading(const std::string& title) { out << "\n## " << title << "\n\n"; }

  void table(const std::string& id) {
    const auto& t = golden::table(id);
    check_lines(id + ": " + t.source, t.lines, cases::run_case(t.program, t.params));
  }

  void check_lines(const std::string& title, const std::vector<golden::Line>& lines, const Dist& computed) {
    const auto check = golden::compare(lines, computed);
    ok = ok && check.ok;
    out << "### " << title << " [" << verdict(check.ok) << "]\n\n";
    out << "| value | printed % | computed % | |\n|---|---:|---:|---|\n";
    for (const auto& l : check.lines) {
      out << "| `" << render(l.value) << "` | " << (std::isnan(l.expected) ? std::string("-") : fmt("%.1f", l.expected))
          << " | " << fmt("%.3f", l.computed) << " | " << (l.ok ? "ok" : "MISMATCH") << " |\n";
    }
    out << "\n";
  }

  void claim(const std::string& text, bool holds) {
    ok = ok && holds;
    out << "- " << text << " [" << verdict(holds) << "]\n";
  }
};

void fibonacci(Writer& w) {
  w.heading("Fibonacci, recursive and linear");
  for (const char* id : {"mfib-4", "mfib-5", "mfibl-5", "mfib-6", "mfibl-6"}) w.table(id);
  const Probability p(0.1);
  const double tv = tv_distance(cases::mfib(p, 5), cases::mfibl(p, 5));
  w.claim("mfib and mfibl differ at n = 5: TV = " + fmt("%.4f", tv) + " (needs >= 0.05)", tv >= 0.05);
  w.claim("mfib and mfibl agree at n = 4: TV = " + fmt("%.1e", tv_distance(cases::mfib(p, 4), cases::mfibl(p, 4))),
          tv_distance(cases::mfib(p, 4), cases::mfibl(p, 4)) <= 1e-12);
}

void squares(Writer& w) {
  w.heading("Squares, recursive and linear");
  for (const char* n : {"0", "1", "2", "3", "6"}) {
    w.table(std::string("msq-") + n);
    w.table(std::string("msql-") + n);
  }
  double worst = 0.0;
  for (std::int64_t n = 0; n <= 12; ++n) {
    worst = std::max(worst, tv_distance(cases::msq(Probability(0.1), n), cases::msql(Probability(0.1), n)));
  }
  w.claim("msq = msql for n = 0..12 at p = 0.1: max TV = " + fmt("%.1e", worst), worst <= 1e-12);
}

void doubling(Writer& w) {
  w.heading("Doubling loop and its matrix fixpoint");
  w.table("ftwice-4");
  const Matrix k = ftwice_fixpoint(0.1, 4, 8);
  const auto& cells = golden::ftwice_fixpoint_cells();
  bool printed = true;
  double analytic = 0.0;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      printed = printed && golden::matches_printed(cells[r][c], k.at(r, c));
      const double exact =
          (r % 2 == 0 && r / 2 <= c) ? binomial(c, r / 2) * std::pow(0.9, r / 2) * std::pow(0.1, c - r / 2) : 0.0;
      analytic = std::max(analytic, std::abs(exact - k.at(r, c)));
    }
  }
  w.out << "Fixpoint, p = 0.1, inputs 0..4 (columns), outputs 0..8 (rows):\n\n```\n";
  write_table(w.out, k, 4, true);
  w.out << "```\n\n";
  w.claim("every printed cell matches at its printed precision", printed);
  w.claim("max deviation from C(j,k) 0.9^k 0.1^(j-k) = " + fmt("%.1e", analytic) + " (needs <= 1e-12)",
          analytic <= 1e-12);
}

void weak_product(Writer& w) {
  w.heading("Weak product counterexample");
  const Matrix k = laws::weak_product_witness();
  const Matrix r = laws::reconstruct(k);
  const auto& printed = golden::weak_product_reconstruction();
  double vs_printed = 0.0;
  for (std::size_t i = 0; i < printed.size(); ++i) {
    for (std::size_t j = 0; j < printed[i].size(); ++j) vs_printed = std::max(vs_printed, std::abs(r.at(i, j) - printed[i][j]));
  }
  w.out << "k and its reconstruction (fst k) khatri (snd k):\n\n```\n";
  write_table(w.out, k, 2, true);
  w.out << "\n";
  write_table(w.out, r, 2, true);
  w.out << "```\n\n";
  const double dev = max_abs_diff(r, k);
  w.claim("reconstruction differs from k by " + fmt("%.2f", dev) + " (needs >= 0.2)", dev >= 0.2);
  w.claim("reconstruction matches the printed matrix within 1e-12 (max " + fmt("%.1e", vs_printed) + ")",
          vs_printed <= 1e-12);
  const Dim b = Dim::range(4);
  const Matrix f2 = Matrix::column(b, Dist{{Value::integer(2), 0.7}, {Value::integer(1), 0.3}});
  const Matrix g2 = Matrix::column(b, Dist{{Value::integer(1), 0.4}, {Value::integer(2), 0.2}, {Value::integer(3), 0.4}});
  w.check_lines("pairing of f and g at input 2", golden::pairing_at_two(), to_probfn(khatri(f2, g2))(Value::unit()));
}

void odd_projection(Writer& w) {
  w.heading("Sharp odd projection and faulty odd numbers");
  w.table("msqlo-5");
  w.table("msql-5");
  w.table("msq'-3");
  w.table("msql'-3");
  const Probability p(0.1);
  const double tv = tv_distance(cases::msq_prime(p, p, 3), cases::msql_prime(p, p, 3));
  w.claim("expected inequality: msq' and msql' differ at n = 3, TV = " + fmt("%.4f", tv) + " (needs >= 0.05)",
          tv >= 0.05);
  std::vector<Value> inputs;
  for (int n = 0; n <= 6; ++n) inputs.push_back(Value::integer(n));
  const auto [sh, sk] = cases::sq_algebras(p);
  const auto sq = tupled_from_mutual(sh, sk, inputs).report;
  const auto [fh, fk] = cases::fib_algebras(p);
  const auto fb = tupled_from_mutual(fh, fk, inputs).report;
  w.claim("square/odd tupling, n = 0..6: " + sq.verdict() + " (TV " + fmt("%.1e", sq.max_tv) + ")",
          sq.holds() && sq.max_tv <= 1e-9);
  w.claim("Fibonacci tupling, n = 0..6: " + fb.verdict(), !fb.holds());
}

void folds(Writer& w) {
  w.heading("List folds and fold fusion");
  for (const char* id : {"fcat-abc", "fcount-abc", "pipeline-abc", "pipeline-consolidated-abc"}) w.table(id);
}

void banana(Writer& w) {
  w.heading("Sum and count, paired and banana-split");
  w.table("favg-pair");
  w.table("favg-split");
}

void risk(Writer& w) {
  w.heading("Risk preorder");
  const auto r = fib_risk(0.1, 6);
  w.out << "| n | mfib correct % | mfibl correct % |\n|---:|---:|---:|\n";
  bool dominated = true;
  for (std::size_t n = 1; n < r.g_correct.size(); ++n) {
    w.out << "| " << n << " | " << fmt("%.1f", r.g_correct[n] * 100) << " | " << fmt("%.1f", r.h_correct[n] * 100)
          << " |\n";
    dominated = dominated && r.column_holds[n];
  }
  w.out << "\n";
  w.claim("mfibl dominates mfib against sharp fib on n = 1..6", dominated);
}

void law_summary(Writer& w, const laws::TrialConfig& cfg) {
  w.heading("Law suite");
  w.out << "seed " << cfg.seed << ", " << cfg.trials << " trials, max dim " << cfg.max_dim << ", tol "
        << fmt("%g", cfg.tol) << "\n\n```\n";
  bool all = true;
  for (const auto& r : laws::check_all(cfg)) {
    w.out << laws::serialize(r) << "\n";
    all = all && r.ok();
  }
  w.out << "```\n\n";
  w.claim("every law passes or fails as expected", all);
}

}  // namespace

Matrix ftwice_fixpoint(double p, std::size_t n_max, std::size_t m_max) {
  const Probability prob(p);
  const Dim states = Dim::range(m_max + 1);
  // The monadic loop names any value escaping the output range.
  from_probfn(ProbFn([prob](const Value& n) { return cases::ftwice(prob, n.as_int()); }), Dim::range(n_max + 1),
              states);
  return matrix_cata_fixpoint(truncated_body(cases::fadd(prob, 2), states),
                              Matrix::point(states, Value::integer(0)), n_max, states);
}

laws::RiskReport fib_risk(double p, std::size_t n_max) {
  const Probability prob(p);
  const Dim inputs = Dim::range(n_max + 1);
  const Dim outputs = Dim::range(static_cast<std::size_t>(fib(static_cast<std::int64_t>(n_max))) + 1);
  const Matrix g = from_probfn(ProbFn([prob](const Value& n) { return cases::mfib(prob, n.as_int()); }), inputs, outputs);
  const Matrix h = from_probfn(ProbFn([prob](const Value& n) { return cases::mfibl(prob, n.as_int()); }), inputs, outputs);
  const Matrix f = Matrix::from_function(inputs, outputs, [](const Value& n) { return Value::integer(fib(n.as_int())); });
  return laws::risk_preorder(g, h, f);
}

Report build(const laws::TrialConfig& cfg) {
  Writer w;
  fibonacci(w);
  squares(w);
  doubling(w);
  weak_product(w);
  odd_projection(w);
  folds(w);
  banana(w);
  risk(w);
  law_summary(w, cfg);

  Report r;
  r.ok = w.ok;
  r.markdown = "# Fault-injection reproduction report\n\nEach printed line is compared with the exact computed "
               "distribution at +/-" +
               fmt("%.2f", golden::kPercentTolerance) + " percentage points.\n\nOverall: " + verdict(w.ok) + "\n" +
               w.out.str();
  return r;
}

}  // namespace faultcalc::report
