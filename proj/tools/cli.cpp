#include "faultcalc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "faultcalc/cases.hpp"
#include "faultcalc/errors.hpp"
#include "faultcalc/laws.hpp"
#include "faultcalc/report.hpp"

namespace faultcalc {

namespace {

// Thrown for flag combinations CLI11 cannot express; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Value parse_int_list(const std::string& s) {
  std::vector<Value> items;
  if (s.empty()) return Value::list({});
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw UsageError("--input: '" + tok + "' is not an integer");
    }
    if (used != tok.size()) throw UsageError("--input: '" + tok + "' is not an integer");
    items.push_back(Value::integer(v));
  }
  return Value::list(std::move(items));
}

struct CasesArgs {
  std::string name;
  double p = 0.1, q = 0.1;
  std::optional<std::int64_t> n;
  std::optional<std::string> input;
};

int cmd_cases(const CasesArgs& a, std::ostream& out) {
  const cases::CaseInfo* info = cases::find_case(a.name);
  cases::CaseParams params{a.p, a.q, Value()};
  if (info->input == cases::InputKind::Natural) {
    if (a.n) {
      params.input = Value::integer(*a.n);
    } else if (a.input) {
      params.input = parse_int_list(*a.input);
      if (params.input.items().size() != 1) throw UsageError("--input: expected one natural");
      params.input = params.input.items()[0];
    } else {
      throw UsageError(a.name + " needs --n");
    }
  } else {
    if (!a.input) throw UsageError(a.name + " needs --input");
    params.input = info->input == cases::InputKind::Text ? Value::text(*a.input) : parse_int_list(*a.input);
  }
  out << render(cases::run_case(a.name, params));
  return 0;
}

struct MatrixArgs {
  std::string name;
  double p = 0.1, q = 0.1;
  std::optional<std::size_t> n, m;
  std::string format = "csv";
  bool header = false;
};

Matrix build_matrix(const MatrixArgs& a) {
  if (a.name == "fneg") {
    const Dim b = Dim::booleans();
    const Matrix always_false = Matrix::from_function(b, b, [](const Value&) { return Value::boolean(false); });
    const Matrix negate = Matrix::from_function(b, b, [](const Value& v) { return Value::boolean(!v.as_bool()); });
    return mat_choice(Probability(a.p), always_false, negate);
  }
  if (!a.n || !a.m) throw UsageError(a.name + " needs --n and --m");
  if (a.name == "ftwice_fixpoint") return report::ftwice_fixpoint(a.p, *a.n, *a.m);
  const cases::CaseInfo* info = cases::find_case(a.name);
  if (info == nullptr || info->input != cases::InputKind::Natural) {
    throw UsageError("matrix: " + a.name + " is not a case over naturals");
  }
  const std::string name = info->name;
  const double p = a.p, q = a.q;
  const ProbFn f([name, p, q](const Value& n) { return cases::run_case(name, {p, q, n}); });
  return from_probfn(f, Dim::range(*a.n + 1), Dim::range(*a.m + 1));
}

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  const Matrix m = build_matrix(a);
  if (a.format == "csv") {
    write_csv(out, m, a.header);
  } else {
    write_table(out, m, 4, a.header);
  }
  return 0;
}

struct LawArgs {
  std::string law;
  laws::TrialConfig cfg;
  bool verbose = false;
};

int cmd_laws(const LawArgs& a, std::ostream& out) {
  a.cfg.validate();
  std::vector<laws::LawReport> reports;
  if (a.law.empty()) {
    reports = laws::check_all(a.cfg);
  } else {
    reports.push_back(laws::check_law(a.law, a.cfg));
  }
  laws::write_reports(out, reports, a.verbose);
  for (const auto& r : reports) {
    if (!r.ok()) return 1;
  }
  return 0;
}

int cmd_report(const std::string& path, const laws::TrialConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const report::Report r = report::build(cfg);
  std::ofstream file(path, std::ios::binary);
  file << r.markdown;
  file.close();
  if (!file) {
    err << "error: cannot write " << path << "\n";
    return 1;
  }
  out << "report " << (r.ok ? "PASS" : "FAIL") << ": " << path << "\n";
  return r.ok ? 0 : 1;
}

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const auto& c : cases::registry()) names.push_back(c.name);
  names.push_back("msq_prime");
  names.push_back("msql_prime");
  return names;
}

void add_law_flags(CLI::App* cmd, laws::TrialConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "trials per law")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--max-dim", cfg.max_dim, "largest random dimension")
      ->capture_default_str()
      ->check(CLI::Range(2, 12));
  cmd->add_option("--tol", cfg.tol, "deviation tolerance")->capture_default_str()->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Probabilistic program calculus: case studies, matrices, laws and the reference report", "faultcalc"};
  app.require_subcommand(1);

  CasesArgs ca;
  auto* cases_cmd = app.add_subcommand("cases", "print the output distribution of a case study");
  cases_cmd->add_option("name", ca.name, "case name")->required()->check(CLI::IsMember(case_names()));
  cases_cmd->add_option("--p", ca.p, "fault probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cases_cmd->add_option("--q", ca.q, "second fault probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cases_cmd->add_option("--n", ca.n, "natural input")->check(CLI::NonNegativeNumber);
  cases_cmd->add_option("--input", ca.input, "string, or comma-separated integers");

  MatrixArgs ma;
  auto* matrix_cmd = app.add_subcommand("matrix", "print a column-stochastic matrix");
  auto matrix_names = case_names();
  matrix_names.insert(matrix_names.begin(), {"ftwice_fixpoint", "fneg"});
  matrix_cmd->add_option("name", ma.name, "matrix name")->required()->check(CLI::IsMember(matrix_names));
  matrix_cmd->add_option("--p", ma.p, "fault probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  matrix_cmd->add_option("--q", ma.q, "second fault probability")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  matrix_cmd->add_option("--n", ma.n, "largest input");
  matrix_cmd->add_option("--m", ma.m, "largest output");
  matrix_cmd->add_option("--format", ma.format, "csv or table")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "table"}));
  matrix_cmd->add_flag("--header", ma.header, "label rows and columns");

  LawArgs la;
  auto* laws_cmd = app.add_subcommand("laws", "run the randomized law suite");
  laws_cmd->add_option("--law", la.law, "run a single law")->check(CLI::IsMember(laws::law_names()));
  add_law_flags(laws_cmd, la.cfg);
  laws_cmd->add_flag("--verbose", la.verbose, "print witnesses and notes");

  std::string out_path;
  laws::TrialConfig rcfg;
  auto* report_cmd = app.add_subcommand("report", "write the markdown reproduction report");
  report_cmd->add_option("--out", out_path, "output file")->required();
  add_law_flags(report_cmd, rcfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*cases_cmd) return cmd_cases(ca, out);
    if (*matrix_cmd) return cmd_matrix(ma, out);
    if (*laws_cmd) return cmd_laws(la, out);
    return cmd_report(out_path, rcfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace faultcalc
