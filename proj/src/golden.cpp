#include "faultcalc/golden.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "faultcalc/errors.hpp"

namespace faultcalc::golden {

namespace {

Value i(std::int64_t n) { return Value::integer(n); }
Value s(const char* t) { return Value::text(t); }
Value ii(std::int64_t a, std::int64_t b) { return Value::pair(i(a), i(b)); }

cases::CaseParams nat(double p, std::int64_t n, double q = 0.1) { return {p, q, i(n)}; }

}  // namespace

const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
      // "Main> mfib 4"
      {"mfib-4", "mfib", "recursive Fibonacci session, n = 4", nat(0.1, 4), {{i(3), 81.0}, {i(2), 18.0}, {i(1), 1.0}}},
      // Two-column Fibonacci table, recursive column.
      {"mfib-5", "mfib", "Fibonacci comparison table, recursive column, n = 5", nat(0.1, 5),
       {{i(5), 65.6}, {i(4), 21.9}, {i(3), 10.5}, {i(2), 1.9}, {i(1), 0.1}}},
      {"mfib-6", "mfib", "Fibonacci comparison table, recursive column, n = 6", nat(0.1, 6),
       {{i(8), 47.8}, {i(7), 26.6}, {i(6), 11.8}, {i(5), 9.8}, {i(4), 2.7}, {i(3), 1.1}, {i(2), 0.2}, {i(1), 0.0}}},
      // Same table, linear column.
      {"mfibl-5", "mfibl", "Fibonacci comparison table, linear column, n = 5", nat(0.1, 5),
       {{i(5), 72.9}, {i(3), 16.2}, {i(4), 8.1}, {i(2), 2.7}, {i(1), 0.1}}},
      {"mfibl-6", "mfibl", "Fibonacci comparison table, linear column, n = 6", nat(0.1, 6),
       {{i(8), 65.6}, {i(6), 14.6}, {i(5), 14.6}, {i(3), 2.4}, {i(4), 2.4}, {i(2), 0.4}, {i(1), 0.0}}},
      // Square table; both columns print the same lines.
      {"msq-0", "msq", "square table, recursive column, n = 0", nat(0.1, 0), {{i(0), 100.0}}},
      {"msql-0", "msql", "square table, linear column, n = 0", nat(0.1, 0), {{i(0), 100.0}}},
      {"msq-1", "msq", "square table, recursive column, n = 1", nat(0.1, 1), {{i(1), 100.0}}},
      {"msql-1", "msql", "square table, linear column, n = 1", nat(0.1, 1), {{i(1), 100.0}}},
      {"msq-2", "msq", "square table, recursive column, n = 2", nat(0.1, 2), {{i(4), 90.0}, {i(3), 10.0}}},
      {"msql-2", "msql", "square table, linear column, n = 2", nat(0.1, 2), {{i(4), 90.0}, {i(3), 10.0}}},
      {"msq-3", "msq", "square table, recursive column, n = 3", nat(0.1, 3), {{i(9), 81.0}, {i(5), 10.0}, {i(8), 9.0}}},
      {"msql-3", "msql", "square table, linear column, n = 3", nat(0.1, 3), {{i(9), 81.0}, {i(5), 10.0}, {i(8), 9.0}}},
      {"msq-6", "msq", "square table, recursive column, n = 6", nat(0.1, 6),
       {{i(36), 59.0}, {i(11), 10.0}, {i(20), 9.0}, {i(27), 8.1}, {i(32), 7.3}, {i(35), 6.6}}},
      {"msql-6", "msql", "square table, linear column, n = 6", nat(0.1, 6),
       {{i(36), 59.0}, {i(11), 10.0}, {i(20), 9.0}, {i(27), 8.1}, {i(32), 7.3}, {i(35), 6.6}}},
      // Doubling loop distribution at n = 4.
      {"ftwice-4", "ftwice", "doubling loop distribution, n = 4", nat(0.1, 4),
       {{i(8), 65.6}, {i(6), 29.2}, {i(4), 4.9}, {i(2), 0.4}, {i(0), 0.0}}},
      // "Main> msqlo 5" and "Main> msq1 5"
      {"msqlo-5", "msqlo", "odd projection session, n = 5", nat(0.1, 5), {{i(11), 100.0}}},
      {"msql-5", "msql", "square projection session, n = 5", nat(0.1, 5),
       {{i(25), 65.6}, {i(9), 10.0}, {i(16), 9.0}, {i(21), 8.1}, {i(24), 7.3}}},
      // Faulty-odd table.
      {"msq'-3", "msq'", "faulty odd table, recursive column, n = 3", nat(0.1, 3, 0.1),
       {{i(9), 59.0}, {i(7), 19.7}, {i(5), 10.3}, {i(8), 6.6}, {i(6), 2.2}, {i(3), 1.9}, {i(4), 0.2}, {i(1), 0.1},
        {i(2), 0.0}}},
      {"msql'-3", "msql'", "faulty odd table, linear column, n = 3", nat(0.1, 3, 0.1),
       {{i(9), 65.6}, {i(5), 15.4}, {i(7), 7.3}, {i(8), 7.3}, {i(3), 2.6}, {i(4), 0.8}, {i(6), 0.8}, {i(1), 0.1},
        {i(2), 0.1}}},
      // List folds on "abc". The empty string is printed as a blank.
      {"fcat-abc", "fcat", "lossy copy of \"abc\", p = 0.1", {0.1, 0.1, s("abc")},
       {{s("abc"), 72.9}, {s("ab"), 8.1}, {s("ac"), 8.1}, {s("bc"), 8.1}, {s("a"), 0.9}, {s("b"), 0.9}, {s("c"), 0.9},
        {s(""), 0.1}}},
      {"fcount-abc", "fcount", "skipping count of \"abc\", q = 0.15", {0.1, 0.15, s("abc")},
       {{i(3), 61.4}, {i(2), 32.5}, {i(1), 5.7}, {i(0), 0.3}}},
      {"pipeline-abc", "pipeline_count_cat", "count after copy on \"abc\", p = 0.1, q = 0.15", {0.1, 0.15, s("abc")},
       {{i(3), 44.8}, {i(2), 41.3}, {i(1), 12.7}, {i(0), 1.3}}},
      {"pipeline-consolidated-abc", "pipeline_consolidated", "single consolidated fold on \"abc\", p = 0.1, q = 0.15",
       {0.1, 0.15, s("abc")}, {{i(3), 44.8}, {i(2), 41.3}, {i(1), 12.7}, {i(0), 1.3}}},
      // "Main> favg 0.15 0.1 [2,3]"
      {"favg-pair", "favg_pair", "sum and count pair on [2,3], p = 0.15, q = 0.1",
       {0.15, 0.1, Value::list({i(2), i(3)})},
       {{ii(5, 2), 58.5}, {ii(5, 1), 13.0}, {ii(2, 2), 10.3}, {ii(3, 2), 10.3}, {ii(2, 1), 2.3}, {ii(3, 1), 2.3},
        {ii(0, 2), 1.8}, {ii(5, 0), 0.7}, {ii(0, 1), 0.4}, {ii(2, 0), 0.1}, {ii(3, 0), 0.1}, {ii(0, 0), 0.0}}},
      {"favg-split", "favg_split", "single fold on (total, count) pairs on [2,3], p = 0.15, q = 0.1",
       {0.15, 0.1, Value::list({i(2), i(3)})},
       {{ii(5, 2), 58.5}, {ii(5, 1), 13.0}, {ii(2, 2), 10.3}, {ii(3, 2), 10.3}, {ii(2, 1), 2.3}, {ii(3, 1), 2.3},
        {ii(0, 2), 1.8}, {ii(5, 0), 0.7}, {ii(0, 1), 0.4}, {ii(2, 0), 0.1}, {ii(3, 0), 0.1}, {ii(0, 0), 0.0}}},
  };
  return t;
}

const Table& table(const std::string& id) {
  for (const auto& t : tables()) {
    if (t.id == id) return t;
  }
  throw DomainError("no golden table " + id);
}

const std::vector<std::vector<std::string>>& ftwice_fixpoint_cells() {
  static const std::vector<std::vector<std::string>> cells = {
      {"1", "0.1", "0.01", "0.001", "0.0001"},  //
      {"0", "0", "0", "0", "0"},                //
      {"0", "0.9", "0.18", "0.027", "0.0036"},  //
      {"0", "0", "0", "0", "0"},                //
      {"0", "0", "0.81", "0.243", "0.0486"},    //
      {"0", "0", "0", "0", "0"},                //
      {"0", "0", "0", "0.729", "0.2916"},       //
      {"0", "0", "0", "0", "0"},                //
      {"0", "0", "0", "0", "0.6561"},
  };
  return cells;
}

const std::vector<std::vector<double>>& weak_product_reconstruction() {
  static const std::vector<std::vector<double>> m = {
      {0.24, 0.4, 0.2}, {0.08, 0.0, 0.17}, {0.08, 0.1, 0.13},
      {0.36, 0.4, 0.2}, {0.12, 0.0, 0.17}, {0.12, 0.1, 0.13},
  };
  return m;
}

const std::vector<Line>& pairing_at_two() {
  static const std::vector<Line> lines = {{ii(2, 1), 28.0}, {ii(2, 3), 28.0}, {ii(2, 2), 14.0},
                                          {ii(1, 1), 12.0}, {ii(1, 3), 12.0}, {ii(1, 2), 6.0}};
  return lines;
}

TableCheck compare(const std::vector<Line>& expected, const Dist& computed, double tol) {
  TableCheck out;
  std::map<Value, bool> printed;
  for (const auto& l : expected) {
    const double got = computed.mass(l.value) * 100.0;
    const bool ok = std::abs(got - l.percent) <= tol + 1e-9;
    out.lines.push_back({l.value, l.percent, got, ok});
    out.ok = out.ok && ok;
    printed[l.value] = true;
  }
  for (const auto& [v, m] : computed.by_mass()) {
    if (printed.count(v)) continue;
    const bool ok = m * 100.0 <= tol + 1e-9;
    out.lines.push_back({v, std::numeric_limits<double>::quiet_NaN(), m * 100.0, ok});
    out.ok = out.ok && ok;
  }
  return out;
}

bool matches_printed(const std::string& cell, double computed) {
  const auto dot = cell.find('.');
  const double printed = std::stod(cell);
  // Integer cells are exact values.
  if (dot == std::string::npos) return std::abs(computed - printed) <= 1e-12;
  const int decimals = static_cast<int>(cell.size() - dot - 1);
  return std::abs(computed - printed) <= 0.5 * std::pow(10.0, -decimals) + 1e-15;
}

}  // namespace faultcalc::golden
