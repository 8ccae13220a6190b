#pragma once

#include <string>
#include <vector>

#include "faultcalc/cases.hpp"
#include "faultcalc/matrix.hpp"

// Published reference tables, frozen as printed (percentages to one decimal).
namespace faultcalc::golden {

/// Tolerance per printed line, in percentage points.
inline constexpr double kPercentTolerance = 0.05;

struct Line {
  Value value;
  double percent;
};

struct Table {
  std::string id;       // stable key, e.g. "mfib-5"
  std::string program;  // registry case
  std::string source;   // listing the numbers come from
  cases::CaseParams params;
  std::vector<Line> lines;
};

const std::vector<Table>& tables();
const Table& table(const std::string& id);

/// Printed cells of the doubling-loop fixpoint (outputs 0..8 × inputs 0..4,
/// p = 0.1), kept as text so the printed precision is known.
const std::vector<std::vector<std::string>>& ftwice_fixpoint_cells();
/// The printed reconstruction khatri(fst·k, snd·k) of the weak-product
/// witness, rows (b,c) with b outer.
const std::vector<std::vector<double>>& weak_product_reconstruction();
/// The pairing (f △ g) at input 2 from the same example, with
/// f 2 = {2: 0.7, 1: 0.3} and g 2 = {1: 0.4, 2: 0.2, 3: 0.4}.
const std::vector<Line>& pairing_at_two();

struct LineCheck {
  Value value;
  double expected;  // percent; NaN when the line is not printed
  double computed;  // percent; 0 when absent from the computed support
  bool ok;
};

struct TableCheck {
  std::vector<LineCheck> lines;
  bool ok = true;
};

/// Every printed line must match within `tol` points; unprinted computed
/// lines must not exceed `tol` points.
TableCheck compare(const std::vector<Line>& expected, const Dist& computed, double tol = kPercentTolerance);

/// Whether `computed` rounds to the printed decimal `cell` at its precision;
/// integer cells must match within 1e-12.
bool matches_printed(const std::string& cell, double computed);

}  // namespace faultcalc::golden
