#pragma once

#include <string>

#include "faultcalc/laws.hpp"

namespace faultcalc::report {

struct Report {
  std::string markdown;
  bool ok = true;
};

/// Recomputes every reference table, compares it with the frozen constants
/// and appends the law-suite summary for `cfg`. Output depends only on `cfg`.
Report build(const laws::TrialConfig& cfg = {});

/// Doubling-loop fixpoint over inputs 0..n_max and outputs 0..m_max.
Matrix ftwice_fixpoint(double p, std::size_t n_max, std::size_t m_max);

/// Risk comparison of mfib (g) and mfibl (h) against sharp fib on 0..n_max.
laws::RiskReport fib_risk(double p, std::size_t n_max);

}  // namespace faultcalc::report
