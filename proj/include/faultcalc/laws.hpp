#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "faultcalc/functor.hpp"
#include "faultcalc/matrix.hpp"

// Seeded randomized checks of the matrix, choice and recursion laws.
namespace faultcalc::laws {

using Rng = std::mt19937_64;

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_dim = 6;
  double tol = 1e-9;

  /// DomainError unless trials ≥ 1, 2 ≤ max_dim ≤ 12 and tol > 0.
  void validate() const;
};

enum class Status { Pass, Fail, ExpectedFail };

std::string_view status_name(Status s);

struct LawReport {
  std::string law;
  std::size_t trials = 0;
  double max_dev = 0.0;
  double tol = 0.0;
  Status status = Status::Fail;
  /// Serialized inputs of the worst trial; filled when max_dev > tol.
  std::string witness;
  /// Extra evidence (fixed counterexamples, companion checks).
  std::string note;

  /// Pass, or an expected failure that was reproduced.
  bool ok() const { return status != Status::Fail; }
};

/// Independent stream for trial `trial` of `law`.
Rng trial_rng(std::uint64_t seed, std::string_view law, std::size_t trial);

double uniform01(Rng& rng);
/// Uniform in 0..n−1.
std::size_t below(Rng& rng, std::size_t n);

/// Columns are normalized positive vectors.
Matrix random_cs_matrix(Rng& rng, const Dim& cols, const Dim& rows);
/// One 1 per column at a uniformly drawn row.
Matrix random_sharp(Rng& rng, const Dim& cols, const Dim& rows);
/// Leaves of size 1..bound; Sum/Product nodes up to `depth` levels deep. A
/// compound Dim larger than `cap` elements is replaced by a leaf.
Dim random_dim(Rng& rng, std::size_t bound, int depth, std::size_t cap);
/// Id, Const, ForLoop, List, Sum and Comp with nesting up to `depth`.
Functor random_functor(Rng& rng, int depth);

/// Catalogue in run order.
const std::vector<std::string>& law_names();

/// DomainError for unknown laws or invalid configurations.
LawReport check_law(std::string_view name, const TrialConfig& cfg);
std::vector<LawReport> check_all(const TrialConfig& cfg);

/// `LAW<TAB>STATUS<TAB>max_dev<TAB>trials`.
std::string serialize(const LawReport& r);
void write_reports(std::ostream& os, const std::vector<LawReport>& reports, bool verbose = false);

/// The 3 → 2×3 matrix that cannot be rebuilt from its projections.
Matrix weak_product_witness();
/// khatri(fst·k, snd·k).
Matrix reconstruct(const Matrix& k);

struct RiskReport {
  bool holds = false;                // g ≤_f h on every cell
  std::vector<bool> column_holds;    // per input
  std::vector<double> g_correct;     // mass g puts on f a, per input a
  std::vector<double> h_correct;
  Matrix g_masked;                   // hadamard(g, f)
  Matrix h_masked;
};

/// g ≤_f h iff hadamard(g, f) ≤ hadamard(h, f) entrywise (slack `tol`).
/// DomainError unless f is sharp; DimensionError unless all types agree.
RiskReport risk_preorder(const Matrix& g, const Matrix& h, const Matrix& f, double tol = 1e-12);

}  // namespace faultcalc::laws
