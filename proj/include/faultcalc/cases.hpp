#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "faultcalc/dist.hpp"
#include "faultcalc/recursion.hpp"

// Fault-injected example programs. Every distribution is exact: faults are
// enumerated exhaustively, never sampled.
namespace faultcalc::cases {

/// Faulty addition (x+): with probability p behaves as the identity.
ProbFn fadd(Probability p, std::int64_t x);
/// Addition that resets its output to 0 with probability q.
ProbFn fadd_zero(Probability q, std::int64_t x);
/// ((0 q◊ id) p◊ (x+)): resets with probability qp, identity with (1−q)p.
ProbFn fadd_combined(Probability p, Probability q, std::int64_t x);

// Fibonacci. mfib is the doubly recursive monadic program; the pair
// (fib_h, fib_k) describes fib and its derivative as mutually recursive
// for-loop algebras over pairs.
Dist mfib(Probability p, std::int64_t n);
Dist mfibl(Probability p, std::int64_t n);
std::pair<Algebra, Algebra> fib_algebras(Probability p);

// Squares as sums of odd numbers. The primed variants inject a second fault
// (rate q) into the odd-number generator.
std::pair<Algebra, Algebra> sq_algebras(Probability p);
std::pair<Algebra, Algebra> sq_prime_algebras(Probability p, Probability q);
Dist msq(Probability p, std::int64_t n);
Dist msql(Probability p, std::int64_t n);
Dist msqlo(Probability p, std::int64_t n);
Dist msq_prime(Probability p, Probability q, std::int64_t n);
Dist msql_prime(Probability p, Probability q, std::int64_t n);

/// Doubling as a for-loop of faulty (2+) from 0.
Dist ftwice(Probability p, std::int64_t n);

/// Alphabet Dim used for list folds over `xs` (a string or integer list).
Dim alphabet_for(const Value& xs);

// List folds. `alphabet` fixes the list functor.
Algebra fcat_algebra(Probability p, const Dim& alphabet);
Algebra fcount_algebra(Probability q, const Dim& alphabet);
Algebra fsum_algebra(Probability p, const Dim& alphabet);
/// fold ((p+q−pq)·id + (1−p)(1−q)·succ) · snd from 0.
Algebra consolidated_count_algebra(Probability p, Probability q, const Dim& alphabet);

Dist fcat(Probability p, const Value& s);
Dist fcount(Probability q, const Value& s);
Dist fsum(Probability p, const Value& xs);
Dist pipeline_count_cat(Probability p, Probability q, const Value& s);
Dist pipeline_consolidated(Probability p, Probability q, const Value& s);
/// fsum_p △ fcount_q as two independent folds.
Dist favg_pair(Probability p, Probability q, const Value& xs);
/// The same pair computed by one banana-split fold on (total, count).
Dist favg_split(Probability p, Probability q, const Value& xs);

enum class InputKind { Natural, Text, IntList };

struct CaseParams {
  double p = 0.1;
  double q = 0.1;
  Value input;
};

struct CaseInfo {
  std::string name;
  InputKind input;
  std::string summary;
};

/// Registry in display order.
const std::vector<CaseInfo>& registry();
/// Accepts registry names plus `msq_prime` / `msql_prime` aliases.
const CaseInfo* find_case(std::string_view name);
/// DomainError for unknown names and inputs outside the case's carrier.
Dist run_case(std::string_view name, const CaseParams& params);

}  // namespace faultcalc::cases
