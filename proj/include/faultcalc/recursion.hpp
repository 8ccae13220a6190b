#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faultcalc/dist.hpp"
#include "faultcalc/functor.hpp"
#include "faultcalc/matrix.hpp"

namespace faultcalc {

/// F-algebra with a probabilistic action F(carrier) → carrier.
struct Algebra {
  Functor functor;
  ProbFn action;
};

/// [init | body] for the for-loop functor.
Algebra for_algebra(const Dist& init, const ProbFn& body);
/// [base | step] for the list functor; `step` receives pairs (head, acc).
Algebra list_algebra(const Dim& alphabet, const Dist& base, const ProbFn& step);

/// n-fold Kleisli iteration of `body` from `init`.
Dist for_loop(const ProbFn& body, const Dist& init, std::size_t n);
/// Right fold: fold [] = base, fold (h:t) = do { s <- fold t; step (h, s) }.
/// `xs` is a list or a string.
Dist fold_list(const ProbFn& step, const Dist& base, const Value& xs);
/// The catamorphism of `alg` at `input`: cata · in = alg · F cata.
Dist cata_eval(const Algebra& alg, const Value& input);
/// cata_eval as a ProbFn.
ProbFn cata(const Algebra& alg);

/// Matrix of `f` restricted to `rows`, dropping escaping mass instead of
/// failing. Meant for loop bodies handed to matrix_cata_fixpoint, which
/// reports any escape that actually reaches its result.
Matrix truncated_body(const ProbFn& f, const Dim& states);

/// Called with (iteration, current matrix) after every fixpoint step.
using FixpointObserver = std::function<void(std::size_t, const Matrix&)>;

/// Fixpoint in k of k = init · zero° + body · k · succ° over inputs
/// 0..n_max, starting from the zero matrix. Stops at the first iteration
/// that leaves k bitwise unchanged (n_max + 2 at the latest).
/// Throws TruncationError if a reachable state's mass leaves `states`.
Matrix matrix_cata_fixpoint(const Matrix& body, const Matrix& init, std::size_t n_max, const Dim& states,
                            const FixpointObserver& observe = {});

/// Combined algebra (f ⊗ g) · unzip_F over the product carrier.
Algebra banana_split(const Algebra& f, const Algebra& g);
/// Matrix form of the same: kron(f, g) · unzip_F(B, C).
Matrix banana_split_matrix(const Functor& functor, const Matrix& f, const Matrix& g);

/// h △ k : pairs the outputs of two algebras over the same functor.
Algebra tuple_algebras(const Algebra& h, const Algebra& k);

/// Evaluates the mutually recursive pair f · in = h · F(f △ g),
/// g · in = k · F(f △ g) at `input`, each function an independent experiment.
std::pair<Dist, Dist> mutual_eval(const Algebra& h, const Algebra& k, const Value& input);

struct SideConditionReport {
  bool fst_sharp = false;  // f projection Dirac on every tested input
  bool snd_sharp = false;
  std::size_t inputs_tested = 0;
  /// Largest TV distance between pair(f x, g x) and the tupled catamorphism.
  double max_tv = 0.0;
  bool holds() const { return fst_sharp || snd_sharp; }
  std::string verdict() const;
};

struct TupledResult {
  Algebra tupled;  // h △ k
  SideConditionReport report;
};

/// Tuples two mutually recursive algebras into one catamorphism and checks
/// on `inputs` whether a projection stays sharp, the condition under which
/// the tupled program is distributionally equal to the mutual pair.
TupledResult tupled_from_mutual(const Algebra& h, const Algebra& k, std::span<const Value> inputs);

/// Both sides of: for f (a p◊ b) = (for f a) p◊ (for f b), at n.
std::pair<Dist, Dist> base_choice_split(const ProbFn& f, const Value& a, const Value& b, Probability p,
                                        std::size_t n);

struct FusionReport {
  double side_condition_tv = 0.0;  // max over F(sample) of k·[e|g] vs [d|f]·F k
  double fold_tv = 0.0;            // max over test inputs of k∘fold vs candidate fold
  std::size_t side_cases = 0;
  std::size_t inputs_tested = 0;
  double tol = 1e-9;
  bool side_condition_holds() const { return side_condition_tv <= tol; }
  bool holds() const { return side_condition_holds() && fold_tv <= tol; }
};

/// Checks k · fold(g) = fold(candidate) via the fusion side condition over
/// F(sample) and directly on `inputs`.
FusionReport fold_fusion_check(const ProbFn& k, const Algebra& g, const Algebra& candidate, const Dim& sample,
                               std::span<const Value> inputs, double tol = 1e-9);

}  // namespace faultcalc
