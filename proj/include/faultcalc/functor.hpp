#pragma once

#include <memory>
#include <string>

#include "faultcalc/dim.hpp"
#include "faultcalc/dist.hpp"
#include "faultcalc/matrix.hpp"

namespace faultcalc {

/// Polynomial functor from a small grammar:
///
///   Id           F X = X
///   Const(K)     F X = K
///   Sum(G,H)     F X = G X ⊕ H X
///   Comp(G,H)    F X = G (H X)
///   ForLoop      F X = 1 ⊕ X                (natural numbers)
///   List(A)      F X = 1 ⊕ (A ⊗ X)          (finite sequences over A)
///
/// A functor acts on Dims, on matrices (preserving column-stochasticity) and
/// on values via a probabilistic function (the monadic `fmap`).
class Functor {
 public:
  enum class Kind { Id, Const, Sum, Comp, ForLoop, List };

  static Functor id();
  static Functor constant(const Dim& k);
  static Functor sum(const Functor& g, const Functor& h);
  static Functor comp(const Functor& g, const Functor& h);
  static Functor for_loop();
  static Functor list(const Dim& alphabet);

  Kind kind() const;
  const Functor& left() const;   // Sum/Comp operands
  const Functor& right() const;
  const Dim& constant_dim() const;  // Const K
  const Dim& alphabet() const;      // List A

  Dim apply(const Dim& x) const;
  Matrix apply(const Matrix& m) const;
  /// (F k) v for v ∈ F X.
  Dist map(const ProbFn& k, const Value& v) const;
  Value map_sharp(const std::function<Value(const Value&)>& f, const Value& v) const;

  /// Whether F has an initial algebra handled here (ForLoop, List).
  bool has_initial_algebra() const;
  /// in : F T → T and its inverse for the initial algebra T (naturals for
  /// ForLoop, lists or strings for List). DomainError for other functors.
  Value in(const Value& v) const;
  Value out(const Value& t) const;

  friend bool operator==(const Functor& a, const Functor& b);

 private:
  struct Node;
  explicit Functor(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string describe(const Functor& f);

/// unzip_F = (F fst) △ (F snd) : F(B×C) → Product(F B, F C).
Matrix unzip(const Functor& f, const Dim& b, const Dim& c);

/// The bijection in : F(sub) → whole between truncated carriers of the
/// initial algebra, e.g. 1 + Range(n) → Range(n+1). TruncationError if some
/// in-image leaves `whole`.
Matrix initial_in_matrix(const Functor& f, const Dim& sub, const Dim& whole);

}  // namespace faultcalc
