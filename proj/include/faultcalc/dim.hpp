#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "faultcalc/value.hpp"

namespace faultcalc {

/// Finite index set for matrix rows and columns.
///
/// Elements enumerate deterministically: Range(n) as integers 0..n-1,
/// Booleans as False, True, Sum(A,B) as inl(a)... then inr(b)..., and
/// Product(A,B) as pairs (a,b) with the left factor varying slowest.
/// Equality is structural: Range(2) and Booleans are different Dims.
class Dim {
 public:
  enum class Kind { Unit, Range, Booleans, Enum, Sum, Product };

  static Dim unit();
  static Dim range(std::size_t n);
  static Dim booleans();
  /// Labels must be distinct; order is preserved.
  static Dim enumeration(std::vector<Value> labels);
  static Dim sum(const Dim& a, const Dim& b);
  static Dim product(const Dim& a, const Dim& b);

  Kind kind() const;
  std::size_t size() const;
  const std::vector<Value>& elements() const;
  const Value& element(std::size_t i) const { return elements()[i]; }
  std::optional<std::size_t> index_of(const Value& v) const;
  bool contains(const Value& v) const { return index_of(v).has_value(); }

  /// Range length; Enum labels; Sum/Product factors. Throw on other kinds.
  std::size_t range_length() const;
  const Dim& left() const;
  const Dim& right() const;

  friend bool operator==(const Dim& a, const Dim& b);

 private:
  struct Node;
  static std::shared_ptr<Node> finish(std::shared_ptr<Node> n);
  explicit Dim(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Compact structural description, e.g. `Product(Range(2),Booleans)`.
std::string describe(const Dim& d);

}  // namespace faultcalc
