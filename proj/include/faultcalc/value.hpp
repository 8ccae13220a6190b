#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace faultcalc {

/// Dynamically typed, totally ordered value carried by distributions and
/// enumerated by dimensions: unit, booleans, integers, strings, pairs, finite
/// lists and the two injections of a disjoint sum.
///
/// Strings double as lists of characters for list folds (see `uncons`).
class Value {
 public:
  enum class Kind : std::uint8_t { Unit, Bool, Int, Str, Pair, List, Left, Right };

  Value() = default;  // unit

  static Value unit() { return {}; }
  static Value boolean(bool b);
  static Value integer(std::int64_t i);
  static Value text(std::string s);
  static Value pair(Value a, Value b);
  static Value list(std::vector<Value> items);
  static Value left(Value v);
  static Value right(Value v);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }

  bool as_bool() const;
  std::int64_t as_int() const;
  const std::string& as_text() const;
  const Value& first() const;
  const Value& second() const;
  const std::vector<Value>& items() const;  // List payload
  const Value& injected() const;             // Left/Right payload

  /// Splits a list or string into head and tail; false when empty.
  bool uncons(Value& head, Value& tail) const;
  bool is_empty_sequence() const;
  /// Prepend `head` onto a list, or a one-character string onto a string.
  static Value cons(const Value& head, const Value& tail);

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  Kind kind_ = Kind::Unit;
  std::int64_t int_ = 0;  // Bool and Int payload
  std::string text_;
  std::vector<Value> items_;  // Pair (2), List (n), Left/Right (1)
};

/// Canonical text form: `()`, `True`, `42`, `"abc"`, `(5,2)`, `[2,3]`,
/// `inl(x)`, `inr(x)`.
std::string render(const Value& v);

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace faultcalc
