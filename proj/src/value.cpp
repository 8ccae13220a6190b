#include "faultcalc/value.hpp"

#include <functional>
#include <stdexcept>

namespace faultcalc {

namespace {

[[noreturn]] void wrong_kind(const char* wanted, const Value& v) {
  throw std::logic_error(std::string("value is not ") + wanted + ": " + render(v));
}

}  // namespace

Value Value::boolean(bool b) {
  Value v;
  v.kind_ = Kind::Bool;
  v.int_ = b ? 1 : 0;
  return v;
}

Value Value::integer(std::int64_t i) {
  Value v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}

Value Value::text(std::string s) {
  Value v;
  v.kind_ = Kind::Str;
  v.text_ = std::move(s);
  return v;
}

Value Value::pair(Value a, Value b) {
  Value v;
  v.kind_ = Kind::Pair;
  v.items_.reserve(2);
  v.items_.push_back(std::move(a));
  v.items_.push_back(std::move(b));
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::List;
  v.items_ = std::move(items);
  return v;
}

Value Value::left(Value x) {
  Value v;
  v.kind_ = Kind::Left;
  v.items_.push_back(std::move(x));
  return v;
}

Value Value::right(Value x) {
  Value v;
  v.kind_ = Kind::Right;
  v.items_.push_back(std::move(x));
  return v;
}

bool Value::as_bool() const {
  if (kind_ != Kind::Bool) wrong_kind("a boolean", *this);
  return int_ != 0;
}

std::int64_t Value::as_int() const {
  if (kind_ != Kind::Int) wrong_kind("an integer", *this);
  return int_;
}

const std::string& Value::as_text() const {
  if (kind_ != Kind::Str) wrong_kind("a string", *this);
  return text_;
}

const Value& Value::first() const {
  if (kind_ != Kind::Pair) wrong_kind("a pair", *this);
  return items_[0];
}

const Value& Value::second() const {
  if (kind_ != Kind::Pair) wrong_kind("a pair", *this);
  return items_[1];
}

const std::vector<Value>& Value::items() const {
  if (kind_ != Kind::List) wrong_kind("a list", *this);
  return items_;
}

const Value& Value::injected() const {
  if (kind_ != Kind::Left && kind_ != Kind::Right) wrong_kind("a sum injection", *this);
  return items_[0];
}

bool Value::is_empty_sequence() const {
  if (kind_ == Kind::Str) return text_.empty();
  if (kind_ == Kind::List) return items_.empty();
  wrong_kind("a list or string", *this);
}

bool Value::uncons(Value& head, Value& tail) const {
  if (kind_ == Kind::Str) {
    if (text_.empty()) return false;
    head = text(text_.substr(0, 1));
    tail = text(text_.substr(1));
    return true;
  }
  if (kind_ == Kind::List) {
    if (items_.empty()) return false;
    head = items_.front();
    tail = list(std::vector<Value>(items_.begin() + 1, items_.end()));
    return true;
  }
  wrong_kind("a list or string", *this);
}

Value Value::cons(const Value& head, const Value& tail) {
  if (tail.kind_ == Kind::Str) {
    return text(head.as_text() + tail.text_);
  }
  if (tail.kind_ == Kind::List) {
    std::vector<Value> items;
    items.reserve(tail.items_.size() + 1);
    items.push_back(head);
    items.insert(items.end(), tail.items_.begin(), tail.items_.end());
    return list(std::move(items));
  }
  wrong_kind("a list or string", tail);
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case Value::Kind::Unit:
      return std::strong_ordering::equal;
    case Value::Kind::Bool:
    case Value::Kind::Int:
      return a.int_ <=> b.int_;
    case Value::Kind::Str:
      return a.text_.compare(b.text_) <=> 0;
    default:
      break;
  }
  // Lexicographic over children; shorter prefix first.
  const auto n = std::min(a.items_.size(), b.items_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.items_[i] <=> b.items_[i]; c != 0) return c;
  }
  return a.items_.size() <=> b.items_.size();
}

std::size_t Value::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  switch (kind_) {
    case Kind::Unit:
      break;
    case Kind::Bool:
    case Kind::Int:
      mix(std::hash<std::int64_t>{}(int_));
      break;
    case Kind::Str:
      mix(std::hash<std::string>{}(text_));
      break;
    default:
      for (const auto& c : items_) mix(c.hash());
  }
  return h;
}

std::string render(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      return "()";
    case Value::Kind::Bool:
      return v.as_bool() ? "True" : "False";
    case Value::Kind::Int:
      return std::to_string(v.as_int());
    case Value::Kind::Str:
      return "\"" + v.as_text() + "\"";
    case Value::Kind::Pair:
      return "(" + render(v.first()) + "," + render(v.second()) + ")";
    case Value::Kind::List: {
      std::string out = "[";
      const auto& xs = v.items();
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += render(xs[i]);
      }
      return out + "]";
    }
    case Value::Kind::Left:
      return "inl(" + render(v.injected()) + ")";
    case Value::Kind::Right:
      return "inr(" + render(v.injected()) + ")";
  }
  return "?";
}

}  // namespace faultcalc
