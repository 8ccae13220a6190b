#include "faultcalc/dim.hpp"

#include <stdexcept>
#include <unordered_map>

#include "faultcalc/errors.hpp"

namespace faultcalc {

struct Dim::Node {
  Kind kind;
  std::size_t length = 0;                   // Range
  std::optional<Dim> a, b;                  // Sum / Product
  std::vector<Value> elements;
  std::unordered_map<Value, std::size_t, ValueHash> index;
};

std::shared_ptr<Dim::Node> Dim::finish(std::shared_ptr<Node> n) {
  n->index.reserve(n->elements.size());
  for (std::size_t i = 0; i < n->elements.size(); ++i) {
    if (!n->index.emplace(n->elements[i], i).second) {
      throw DomainError("duplicate Dim element " + render(n->elements[i]));
    }
  }
  return n;
}

Dim Dim::unit() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unit;
  n->elements = {Value::unit()};
  return Dim(finish(n));
}

Dim Dim::range(std::size_t len) {
  if (len == 0) throw DomainError("Range(0) is empty; Dims have size >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Range;
  n->length = len;
  n->elements.reserve(len);
  for (std::size_t i = 0; i < len; ++i) n->elements.push_back(Value::integer(static_cast<std::int64_t>(i)));
  return Dim(finish(n));
}

Dim Dim::booleans() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Booleans;
  n->elements = {Value::boolean(false), Value::boolean(true)};
  return Dim(finish(n));
}

Dim Dim::enumeration(std::vector<Value> labels) {
  if (labels.empty()) throw DomainError("empty enumeration Dim");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Enum;
  n->elements = std::move(labels);
  return Dim(finish(n));
}

Dim Dim::sum(const Dim& a, const Dim& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->a = a;
  n->b = b;
  n->elements.reserve(a.size() + b.size());
  for (const auto& x : a.elements()) n->elements.push_back(Value::left(x));
  for (const auto& y : b.elements()) n->elements.push_back(Value::right(y));
  return Dim(finish(n));
}

Dim Dim::product(const Dim& a, const Dim& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->a = a;
  n->b = b;
  n->elements.reserve(a.size() * b.size());
  for (const auto& x : a.elements()) {
    for (const auto& y : b.elements()) n->elements.push_back(Value::pair(x, y));
  }
  return Dim(finish(n));
}

Dim::Kind Dim::kind() const { return node_->kind; }
std::size_t Dim::size() const { return node_->elements.size(); }
const std::vector<Value>& Dim::elements() const { return node_->elements; }

std::optional<std::size_t> Dim::index_of(const Value& v) const {
  auto it = node_->index.find(v);
  if (it == node_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Dim::range_length() const {
  if (node_->kind != Kind::Range) throw DimensionError("not a Range: " + describe(*this));
  return node_->length;
}

const Dim& Dim::left() const {
  if (!node_->a) throw DimensionError("not a Sum/Product: " + describe(*this));
  return *node_->a;
}

const Dim& Dim::right() const {
  if (!node_->b) throw DimensionError("not a Sum/Product: " + describe(*this));
  return *node_->b;
}

bool operator==(const Dim& x, const Dim& y) {
  if (x.node_ == y.node_) return true;
  if (x.node_->kind != y.node_->kind) return false;
  switch (x.node_->kind) {
    case Dim::Kind::Unit:
    case Dim::Kind::Booleans:
      return true;
    case Dim::Kind::Range:
      return x.node_->length == y.node_->length;
    case Dim::Kind::Enum:
      return x.node_->elements == y.node_->elements;
    case Dim::Kind::Sum:
    case Dim::Kind::Product:
      return *x.node_->a == *y.node_->a && *x.node_->b == *y.node_->b;
  }
  return false;
}

std::string describe(const Dim& d) {
  switch (d.kind()) {
    case Dim::Kind::Unit:
      return "Unit";
    case Dim::Kind::Range:
      return "Range(" + std::to_string(d.range_length()) + ")";
    case Dim::Kind::Booleans:
      return "Booleans";
    case Dim::Kind::Enum:
      return "Enum(" + std::to_string(d.size()) + ")";
    case Dim::Kind::Sum:
      return "Sum(" + describe(d.left()) + "," + describe(d.right()) + ")";
    case Dim::Kind::Product:
      return "Product(" + describe(d.left()) + "," + describe(d.right()) + ")";
  }
  return "?";
}

}  // namespace faultcalc
