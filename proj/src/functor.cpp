#include "faultcalc/functor.hpp"

#include <optional>

#include "faultcalc/errors.hpp"

namespace faultcalc {

struct Functor::Node {
  Kind kind;
  std::optional<Functor> g, h;
  std::optional<Dim> dim;  // Const K or List alphabet
};

namespace {

Value lift_left(const Value& v) { return Value::left(v); }
Value lift_right(const Value& v) { return Value::right(v); }

}  // namespace

Functor Functor::id() { return Functor(std::make_shared<Node>(Node{Kind::Id, {}, {}, {}})); }

Functor Functor::constant(const Dim& k) { return Functor(std::make_shared<Node>(Node{Kind::Const, {}, {}, k})); }

Functor Functor::sum(const Functor& g, const Functor& h) {
  return Functor(std::make_shared<Node>(Node{Kind::Sum, g, h, {}}));
}

Functor Functor::comp(const Functor& g, const Functor& h) {
  return Functor(std::make_shared<Node>(Node{Kind::Comp, g, h, {}}));
}

Functor Functor::for_loop() { return Functor(std::make_shared<Node>(Node{Kind::ForLoop, {}, {}, {}})); }

Functor Functor::list(const Dim& alphabet) {
  return Functor(std::make_shared<Node>(Node{Kind::List, {}, {}, alphabet}));
}

Functor::Kind Functor::kind() const { return node_->kind; }

const Functor& Functor::left() const {
  if (!node_->g) throw DomainError("functor has no operands: " + describe(*this));
  return *node_->g;
}

const Functor& Functor::right() const {
  if (!node_->h) throw DomainError("functor has no operands: " + describe(*this));
  return *node_->h;
}

const Dim& Functor::constant_dim() const {
  if (node_->kind != Kind::Const) throw DomainError("not a constant functor: " + describe(*this));
  return *node_->dim;
}

const Dim& Functor::alphabet() const {
  if (node_->kind != Kind::List) throw DomainError("not a list functor: " + describe(*this));
  return *node_->dim;
}

Dim Functor::apply(const Dim& x) const {
  switch (kind()) {
    case Kind::Id:
      return x;
    case Kind::Const:
      return *node_->dim;
    case Kind::Sum:
      return Dim::sum(left().apply(x), right().apply(x));
    case Kind::Comp:
      return left().apply(right().apply(x));
    case Kind::ForLoop:
      return Dim::sum(Dim::unit(), x);
    case Kind::List:
      return Dim::sum(Dim::unit(), Dim::product(*node_->dim, x));
  }
  throw DomainError("unknown functor");
}

Matrix Functor::apply(const Matrix& m) const {
  switch (kind()) {
    case Kind::Id:
      return m;
    case Kind::Const:
      return Matrix::identity(*node_->dim);
    case Kind::Sum:
      return oplus(left().apply(m), right().apply(m));
    case Kind::Comp:
      return left().apply(right().apply(m));
    case Kind::ForLoop:
      return oplus(Matrix::identity(Dim::unit()), m);
    case Kind::List:
      return oplus(Matrix::identity(Dim::unit()), kron(Matrix::identity(*node_->dim), m));
  }
  throw DomainError("unknown functor");
}

Dist Functor::map(const ProbFn& k, const Value& v) const {
  switch (kind()) {
    case Kind::Id:
      return k(v);
    case Kind::Const:
      return dirac(v);
    case Kind::Sum:
      if (v.is(Value::Kind::Left)) return fmap(left().map(k, v.injected()), lift_left);
      return fmap(right().map(k, v.injected()), lift_right);
    case Kind::Comp: {
      const Functor inner = right();
      return left().map(ProbFn([inner, k](const Value& w) { return inner.map(k, w); }), v);
    }
    case Kind::ForLoop:
      if (v.is(Value::Kind::Left)) return dirac(v);
      return fmap(k(v.injected()), lift_right);
    case Kind::List: {
      if (v.is(Value::Kind::Left)) return dirac(v);
      const Value head = v.injected().first();
      return fmap(k(v.injected().second()), [&head](const Value& y) { return Value::right(Value::pair(head, y)); });
    }
  }
  throw DomainError("unknown functor");
}

Value Functor::map_sharp(const std::function<Value(const Value&)>& f, const Value& v) const {
  return map(ProbFn::sharp(f), v).dirac_value();
}

bool Functor::has_initial_algebra() const { return kind() == Kind::ForLoop || kind() == Kind::List; }

Value Functor::in(const Value& v) const {
  if (kind() == Kind::ForLoop) {
    if (v.is(Value::Kind::Left)) return Value::integer(0);
    return Value::integer(v.injected().as_int() + 1);
  }
  if (kind() == Kind::List) {
    if (v.is(Value::Kind::Left)) {
      // nil has no element to tell strings from lists; text is the default
      // for character alphabets.
      const auto& a = alphabet();
      if (a.size() > 0 && a.element(0).is(Value::Kind::Str)) return Value::text("");
      return Value::list({});
    }
    return Value::cons(v.injected().first(), v.injected().second());
  }
  throw DomainError("no initial algebra for functor " + describe(*this));
}

Value Functor::out(const Value& t) const {
  if (kind() == Kind::ForLoop) {
    const auto n = t.as_int();
    if (n < 0) throw DomainError("negative natural " + render(t));
    if (n == 0) return Value::left(Value::unit());
    return Value::right(Value::integer(n - 1));
  }
  if (kind() == Kind::List) {
    Value head, tail;
    if (!t.uncons(head, tail)) return Value::left(Value::unit());
    return Value::right(Value::pair(head, tail));
  }
  throw DomainError("no initial algebra for functor " + describe(*this));
}

bool operator==(const Functor& a, const Functor& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Functor::Kind::Id:
    case Functor::Kind::ForLoop:
      return true;
    case Functor::Kind::Const:
    case Functor::Kind::List:
      return *a.node_->dim == *b.node_->dim;
    case Functor::Kind::Sum:
    case Functor::Kind::Comp:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string describe(const Functor& f) {
  switch (f.kind()) {
    case Functor::Kind::Id:
      return "Id";
    case Functor::Kind::Const:
      return "Const(" + describe(f.constant_dim()) + ")";
    case Functor::Kind::Sum:
      return "Sum(" + describe(f.left()) + "," + describe(f.right()) + ")";
    case Functor::Kind::Comp:
      return "Comp(" + describe(f.left()) + "," + describe(f.right()) + ")";
    case Functor::Kind::ForLoop:
      return "ForLoop";
    case Functor::Kind::List:
      return "List(" + describe(f.alphabet()) + ")";
  }
  return "?";
}

Matrix unzip(const Functor& f, const Dim& b, const Dim& c) {
  return khatri(f.apply(fst_matrix(b, c)), f.apply(snd_matrix(b, c)));
}

Matrix initial_in_matrix(const Functor& f, const Dim& sub, const Dim& whole) {
  return Matrix::from_function(f.apply(sub), whole, [&f](const Value& v) { return f.in(v); });
}

}  // namespace faultcalc
