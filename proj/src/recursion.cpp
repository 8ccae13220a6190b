#include "faultcalc/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "faultcalc/errors.hpp"

namespace faultcalc {

namespace {

void require_same_functor(const char* op, const Functor& a, const Functor& b) {
  if (!(a == b)) throw DomainError(std::string(op) + ": functor mismatch, " + describe(a) + " vs " + describe(b));
}

void require_initial(const Functor& f) {
  if (!f.has_initial_algebra()) throw DomainError("catamorphisms need ForLoop or List, got " + describe(f));
}

}  // namespace

Algebra for_algebra(const Dist& init, const ProbFn& body) {
  return {Functor::for_loop(), ProbFn([init, body](const Value& v) {
            return v.is(Value::Kind::Left) ? init : body(v.injected());
          })};
}

Algebra list_algebra(const Dim& alphabet, const Dist& base, const ProbFn& step) {
  return {Functor::list(alphabet), ProbFn([base, step](const Value& v) {
            return v.is(Value::Kind::Left) ? base : step(v.injected());
          })};
}

Dist for_loop(const ProbFn& body, const Dist& init, std::size_t n) {
  Dist acc = init;
  for (std::size_t i = 0; i < n; ++i) acc = bind(acc, [&body](const Value& x) { return body(x); });
  return acc;
}

Dist fold_list(const ProbFn& step, const Dist& base, const Value& xs) {
  Value head, tail;
  if (!xs.uncons(head, tail)) return base;
  return bind(fold_list(step, base, tail), [&](const Value& s) { return step(Value::pair(head, s)); });
}

Dist cata_eval(const Algebra& alg, const Value& input) {
  require_initial(alg.functor);
  const ProbFn self([&alg](const Value& x) { return cata_eval(alg, x); });
  return bind(alg.functor.map(self, alg.functor.out(input)), [&alg](const Value& v) { return alg.action(v); });
}

ProbFn cata(const Algebra& alg) {
  return ProbFn([alg](const Value& x) { return cata_eval(alg, x); });
}

Matrix truncated_body(const ProbFn& f, const Dim& states) {
  std::vector<double> e(states.size() * states.size(), 0.0);
  for (std::size_t a = 0; a < states.size(); ++a) {
    const Dist d = f(states.element(a));
    for (const auto& [b, m] : d.support()) {
      if (auto r = states.index_of(b)) e[*r * states.size() + a] = m;
    }
  }
  return Matrix(states, states, std::move(e));
}

Matrix matrix_cata_fixpoint(const Matrix& body, const Matrix& init, std::size_t n_max, const Dim& states,
                            const FixpointObserver& observe) {
  if (!(body.cols() == states) || !(body.rows() == states)) {
    throw DimensionError("fixpoint body must be " + describe(states) + "→" + describe(states) + ", got " +
                         describe(body.cols()) + "→" + describe(body.rows()));
  }
  if (!(init.cols() == Dim::unit()) || !(init.rows() == states)) {
    throw DimensionError("fixpoint init must be Unit→" + describe(states));
  }
  if (!column_stochastic(init)) throw DomainError("fixpoint init is not a distribution");

  std::vector<bool> leaky(states.size(), false);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const double sum = body.column_sum(s);
    if (sum > 1.0 + kStructuralTolerance) throw DomainError("fixpoint body column " + render(states.element(s)) + " exceeds mass 1");
    leaky[s] = sum < 1.0 - kStructuralTolerance;
  }

  const Dim inputs = Dim::range(n_max + 1);
  // succ : Range(n) → Range(n) shifts j to j+1; the last input has no
  // successor inside the truncation.
  std::vector<double> shift(inputs.size() * inputs.size(), 0.0);
  for (std::size_t j = 0; j + 1 < inputs.size(); ++j) shift[(j + 1) * inputs.size() + j] = 1.0;
  const Matrix succ(inputs, inputs, std::move(shift));
  const Matrix base = compose(init, converse(Matrix::point(inputs, Value::integer(0))));
  const Matrix succ_t = converse(succ);

  Matrix k(inputs, states);
  for (std::size_t iter = 1; iter <= n_max + 2; ++iter) {
    Matrix next = add(base, compose(compose(body, k), succ_t));
    const bool stable = bitwise_equal(next, k);
    k = std::move(next);
    if (observe) observe(iter, k);
    if (stable) break;
  }

  for (std::size_t j = 1; j < inputs.size(); ++j) {
    if (std::abs(k.column_sum(j) - 1.0) <= kStructuralTolerance) continue;
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (leaky[s] && k.at(s, j - 1) > 0.0) {
        throw TruncationError("mass escapes " + describe(states) + " from state " + render(states.element(s)) +
                              " at input " + std::to_string(j));
      }
    }
    throw TruncationError("column " + std::to_string(j) + " of the fixpoint lost mass");
  }
  return k;
}

Algebra banana_split(const Algebra& f, const Algebra& g) {
  require_same_functor("banana_split", f.functor, g.functor);
  const Functor F = f.functor;
  return {F, ProbFn([F, f, g](const Value& v) {
            const Value left = F.map_sharp([](const Value& p) { return p.first(); }, v);
            const Value right = F.map_sharp([](const Value& p) { return p.second(); }, v);
            return pair(f.action(left), g.action(right));
          })};
}

Matrix banana_split_matrix(const Functor& functor, const Matrix& f, const Matrix& g) {
  return compose(kron(f, g), unzip(functor, f.rows(), g.rows()));
}

Algebra tuple_algebras(const Algebra& h, const Algebra& k) {
  require_same_functor("tuple_algebras", h.functor, k.functor);
  return {h.functor, split(h.action, k.action)};
}

std::pair<Dist, Dist> mutual_eval(const Algebra& h, const Algebra& k, const Value& input) {
  require_same_functor("mutual_eval", h.functor, k.functor);
  require_initial(h.functor);
  const Functor& F = h.functor;
  std::map<Value, std::pair<Dist, Dist>> memo;
  std::function<const std::pair<Dist, Dist>&(const Value&)> eval;
  eval = [&](const Value& x) -> const std::pair<Dist, Dist>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const ProbFn both([&eval](const Value& y) {
      const auto& fg = eval(y);
      return pair(fg.first, fg.second);
    });
    const Dist shape = F.map(both, F.out(x));
    auto fx = bind(shape, [&h](const Value& v) { return h.action(v); });
    auto gx = bind(shape, [&k](const Value& v) { return k.action(v); });
    return memo.emplace(x, std::pair<Dist, Dist>(std::move(fx), std::move(gx))).first->second;
  };
  return eval(input);
}

std::string SideConditionReport::verdict() const {
  if (fst_sharp && snd_sharp) return "holds on tested range: both projections sharp";
  if (fst_sharp) return "holds on tested range: first projection sharp";
  if (snd_sharp) return "holds on tested range: second projection sharp";
  return "fails on tested range: no sharp projection, tupling may change the distribution";
}

TupledResult tupled_from_mutual(const Algebra& h, const Algebra& k, std::span<const Value> inputs) {
  require_same_functor("tupled_from_mutual", h.functor, k.functor);
  require_initial(h.functor);
  TupledResult out{tuple_algebras(h, k), {}};
  auto& rep = out.report;
  rep.fst_sharp = rep.snd_sharp = true;
  for (const Value& x : inputs) {
    const Dist tupled = cata_eval(out.tupled, x);
    rep.fst_sharp = rep.fst_sharp && first_marginal(tupled).is_dirac();
    rep.snd_sharp = rep.snd_sharp && second_marginal(tupled).is_dirac();
    const auto [fx, gx] = mutual_eval(h, k, x);
    rep.max_tv = std::max(rep.max_tv, tv_distance(pair(fx, gx), tupled));
    ++rep.inputs_tested;
  }
  if (rep.inputs_tested == 0) rep.fst_sharp = rep.snd_sharp = false;
  return out;
}

std::pair<Dist, Dist> base_choice_split(const ProbFn& f, const Value& a, const Value& b, Probability p,
                                        std::size_t n) {
  Dist lhs = for_loop(f, choice(p, dirac(a), dirac(b)), n);
  Dist rhs = choice(p, for_loop(f, dirac(a), n), for_loop(f, dirac(b), n));
  return {std::move(lhs), std::move(rhs)};
}

FusionReport fold_fusion_check(const ProbFn& k, const Algebra& g, const Algebra& candidate, const Dim& sample,
                               std::span<const Value> inputs, double tol) {
  require_same_functor("fold_fusion_check", g.functor, candidate.functor);
  require_initial(g.functor);
  const Functor& F = g.functor;
  FusionReport rep;
  rep.tol = tol;
  const Dim shapes = F.apply(sample);
  for (const Value& v : shapes.elements()) {
    const Dist lhs = bind(g.action(v), [&k](const Value& s) { return k(s); });
    const Dist rhs = bind(F.map(k, v), [&candidate](const Value& w) { return candidate.action(w); });
    rep.side_condition_tv = std::max(rep.side_condition_tv, tv_distance(lhs, rhs));
    ++rep.side_cases;
  }
  for (const Value& x : inputs) {
    const Dist lhs = bind(cata_eval(g, x), [&k](const Value& s) { return k(s); });
    rep.fold_tv = std::max(rep.fold_tv, tv_distance(lhs, cata_eval(candidate, x)));
    ++rep.inputs_tested;
  }
  return rep;
}

}  // namespace faultcalc
