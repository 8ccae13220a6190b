#include "faultcalc/cases.hpp"

#include <algorithm>
#include <set>

#include "faultcalc/errors.hpp"

namespace faultcalc::cases {

namespace {

Value integer(std::int64_t i) { return Value::integer(i); }

std::int64_t natural(std::int64_t n) {
  if (n < 0) throw DomainError("input must be a natural number, got " + std::to_string(n));
  return n;
}

Value second_of(const Value& v) { return v.second(); }

}  // namespace

ProbFn fadd(Probability p, std::int64_t x) {
  return ProbFn([p, x](const Value& y) { return choice(p, dirac(y), dirac(integer(x + y.as_int()))); });
}

ProbFn fadd_zero(Probability q, std::int64_t x) {
  return ProbFn([q, x](const Value& y) { return choice(q, dirac(integer(0)), dirac(integer(x + y.as_int()))); });
}

ProbFn fadd_combined(Probability p, Probability q, std::int64_t x) {
  return ProbFn([p, q, x](const Value& y) {
    return choice(p, choice(q, dirac(integer(0)), dirac(y)), dirac(integer(x + y.as_int())));
  });
}

// mfib 0 = return 0; mfib 1 = return 1;
// mfib (n+2) = do { x <- mfib n; y <- mfib (n+1); fadd x y }
// No memoization: the two calls are separate fault experiments.
Dist mfib(Probability p, std::int64_t n) {
  natural(n);
  if (n < 2) return dirac(integer(n));
  const Dist xs = mfib(p, n - 2);
  const Dist ys = mfib(p, n - 1);
  return bind(pair(xs, ys), [p](const Value& xy) { return fadd(p, xy.first().as_int())(xy.second()); });
}

std::pair<Algebra, Algebra> fib_algebras(Probability p) {
  // fib (n+1) = f n;  f (n+1) = fib n + f n  (faulty addition).
  Algebra h = for_algebra(dirac(integer(0)), ProbFn::sharp(second_of));
  Algebra k = for_algebra(dirac(integer(1)), ProbFn([p](const Value& xy) {
                            return fadd(p, xy.first().as_int())(xy.second());
                          }));
  return {std::move(h), std::move(k)};
}

Dist mfibl(Probability p, std::int64_t n) {
  const auto [h, k] = fib_algebras(p);
  return first_marginal(cata_eval(tuple_algebras(h, k), integer(natural(n))));
}

std::pair<Algebra, Algebra> sq_algebras(Probability p) {
  // sq (n+1) = sq n + odd n (faulty);  odd (n+1) = 2 + odd n.
  Algebra h = for_algebra(dirac(integer(0)), ProbFn([p](const Value& so) {
                            return fadd(p, so.first().as_int())(so.second());
                          }));
  Algebra k = for_algebra(dirac(integer(1)), ProbFn::sharp([](const Value& so) {
                            return integer(so.second().as_int() + 2);
                          }));
  return {std::move(h), std::move(k)};
}

std::pair<Algebra, Algebra> sq_prime_algebras(Probability p, Probability q) {
  auto [h, k] = sq_algebras(p);
  k = for_algebra(dirac(integer(1)), ProbFn([q](const Value& so) { return fadd(q, 2)(so.second()); }));
  return {std::move(h), std::move(k)};
}

Dist msq(Probability p, std::int64_t n) {
  const auto [h, k] = sq_algebras(p);
  return mutual_eval(h, k, integer(natural(n))).first;
}

Dist msql(Probability p, std::int64_t n) {
  const auto [h, k] = sq_algebras(p);
  return first_marginal(cata_eval(tuple_algebras(h, k), integer(natural(n))));
}

Dist msqlo(Probability p, std::int64_t n) {
  const auto [h, k] = sq_algebras(p);
  return second_marginal(cata_eval(tuple_algebras(h, k), integer(natural(n))));
}

Dist msq_prime(Probability p, Probability q, std::int64_t n) {
  const auto [h, k] = sq_prime_algebras(p, q);
  return mutual_eval(h, k, integer(natural(n))).first;
}

Dist msql_prime(Probability p, Probability q, std::int64_t n) {
  const auto [h, k] = sq_prime_algebras(p, q);
  return first_marginal(cata_eval(tuple_algebras(h, k), integer(natural(n))));
}

Dist ftwice(Probability p, std::int64_t n) {
  return for_loop(fadd(p, 2), dirac(integer(0)), static_cast<std::size_t>(natural(n)));
}

Dim alphabet_for(const Value& xs) {
  std::set<Value> symbols;
  Value head, rest = xs;
  while (rest.uncons(head, rest)) symbols.insert(head);
  if (symbols.empty()) return xs.is(Value::Kind::Str) ? Dim::enumeration({Value::text("a")}) : Dim::range(1);
  return Dim::enumeration(std::vector<Value>(symbols.begin(), symbols.end()));
}

namespace {

Value nil_like(const Dim& alphabet) {
  return alphabet.element(0).is(Value::Kind::Str) ? Value::text("") : Value::list({});
}

}  // namespace

Algebra fcat_algebra(Probability p, const Dim& alphabet) {
  // lose = snd, send = cons.
  const ProbFn lose = ProbFn::sharp(second_of);
  const ProbFn send = ProbFn::sharp([](const Value& ht) { return Value::cons(ht.first(), ht.second()); });
  return list_algebra(alphabet, dirac(nil_like(alphabet)), choice(p, lose, send));
}

Algebra fcount_algebra(Probability q, const Dim& alphabet) {
  const ProbFn succ = ProbFn::sharp([](const Value& c) { return integer(c.as_int() + 1); });
  return list_algebra(alphabet, dirac(integer(0)),
                      kleisli(choice(q, ProbFn::identity(), succ), ProbFn::sharp(second_of)));
}

Algebra fsum_algebra(Probability p, const Dim& alphabet) {
  return list_algebra(alphabet, dirac(integer(0)),
                      ProbFn([p](const Value& at) { return fadd(p, at.first().as_int())(at.second()); }));
}

Algebra consolidated_count_algebra(Probability p, Probability q, const Dim& alphabet) {
  const Probability stay(p.value() + q.value() - p.value() * q.value());
  const ProbFn succ = ProbFn::sharp([](const Value& c) { return integer(c.as_int() + 1); });
  return list_algebra(alphabet, dirac(integer(0)),
                      kleisli(choice(stay, ProbFn::identity(), succ), ProbFn::sharp(second_of)));
}

Dist fcat(Probability p, const Value& s) { return cata_eval(fcat_algebra(p, alphabet_for(s)), s); }

Dist fcount(Probability q, const Value& s) { return cata_eval(fcount_algebra(q, alphabet_for(s)), s); }

Dist fsum(Probability p, const Value& xs) { return cata_eval(fsum_algebra(p, alphabet_for(xs)), xs); }

Dist pipeline_count_cat(Probability p, Probability q, const Value& s) {
  const Dim a = alphabet_for(s);
  const ProbFn count = cata(fcount_algebra(q, a));
  return bind(cata_eval(fcat_algebra(p, a), s), [&count](const Value& t) { return count(t); });
}

Dist pipeline_consolidated(Probability p, Probability q, const Value& s) {
  return cata_eval(consolidated_count_algebra(p, q, alphabet_for(s)), s);
}

Dist favg_pair(Probability p, Probability q, const Value& xs) {
  const Dim a = alphabet_for(xs);
  return pair(cata_eval(fsum_algebra(p, a), xs), cata_eval(fcount_algebra(q, a), xs));
}

Dist favg_split(Probability p, Probability q, const Value& xs) {
  const Dim a = alphabet_for(xs);
  return cata_eval(banana_split(fsum_algebra(p, a), fcount_algebra(q, a)), xs);
}

const std::vector<CaseInfo>& registry() {
  static const std::vector<CaseInfo> cases = {
      {"mfib", InputKind::Natural, "doubly recursive Fibonacci, faulty addition (p)"},
      {"mfibl", InputKind::Natural, "linear Fibonacci for-loop on pairs, faulty addition (p)"},
      {"msq", InputKind::Natural, "recursive square via odd numbers, faulty addition (p)"},
      {"msql", InputKind::Natural, "linear square for-loop, faulty addition (p)"},
      {"msqlo", InputKind::Natural, "odd-number projection of the linear square loop"},
      {"msq'", InputKind::Natural, "recursive square with faulty odd numbers (p, q)"},
      {"msql'", InputKind::Natural, "linear square with faulty odd numbers (p, q)"},
      {"ftwice", InputKind::Natural, "doubling loop of faulty (2+) (p)"},
      {"fcat", InputKind::Text, "copy that loses items (p)"},
      {"fcount", InputKind::Text, "count that skips items (q)"},
      {"fsum", InputKind::IntList, "list sum with faulty addition (p)"},
      {"pipeline_count_cat", InputKind::Text, "fcount_q after fcat_p"},
      {"pipeline_consolidated", InputKind::Text, "single fold equal to fcount_q after fcat_p"},
      {"favg_pair", InputKind::IntList, "(fsum_p, fcount_q) as two independent folds"},
      {"favg_split", InputKind::IntList, "(fsum_p, fcount_q) as one banana-split fold"},
  };
  return cases;
}

const CaseInfo* find_case(std::string_view name) {
  if (name == "msq_prime") name = "msq'";
  if (name == "msql_prime") name = "msql'";
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [name](const CaseInfo& c) { return c.name == name; });
  return it == r.end() ? nullptr : &*it;
}

namespace {

void check_input(const CaseInfo& info, const Value& input) {
  switch (info.input) {
    case InputKind::Natural:
      if (!input.is(Value::Kind::Int) || input.as_int() < 0) {
        throw DomainError(info.name + " expects a natural number, got " + render(input));
      }
      return;
    case InputKind::Text:
      if (!input.is(Value::Kind::Str)) throw DomainError(info.name + " expects a string, got " + render(input));
      return;
    case InputKind::IntList:
      if (!input.is(Value::Kind::List) ||
          !std::all_of(input.items().begin(), input.items().end(),
                       [](const Value& v) { return v.is(Value::Kind::Int); })) {
        throw DomainError(info.name + " expects a list of integers, got " + render(input));
      }
      return;
  }
}

}  // namespace

Dist run_case(std::string_view name, const CaseParams& params) {
  const CaseInfo* info = find_case(name);
  if (!info) throw DomainError("unknown case: " + std::string(name));
  check_input(*info, params.input);
  const Probability p(params.p), q(params.q);
  const Value& in = params.input;
  const std::string& n = info->name;

  if (n == "mfib") return mfib(p, in.as_int());
  if (n == "mfibl") return mfibl(p, in.as_int());
  if (n == "msq") return msq(p, in.as_int());
  if (n == "msql") return msql(p, in.as_int());
  if (n == "msqlo") return msqlo(p, in.as_int());
  if (n == "msq'") return msq_prime(p, q, in.as_int());
  if (n == "msql'") return msql_prime(p, q, in.as_int());
  if (n == "ftwice") return ftwice(p, in.as_int());
  if (n == "fcat") return fcat(p, in);
  if (n == "fcount") return fcount(q, in);
  if (n == "fsum") return fsum(p, in);
  if (n == "pipeline_count_cat") return pipeline_count_cat(p, q, in);
  if (n == "pipeline_consolidated") return pipeline_consolidated(p, q, in);
  if (n == "favg_pair") return favg_pair(p, q, in);
  return favg_split(p, q, in);
}

}  // namespace faultcalc::cases
