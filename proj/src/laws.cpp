#include "faultcalc/laws.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "faultcalc/cases.hpp"
#include "faultcalc/errors.hpp"
#include "faultcalc/recursion.hpp"

namespace faultcalc::laws {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void TrialConfig::validate() const {
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (max_dim < 2 || max_dim > 12) throw DomainError("max-dim must lie in 2..12, got " + std::to_string(max_dim));
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::ExpectedFail:
      return "expected-fail";
  }
  return "?";
}

Rng trial_rng(std::uint64_t seed, std::string_view law, std::size_t trial) {
  const std::uint64_t s = splitmix64(splitmix64(seed) ^ fnv1a(law)) ^ splitmix64(trial + 0x632be59bd9b4e019ULL);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return Rng(seq);
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Matrix random_cs_matrix(Rng& rng, const Dim& cols, const Dim& rows) {
  const std::size_t nr = rows.size(), nc = cols.size();
  std::vector<double> e(nr * nc);
  for (std::size_t c = 0; c < nc; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < nr; ++r) sum += e[r * nc + c] = 1.0 - uniform01(rng);  // (0, 1]
    for (std::size_t r = 0; r < nr; ++r) e[r * nc + c] /= sum;
  }
  return Matrix(cols, rows, std::move(e));
}

Matrix random_sharp(Rng& rng, const Dim& cols, const Dim& rows) {
  std::vector<double> e(rows.size() * cols.size(), 0.0);
  for (std::size_t c = 0; c < cols.size(); ++c) e[below(rng, rows.size()) * cols.size() + c] = 1.0;
  return Matrix(cols, rows, std::move(e));
}

namespace {

Dim random_leaf(Rng& rng, std::size_t bound) {
  const std::size_t n = 1 + below(rng, bound);
  switch (below(rng, 3)) {
    case 0:
      if (n == 1) return Dim::unit();
      if (n == 2) return Dim::booleans();
      break;
    case 1: {
      std::vector<Value> labels;
      for (std::size_t i = 0; i < n; ++i) labels.push_back(Value::text("e" + std::to_string(i)));
      return Dim::enumeration(std::move(labels));
    }
    default:
      break;
  }
  return Dim::range(n);
}

}  // namespace

Dim random_dim(Rng& rng, std::size_t bound, int depth, std::size_t cap) {
  if (depth <= 0 || below(rng, 2) == 0) return random_leaf(rng, bound);
  const bool is_sum = below(rng, 2) == 0;
  Dim a = random_dim(rng, bound, depth - 1, cap);
  Dim b = random_dim(rng, bound, depth - 1, cap);
  const std::size_t size = is_sum ? a.size() + b.size() : a.size() * b.size();
  if (size > cap) return random_leaf(rng, bound);
  return is_sum ? Dim::sum(a, b) : Dim::product(a, b);
}

Functor random_functor(Rng& rng, int depth) {
  const std::size_t pick = below(rng, depth > 0 ? 6 : 4);
  switch (pick) {
    case 0:
      return Functor::id();
    case 1:
      return Functor::constant(Dim::range(1 + below(rng, 2)));
    case 2:
      return Functor::for_loop();
    case 3:
      return Functor::list(Dim::range(1 + below(rng, 2)));
    case 4:
      return Functor::sum(random_functor(rng, depth - 1), random_functor(rng, depth - 1));
    default:
      return Functor::comp(random_functor(rng, depth - 1), random_functor(rng, depth - 1));
  }
}

Matrix weak_product_witness() {
  const Dim b = Dim::range(2), c = Dim::range(3);
  return Matrix(Dim::range(3), Dim::product(b, c),
                {0.0, 0.4, 0.2,   //
                 0.2, 0.0, 0.17,  //
                 0.2, 0.1, 0.13,  //
                 0.6, 0.4, 0.2,   //
                 0.0, 0.0, 0.17,  //
                 0.0, 0.1, 0.13});
}

Matrix reconstruct(const Matrix& k) {
  const Dim& rows = k.rows();
  if (rows.kind() != Dim::Kind::Product) throw DimensionError("reconstruct needs pair-valued k, got " + describe(rows));
  return khatri(compose(fst_matrix(rows.left(), rows.right()), k), compose(snd_matrix(rows.left(), rows.right()), k));
}

RiskReport risk_preorder(const Matrix& g, const Matrix& h, const Matrix& f, double tol) {
  if (!same_type(g, h) || !same_type(g, f)) throw DimensionError("risk_preorder: g, h and f must share one type");
  if (!is_sharp(f)) throw DomainError("risk_preorder: reference f must be sharp");
  RiskReport r{true, {}, {}, {}, hadamard(g, f), hadamard(h, f)};
  const auto img = sharp_image(f);
  for (std::size_t a = 0; a < f.num_cols(); ++a) {
    bool col = true;
    for (std::size_t b = 0; b < f.num_rows(); ++b) col = col && r.g_masked.at(b, a) <= r.h_masked.at(b, a) + tol;
    r.column_holds.push_back(col);
    r.g_correct.push_back(g.at(img[a], a));
    r.h_correct.push_back(h.at(img[a], a));
    r.holds = r.holds && col;
  }
  return r;
}

namespace {

// ---------------------------------------------------------------------------
// Trial plumbing

struct Witness {
  std::vector<std::pair<std::string, Matrix>> matrices;
  std::string text;
};

struct Outcome {
  double dev = 0.0;
  Witness witness;
};

struct Trial {
  Rng& rng;
  const TrialConfig& cfg;

  std::size_t axis() { return 1 + below(rng, cfg.max_dim); }
  /// Operand Dim for the plain matrix laws.
  Dim dim() { return random_dim(rng, cfg.max_dim, 2, 2 * cfg.max_dim); }
  /// Dim with at least two elements.
  Dim wide() {
    for (;;) {
      Dim d = dim();
      if (d.size() >= 2) return d;
    }
  }
  /// Carrier for functor-heavy laws.
  Dim small() { return random_dim(rng, std::min<std::size_t>(cfg.max_dim, 3), 1, 4); }
  Matrix cs(const Dim& cols, const Dim& rows) { return random_cs_matrix(rng, cols, rows); }
  Matrix sharp(const Dim& cols, const Dim& rows) { return random_sharp(rng, cols, rows); }
  Probability prob() { return Probability(uniform01(rng)); }
};

using Check = Outcome (*)(Trial&);

// Fixed evidence run once per report. `holds` may veto the status; a fixed
// counterexample joins the deviation and the witness.
struct Evidence {
  bool holds = true;
  std::string note;
  std::optional<Outcome> fixed;
};

using Companion = std::function<Evidence(const TrialConfig&)>;

struct Law {
  Law(std::string n, Check c, bool ef = false, Companion comp = {})
      : name(std::move(n)), check(c), expected_fail(ef), companion(std::move(comp)) {}
  std::string name;
  Check check;
  bool expected_fail;
  Companion companion;
};

double dev_of(const Matrix& a, const Matrix& b) { return max_abs_diff(a, b); }

Outcome outcome(double dev, std::vector<std::pair<std::string, Matrix>> ms) { return {dev, {std::move(ms), {}}}; }

// ---------------------------------------------------------------------------
// Typed matrix laws

// ⟦f • g⟧ = ⟦f⟧·⟦g⟧, and composition agrees with its index-wise definition.
Outcome law_composition(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(b, c), n = t.cs(a, b);
  const Matrix prod = compose(m, n);
  const Matrix kl = from_probfn(kleisli(to_probfn(m), to_probfn(n)), a, c);
  double dev = dev_of(prod, kl);
  for (std::size_t y = 0; y < c.size(); ++y) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      double s = 0.0;
      for (std::size_t z = 0; z < b.size(); ++z) s += m.at(y, z) * n.at(z, x);
      dev = std::max(dev, std::abs(s - prod.at(y, x)));
    }
  }
  return outcome(dev, {{"M", m}, {"N", n}});
}

Outcome law_junc_fusion(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim();
  const Matrix p = t.cs(c, d), m = t.cs(a, c), n = t.cs(b, c);
  return outcome(dev_of(compose(p, junc(m, n)), junc(compose(p, m), compose(p, n))), {{"P", p}, {"M", m}, {"N", n}});
}

// [M|N] = [P|Q] ≡ M = P ∧ N = Q, checked through the injections both ways.
Outcome law_junc_equality(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(a, c), n = t.cs(b, c), k = t.cs(Dim::sum(a, b), c);
  const Matrix j = junc(m, n);
  double dev = dev_of(compose(j, inject_left(a, b)), m);
  dev = std::max(dev, dev_of(compose(j, inject_right(a, b)), n));
  dev = std::max(dev, dev_of(junc(compose(k, inject_left(a, b)), compose(k, inject_right(a, b))), k));
  return outcome(dev, {{"M", m}, {"N", n}, {"K", k}});
}

Outcome law_junc_absorption(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim(), e = t.dim();
  const Matrix m = t.cs(c, e), n = t.cs(d, e), p = t.cs(a, c), q = t.cs(b, d);
  return outcome(dev_of(compose(junc(m, n), oplus(p, q)), junc(compose(m, p), compose(n, q))),
                 {{"M", m}, {"N", n}, {"P", p}, {"Q", q}});
}

Outcome law_split_converse(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(c, a), n = t.cs(c, b);
  return outcome(dev_of(split(m, n), converse(junc(converse(m), converse(n)))), {{"M", m}, {"N", n}});
}

Outcome law_divide_conquer(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim();
  const Matrix m = t.cs(a, d), n = t.cs(b, d), p = t.cs(c, a), q = t.cs(c, b);
  return outcome(dev_of(compose(junc(m, n), split(p, q)), add(compose(m, p), compose(n, q))),
                 {{"M", m}, {"N", n}, {"P", p}, {"Q", q}});
}

// k = for b i ≡ k·in = [i|b]·(id ⊕ k), with k the matrix fixpoint; each
// column is also compared with the monadic loop.
Outcome law_for_universal(Trial& t) {
  const Dim s = Dim::range(t.axis());
  const std::size_t n = 1 + below(t.rng, 8);
  const Matrix body = t.cs(s, s), init = t.cs(Dim::unit(), s);
  const Matrix k = matrix_cata_fixpoint(body, init, n, s);
  const Dim inputs = Dim::range(n + 1), prev = Dim::range(n);
  const Matrix incl = Matrix::from_function(prev, inputs, [](const Value& v) { return v; });
  const Matrix in = initial_in_matrix(Functor::for_loop(), prev, inputs);
  double dev = dev_of(compose(k, in), compose(junc(init, body), oplus(Matrix::identity(Dim::unit()), compose(k, incl))));
  const ProbFn b = to_probfn(body);
  const Dist i = to_probfn(init)(Value::unit());
  for (std::size_t j = 0; j <= n; ++j) {
    const Matrix col = Matrix::column(s, for_loop(b, i, j));
    for (std::size_t r = 0; r < s.size(); ++r) dev = std::max(dev, std::abs(col.at(r, 0) - k.at(r, j)));
  }
  return outcome(dev, {{"body", body}, {"init", init}, {"k", k}});
}

Outcome law_khatri_def(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(a, b), n = t.cs(a, c);
  const Matrix kr = khatri(m, n);
  double dev = 0.0;
  for (const Value& x : a.elements()) {
    for (const Value& y : b.elements()) {
      for (const Value& z : c.elements()) {
        dev = std::max(dev, std::abs(kr.at(Value::pair(y, z), x) - m.at(y, x) * n.at(z, x)));
      }
    }
  }
  return outcome(dev, {{"M", m}, {"N", n}});
}

Outcome law_kron_def(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), x = t.dim(), y = t.dim();
  const Matrix m = t.cs(b, y), n = t.cs(a, x);
  const Matrix kr = kron(m, n);
  double dev = 0.0;
  for (const Value& vb : b.elements()) {
    for (const Value& va : a.elements()) {
      for (const Value& vy : y.elements()) {
        for (const Value& vx : x.elements()) {
          dev = std::max(dev, std::abs(kr.at(Value::pair(vy, vx), Value::pair(vb, va)) - m.at(vy, vb) * n.at(vx, va)));
        }
      }
    }
  }
  return outcome(dev, {{"M", m}, {"N", n}});
}

Outcome law_vec_khatri_kron(Trial& t) {
  const Dim b = t.dim(), c = t.dim();
  const Matrix u = t.cs(Dim::unit(), b), v = t.cs(Dim::unit(), c);
  return outcome(dev_of(relabel(kron(u, v), Dim::unit(), Dim::product(b, c)), khatri(u, v)), {{"u", u}, {"v", v}});
}

Outcome law_exchange(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim();
  const Matrix m = t.cs(a, b), n = t.cs(d, b), p = t.cs(a, c), q = t.cs(d, c);
  return outcome(dev_of(khatri(junc(m, n), junc(p, q)), junc(khatri(m, p), khatri(n, q))),
                 {{"M", m}, {"N", n}, {"P", p}, {"Q", q}});
}

Outcome law_cancellation(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(a, b), n = t.cs(a, c);
  const Matrix kr = khatri(m, n);
  return outcome(std::max(dev_of(compose(fst_matrix(b, c), kr), m), dev_of(compose(snd_matrix(b, c), kr), n)),
                 {{"M", m}, {"N", n}});
}

// k △ h = f △ g ≡ k = f ∧ h = g: the pair is recovered from its product and
// the recovered pair rebuilds the same product.
Outcome law_pairwise_equality(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix m = t.cs(a, b), n = t.cs(a, c);
  const Matrix kr = khatri(m, n);
  const Matrix m2 = compose(fst_matrix(b, c), kr), n2 = compose(snd_matrix(b, c), kr);
  const double dev = std::max({dev_of(m2, m), dev_of(n2, n), dev_of(khatri(m2, n2), kr)});
  return outcome(dev, {{"M", m}, {"N", n}});
}

// Reconstruction k = (fst·k) △ (snd·k) on arbitrary CS k; expected to fail.
Outcome law_weak_product(Trial& t) {
  const Dim a = t.dim(), b = t.wide(), c = t.wide();
  const Matrix k = t.cs(a, Dim::product(b, c));
  const Matrix r = reconstruct(k);
  return outcome(dev_of(r, k), {{"k", k}, {"reconstruction", r}});
}

Outcome law_reflection(Trial& t) {
  const Dim b = t.dim(), c = t.dim();
  return outcome(dev_of(khatri(fst_matrix(b, c), snd_matrix(b, c)), Matrix::identity(Dim::product(b, c))), {});
}

// y(f·N)x = Σ{z : y = f z} zNx and y(g°·N·f)x = (g y) N (f x) for sharp f, g.
Outcome law_index_rules(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), x = t.dim(), y = t.dim();
  const Matrix f = t.sharp(b, c), n = t.cs(a, b);
  const auto fi = sharp_image(f);
  const Matrix fn = compose(f, n);
  double dev = 0.0;
  for (std::size_t r = 0; r < c.size(); ++r) {
    for (std::size_t col = 0; col < a.size(); ++col) {
      double s = 0.0;
      for (std::size_t z = 0; z < b.size(); ++z) {
        if (fi[z] == r) s += n.at(z, col);
      }
      dev = std::max(dev, std::abs(fn.at(r, col) - s));
    }
  }
  const Matrix g = t.sharp(y, b), h = t.sharp(x, a);
  const auto gi = sharp_image(g), hi = sharp_image(h);
  const Matrix sandwich = compose(converse(g), compose(n, h));
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (std::size_t col = 0; col < x.size(); ++col) {
      dev = std::max(dev, std::abs(sandwich.at(r, col) - n.at(gi[r], hi[col])));
    }
  }
  return outcome(dev, {{"f", f}, {"N", n}, {"g", g}, {"h", h}});
}

// k : A → B×C with one sharp projection; the other projection is random.
Matrix half_sharp(Trial& t, const Dim& a, const Dim& b, const Dim& c, bool first_sharp) {
  const Dim& pinned = first_sharp ? b : c;
  const Dim& free = first_sharp ? c : b;
  const Matrix target = t.sharp(a, pinned);
  const auto img = sharp_image(target);
  const Matrix spread = t.cs(a, free);
  std::vector<double> e(b.size() * c.size() * a.size(), 0.0);
  for (std::size_t col = 0; col < a.size(); ++col) {
    for (std::size_t i = 0; i < free.size(); ++i) {
      const std::size_t bi = first_sharp ? img[col] : i;
      const std::size_t ci = first_sharp ? i : img[col];
      e[(bi * c.size() + ci) * a.size() + col] = spread.at(i, col);
    }
  }
  return Matrix(a, Dim::product(b, c), std::move(e));
}

Outcome law_sharp_projection_support(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const bool first = below(t.rng, 2) == 0;
  const Matrix k = half_sharp(t, a, b, c, first);
  const Matrix proj = first ? compose(fst_matrix(b, c), k) : compose(snd_matrix(b, c), k);
  const auto f = sharp_image(proj);
  double dev = 0.0;
  for (std::size_t col = 0; col < a.size(); ++col) {
    double on = 0.0, off = 0.0;
    for (std::size_t bi = 0; bi < b.size(); ++bi) {
      for (std::size_t ci = 0; ci < c.size(); ++ci) {
        const double v = k.at(bi * c.size() + ci, col);
        ((first ? bi : ci) == f[col] ? on : off) += v;
      }
    }
    dev = std::max({dev, std::abs(on - 1.0), off});
  }
  return outcome(dev, {{"k", k}});
}

Outcome law_sharp_reconstruction(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Matrix k = half_sharp(t, a, b, c, below(t.rng, 2) == 0);
  return outcome(dev_of(reconstruct(k), k), {{"k", k}});
}

Outcome law_choice_fusion(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim();
  const Probability p = t.prob();
  const Matrix m = t.cs(b, c), n = t.cs(b, c), h = t.cs(a, b), k = t.cs(c, d);
  const Matrix ch = mat_choice(p, m, n);
  double dev = dev_of(compose(ch, h), mat_choice(p, compose(m, h), compose(n, h)));
  dev = std::max(dev, dev_of(compose(k, ch), mat_choice(p, compose(k, m), compose(k, n))));
  return outcome(dev, {{"M", m}, {"N", n}, {"h", h}, {"k", k}});
}

Outcome law_choice_exchange(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim();
  const Probability p = t.prob();
  const Matrix f = t.cs(a, c), g = t.cs(b, c), h = t.cs(a, c), k = t.cs(b, c);
  return outcome(dev_of(mat_choice(p, junc(f, g), junc(h, k)), junc(mat_choice(p, f, h), mat_choice(p, g, k))),
                 {{"f", f}, {"g", g}, {"h", h}, {"k", k}});
}

// for f (a p◊ b) = (for f a) p◊ (for f b).
Outcome law_base_choice(Trial& t) {
  const Dim s = Dim::range(1 + t.axis());
  const Matrix body = t.cs(s, s);
  const Value a = s.element(below(t.rng, s.size())), b = s.element(below(t.rng, s.size()));
  const Probability p = t.prob();
  const std::size_t n = below(t.rng, 7);
  const auto [lhs, rhs] = base_choice_split(to_probfn(body), a, b, p, n);
  Outcome o = outcome(tv_distance(lhs, rhs), {{"f", body}});
  o.witness.text = "a=" + render(a) + " b=" + render(b) + " p=" + format_number(p.value()) + " n=" + std::to_string(n);
  return o;
}

// ---------------------------------------------------------------------------
// Recursion-scheme laws

/// All lists over `alphabet` of length ≤ len, shortest first.
Dim list_carrier(const Dim& alphabet, std::size_t len) {
  std::vector<Value> all{Value::list({})};
  std::size_t start = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    const std::size_t end = all.size();
    for (std::size_t i = start; i < end; ++i) {
      for (const Value& h : alphabet.elements()) all.push_back(Value::cons(h, all[i]));
    }
    start = end;
  }
  return Dim::enumeration(std::move(all));
}

/// Initial-algebra carrier truncated at size `len`.
Dim truncated_carrier(const Functor& f, std::size_t len) {
  return f.kind() == Functor::Kind::ForLoop ? Dim::range(len + 1) : list_carrier(f.alphabet(), len);
}

Functor recursive_functor(Trial& t) {
  if (below(t.rng, 2) == 0) return Functor::for_loop();
  return Functor::list(Dim::range(1 + below(t.rng, 2)));
}

std::size_t max_len(const Functor& f) { return f.kind() == Functor::Kind::ForLoop ? 6 : 3; }

Value random_input(Trial& t, const Functor& f) {
  const std::size_t len = below(t.rng, max_len(f) + 1);
  if (f.kind() == Functor::Kind::ForLoop) return Value::integer(static_cast<std::int64_t>(len));
  std::vector<Value> items;
  for (std::size_t i = 0; i < len; ++i) items.push_back(f.alphabet().element(below(t.rng, f.alphabet().size())));
  return Value::list(std::move(items));
}

Algebra random_algebra(Trial& t, const Functor& f, const Dim& carrier, Matrix* out = nullptr) {
  Matrix m = t.cs(f.apply(carrier), carrier);
  if (out) *out = m;
  return {f, to_probfn(m)};
}

// k = ⦇f⦈ ≡ k·in = f·F k over truncated carriers, plus ⦇in⦈ = id.
Outcome law_cata_universal(Trial& t) {
  const Functor f = recursive_functor(t);
  const Dim s = t.small();
  Matrix alg_m(Dim::unit(), Dim::unit());
  const Algebra alg = random_algebra(t, f, s, &alg_m);
  const std::size_t len = 1 + below(t.rng, max_len(f));
  const Dim whole = truncated_carrier(f, len), sub = truncated_carrier(f, len - 1);
  const ProbFn k = cata(alg);
  const Matrix kw = from_probfn(k, whole, s), ks = from_probfn(k, sub, s);
  double dev = dev_of(compose(kw, initial_in_matrix(f, sub, whole)), compose(alg_m, f.apply(ks)));
  const Algebra in_alg{f, ProbFn::sharp([f](const Value& v) { return f.in(v); })};
  dev = std::max(dev, dev_of(from_probfn(cata(in_alg), whole, whole), Matrix::identity(whole)));
  Outcome o = outcome(dev, {{"algebra", alg_m}});
  o.witness.text = "functor=" + describe(f) + " length=" + std::to_string(len);
  return o;
}

Outcome law_unzip_naturality(Trial& t) {
  const Functor f = random_functor(t.rng, 2);
  const Dim b = t.small(), b2 = t.small(), c = t.small(), c2 = t.small();
  const Matrix m = t.cs(b, b2), n = t.cs(c, c2);
  Outcome o = outcome(dev_of(compose(kron(f.apply(m), f.apply(n)), unzip(f, b, c)),
                             compose(unzip(f, b2, c2), f.apply(kron(m, n)))),
                      {{"M", m}, {"N", n}});
  o.witness.text = "functor=" + describe(f);
  return o;
}

Outcome law_unzip_corollary(Trial& t) {
  const Functor f = random_functor(t.rng, 2);
  const Dim a = t.small(), b = t.small(), c = t.small();
  const Matrix m = t.cs(a, b), n = t.cs(a, c);
  Outcome o = outcome(dev_of(compose(unzip(f, b, c), f.apply(khatri(m, n))), khatri(f.apply(m), f.apply(n))),
                      {{"M", m}, {"N", n}});
  o.witness.text = "functor=" + describe(f);
  return o;
}

// (M·N) △ (P·Q) = (M ⊗ P)·(N △ Q).
Outcome law_pairing_absorption(Trial& t) {
  const Dim a = t.dim(), b = t.dim(), c = t.dim(), d = t.dim(), e = t.dim();
  const Matrix n = t.cs(a, b), q = t.cs(a, c), m = t.cs(b, d), p = t.cs(c, e);
  return outcome(dev_of(khatri(compose(m, n), compose(p, q)), compose(kron(m, p), khatri(n, q))),
                 {{"M", m}, {"N", n}, {"P", p}, {"Q", q}});
}

Outcome khatri_fusion(Trial& t, bool sharp_h) {
  const Dim a = t.dim(), b = sharp_h ? t.dim() : t.wide(), c = sharp_h ? t.dim() : t.wide();
  const Dim d = sharp_h ? t.dim() : t.wide();
  const Matrix m = t.cs(b, c), n = t.cs(b, d), h = sharp_h ? t.sharp(a, b) : t.cs(a, b);
  return outcome(dev_of(compose(khatri(m, n), h), khatri(compose(m, h), compose(n, h))),
                 {{"M", m}, {"N", n}, {"h", h}});
}

Outcome law_khatri_fusion_sharp(Trial& t) { return khatri_fusion(t, true); }
Outcome law_khatri_fusion_general(Trial& t) { return khatri_fusion(t, false); }

// unzip_{GH} = unzip_G · G unzip_H.
Outcome law_unzip_comp(Trial& t) {
  const Functor g = random_functor(t.rng, 1), h = random_functor(t.rng, 1);
  const Dim b = t.small(), c = t.small();
  Outcome o = outcome(dev_of(unzip(Functor::comp(g, h), b, c),
                             compose(unzip(g, h.apply(b), h.apply(c)), g.apply(unzip(h, b, c)))),
                      {});
  o.witness.text = "G=" + describe(g) + " H=" + describe(h);
  return o;
}

// Injection facts for unzip over a sum of functors, and the junc/oplus
// Khatri-Rao identity for arbitrary M, N, P, Q.
Outcome law_unzip_sum(Trial& t) {
  const Functor g = random_functor(t.rng, 1), h = random_functor(t.rng, 1);
  const Functor f = Functor::sum(g, h);
  const Dim b = t.small(), c = t.small();
  const Dim bc = Dim::product(b, c);
  const Matrix uf = unzip(f, b, c);
  const Matrix i1 = kron(inject_left(g.apply(b), h.apply(b)), inject_left(g.apply(c), h.apply(c)));
  const Matrix i2 = kron(inject_right(g.apply(b), h.apply(b)), inject_right(g.apply(c), h.apply(c)));
  double dev = dev_of(compose(uf, inject_left(g.apply(bc), h.apply(bc))), compose(i1, unzip(g, b, c)));
  dev = std::max(dev, dev_of(compose(uf, inject_right(g.apply(bc), h.apply(bc))), compose(i2, unzip(h, b, c))));

  const Dim a = t.dim(), bb = t.dim(), cc = t.dim(), d = t.dim(), e = t.dim(), ff = t.dim();
  const Matrix m = t.cs(a, bb), n = t.cs(a, cc), p = t.cs(d, e), q = t.cs(d, ff);
  const Matrix j1 = kron(inject_left(bb, e), inject_left(cc, ff));
  const Matrix j2 = kron(inject_right(bb, e), inject_right(cc, ff));
  dev = std::max(dev, dev_of(junc(compose(j1, khatri(m, n)), compose(j2, khatri(p, q))),
                             khatri(oplus(m, p), oplus(n, q))));
  Outcome o = outcome(dev, {{"M", m}, {"N", n}, {"P", p}, {"Q", q}});
  o.witness.text = "G=" + describe(g) + " H=" + describe(h);
  return o;
}

// ⦇f⦈ △ ⦇g⦈ = ⦇(f ⊗ g)·unzip_F⦈ for arbitrary probabilistic algebras.
Outcome law_banana_split(Trial& t) {
  const Functor f = recursive_functor(t);
  const Dim b = t.small(), c = t.small();
  Matrix fm(Dim::unit(), Dim::unit()), gm(Dim::unit(), Dim::unit());
  const Algebra fa = random_algebra(t, f, b, &fm), ga = random_algebra(t, f, c, &gm);
  const Algebra both = banana_split(fa, ga);
  const Dim fbc = f.apply(Dim::product(b, c));
  double dev = dev_of(from_probfn(both.action, fbc, Dim::product(b, c)), banana_split_matrix(f, fm, gm));
  std::string inputs;
  for (int i = 0; i < 4; ++i) {
    const Value x = random_input(t, f);
    inputs += render(x) + " ";
    dev = std::max(dev, tv_distance(pair(cata_eval(fa, x), cata_eval(ga, x)), cata_eval(both, x)));
  }
  Outcome o = outcome(dev, {{"f", fm}, {"g", gm}});
  o.witness.text = "functor=" + describe(f) + " inputs=" + inputs;
  return o;
}

// f·in = h·F(f△g), g·in = k·F(f△g) with g sharp: the tupled fold matches
// the mutually recursive pair.
Outcome law_mutual_recursion(Trial& t) {
  const Functor f = recursive_functor(t);
  const Dim b = t.small(), c = t.small();
  const Dim bc = Dim::product(b, c);
  const Matrix hm = t.cs(f.apply(bc), b);
  const Matrix km = compose(t.sharp(f.apply(c), c), f.apply(snd_matrix(b, c)));
  const Algebra h{f, to_probfn(hm)}, k{f, to_probfn(km)};
  std::vector<Value> inputs;
  for (int i = 0; i < 4; ++i) inputs.push_back(random_input(t, f));
  const auto res = tupled_from_mutual(h, k, inputs);
  const double dev = res.report.holds() ? res.report.max_tv : std::numeric_limits<double>::infinity();
  Outcome o = outcome(dev, {{"h", hm}, {"k", km}});
  o.witness.text = "functor=" + describe(f) + " report=" + res.report.verdict();
  return o;
}

Outcome law_fold_fusion(Trial& t) {
  const Probability p = t.prob(), q = t.prob();
  const Dim alphabet = below(t.rng, 2) == 0 ? Dim::enumeration({Value::text("a")})
                                            : Dim::enumeration({Value::text("a"), Value::text("b")});
  std::vector<Value> sample_strings{Value::text("")};
  for (std::size_t i = 0; i < sample_strings.size() && sample_strings.size() < 15; ++i) {
    for (const Value& h : alphabet.elements()) {
      const Value s = Value::cons(h, sample_strings[i]);
      if (s.as_text().size() <= 3) sample_strings.push_back(s);
    }
  }
  std::vector<Value> inputs;
  for (int i = 0; i < 3; ++i) {
    std::string s;
    const std::size_t len = below(t.rng, 7);
    for (std::size_t j = 0; j < len; ++j) s += alphabet.element(below(t.rng, alphabet.size())).as_text();
    inputs.push_back(Value::text(s));
  }
  const auto rep = fold_fusion_check(cata(cases::fcount_algebra(q, alphabet)), cases::fcat_algebra(p, alphabet),
                                     cases::consolidated_count_algebra(p, q, alphabet),
                                     Dim::enumeration(sample_strings), inputs, t.cfg.tol);
  Outcome o{std::max(rep.side_condition_tv, rep.fold_tv), {}};
  o.witness.text = "p=" + format_number(p.value()) + " q=" + format_number(q.value());
  return o;
}

// ---------------------------------------------------------------------------
// Fixed evidence

Evidence weak_product_fixed(const TrialConfig&) {
  const Matrix k = weak_product_witness();
  const Matrix r = reconstruct(k);
  const double dev = dev_of(r, k);
  char buf[96];
  std::snprintf(buf, sizeof buf, "fixed 3x(2x3) matrix: reconstruction deviates by %.6g", dev);
  return {dev >= 0.2, buf, outcome(dev, {{"k (fixed)", k}, {"reconstruction", r}})};
}

Evidence fib_not_tupled(const TrialConfig&) {
  const auto [h, k] = cases::fib_algebras(Probability(0.1));
  std::vector<Value> inputs;
  for (int n = 0; n <= 6; ++n) inputs.push_back(Value::integer(n));
  const auto res = tupled_from_mutual(h, k, inputs);
  char buf[160];
  std::snprintf(buf, sizeof buf, "fib at p=0.1, n<=6: %s; TV %.6g", res.report.verdict().c_str(),
                res.report.max_tv);
  return {!res.report.holds() && res.report.max_tv >= 0.01, buf, {}};
}

const std::vector<Law>& catalogue() {
  static const std::vector<Law> laws = {
      {"composition", law_composition},
      {"junc_fusion", law_junc_fusion},
      {"junc_equality", law_junc_equality},
      {"junc_absorption", law_junc_absorption},
      {"split_converse", law_split_converse},
      {"for_universal", law_for_universal},
      {"divide_conquer", law_divide_conquer},
      {"khatri_def", law_khatri_def},
      {"kron_def", law_kron_def},
      {"vec_khatri_kron", law_vec_khatri_kron},
      {"exchange", law_exchange},
      {"pairwise_equality", law_pairwise_equality},
      {"cancellation", law_cancellation},
      {"weak_product", law_weak_product, true, weak_product_fixed},
      {"reflection", law_reflection},
      {"index_rules", law_index_rules},
      {"sharp_projection_support", law_sharp_projection_support},
      {"sharp_reconstruction", law_sharp_reconstruction},
      {"choice_fusion", law_choice_fusion},
      {"choice_exchange", law_choice_exchange},
      {"base_choice", law_base_choice},
      {"fold_fusion", law_fold_fusion},
      {"cata_universal", law_cata_universal},
      {"unzip_naturality", law_unzip_naturality},
      {"unzip_corollary", law_unzip_corollary},
      {"pairing_absorption", law_pairing_absorption},
      {"khatri_fusion_sharp", law_khatri_fusion_sharp},
      {"khatri_fusion_general", law_khatri_fusion_general, true},
      {"unzip_comp", law_unzip_comp},
      {"unzip_sum", law_unzip_sum},
      {"banana_split", law_banana_split},
      {"mutual_recursion", law_mutual_recursion, false, fib_not_tupled},
  };
  return laws;
}

std::string dump_witness(const Witness& w) {
  std::ostringstream os;
  if (!w.text.empty()) os << "# " << w.text << "\n";
  for (const auto& [name, m] : w.matrices) {
    os << "# " << name << " : " << describe(m.cols()) << " -> " << describe(m.rows()) << "\n";
    write_csv(os, m, true);
  }
  return os.str();
}

LawReport run(const Law& law, const TrialConfig& cfg) {
  std::vector<Outcome> outcomes(cfg.trials);
  std::vector<std::string> errors(cfg.trials);
  const auto n = static_cast<std::int64_t>(cfg.trials);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      Rng rng = trial_rng(cfg.seed, law.name, static_cast<std::size_t>(i));
      Trial t{rng, cfg};
      outcomes[i] = law.check(t);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  LawReport r;
  r.law = law.name;
  r.trials = cfg.trials;
  r.tol = cfg.tol;
  std::optional<std::size_t> worst;
  bool raised = false;
  for (std::size_t i = 0; i < cfg.trials && !raised; ++i) {
    if (!errors[i].empty()) {
      raised = true;
      r.max_dev = std::numeric_limits<double>::infinity();
      r.witness = "# trial " + std::to_string(i) + " raised: " + errors[i] + "\n";
      break;
    }
    // NaN deviations count as failures.
    const double d = std::isnan(outcomes[i].dev) ? std::numeric_limits<double>::infinity() : outcomes[i].dev;
    if (!worst || d > r.max_dev) {
      r.max_dev = d;
      worst = i;
    }
  }
  if (!raised && r.max_dev > cfg.tol) {
    r.witness = "# trial " + std::to_string(*worst) + "\n" + dump_witness(outcomes[*worst].witness);
  }

  const bool violated = r.max_dev > cfg.tol;
  bool ok = !raised && (law.expected_fail ? violated : !violated);
  if (law.companion) {
    Evidence ev = law.companion(cfg);
    r.note = std::move(ev.note);
    ok = ok && ev.holds;
    if (ev.fixed) {
      r.max_dev = std::max(r.max_dev, ev.fixed->dev);
      r.witness += "# fixed counterexample\n" + dump_witness(ev.fixed->witness);
    }
  }
  r.status = ok ? (law.expected_fail ? Status::ExpectedFail : Status::Pass) : Status::Fail;
  return r;
}

}  // namespace

const std::vector<std::string>& law_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& l : catalogue()) v.push_back(l.name);
    return v;
  }();
  return names;
}

LawReport check_law(std::string_view name, const TrialConfig& cfg) {
  cfg.validate();
  const auto& laws = catalogue();
  auto it = std::find_if(laws.begin(), laws.end(), [name](const Law& l) { return l.name == name; });
  if (it == laws.end()) throw DomainError("unknown law: " + std::string(name));
  return run(*it, cfg);
}

std::vector<LawReport> check_all(const TrialConfig& cfg) {
  cfg.validate();
  std::vector<LawReport> out;
  for (const auto& l : catalogue()) out.push_back(run(l, cfg));
  return out;
}

std::string serialize(const LawReport& r) {
  char dev[32];
  std::snprintf(dev, sizeof dev, "%.3e", r.max_dev);
  return r.law + "\t" + std::string(status_name(r.status)) + "\t" + dev + "\t" + std::to_string(r.trials);
}

void write_reports(std::ostream& os, const std::vector<LawReport>& reports, bool verbose) {
  for (const auto& r : reports) {
    os << serialize(r) << "\n";
    if (!verbose) continue;
    if (!r.note.empty()) os << "# " << r.note << "\n";
    os << r.witness;
  }
}

}  // namespace faultcalc::laws
