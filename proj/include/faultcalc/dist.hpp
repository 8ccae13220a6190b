#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "faultcalc/value.hpp"

namespace faultcalc {

/// Masses below this are dropped after bind/choice/pair.
inline constexpr double kPruneMass = 1e-15;
/// Allowed deviation of total mass from 1 for a proper distribution.
inline constexpr double kMassTolerance = 1e-9;

/// A real number in [0,1].
class Probability {
 public:
  /// Throws DomainError outside [0,1] (or NaN).
  explicit Probability(double p);
  double value() const { return p_; }
  double complement() const { return 1.0 - p_; }

 private:
  double p_;
};

/// Finite-support probability distribution. Immutable; iteration follows the
/// total order on Value. Construction rejects negative masses and total mass
/// away from 1 by more than kMassTolerance; there is no silent renormalization.
class Dist {
 public:
  using Entry = std::pair<Value, double>;
  using Support = std::map<Value, double>;

  /// Duplicate values are merged by adding their masses.
  explicit Dist(std::span<const Entry> entries);
  Dist(std::initializer_list<Entry> entries);

  const Support& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  double mass(const Value& v) const;
  double total() const;
  bool is_dirac() const;
  /// The single support value of a Dirac distribution; throws otherwise.
  const Value& dirac_value() const;

  /// Entries ordered by descending mass, ties by ascending value.
  std::vector<Entry> by_mass() const;

  /// Test scaffolding only: rescales an arbitrary nonnegative table to mass 1.
  static Dist normalize(std::span<const Entry> entries);

 private:
  struct Unchecked {};
  Dist(Unchecked, Support s) : support_(std::move(s)) {}
  friend Dist make_pruned(Support s);

  Support support_;
};

Dist dirac(Value v);
/// p·d + (1−p)·e, pointwise.
Dist choice(Probability p, const Dist& d, const Dist& e);
Dist bind(const Dist& d, const std::function<Dist(const Value&)>& k);
Dist fmap(const Dist& d, const std::function<Value(const Value&)>& f);
/// Independent product: mass((b,c)) = d(b)·e(c).
Dist pair(const Dist& d, const Dist& e);
Dist first_marginal(const Dist& d);
Dist second_marginal(const Dist& d);
/// Half the L1 distance over the union of supports.
double tv_distance(const Dist& d, const Dist& e);

/// One line per support entry, `value<TAB>pp.p%`, descending mass.
std::string render(const Dist& d);
/// Percentage to one decimal, rounded half away from zero.
std::string format_percent(double mass);

/// Probabilistic function: value → Dist.
class ProbFn {
 public:
  using Fn = std::function<Dist(const Value&)>;

  ProbFn() = default;
  explicit ProbFn(Fn fn) : fn_(std::move(fn)) {}

  /// Lifts an ordinary function to its Dirac-valued (sharp) counterpart.
  static ProbFn sharp(std::function<Value(const Value&)> f);
  static ProbFn identity();

  Dist operator()(const Value& a) const { return fn_(a); }
  explicit operator bool() const { return static_cast<bool>(fn_); }

 private:
  Fn fn_;
};

/// Kleisli composition: (f • g) a = do { b <- g a; f b }.
ProbFn kleisli(const ProbFn& f, const ProbFn& g);
/// Pointwise choice between two probabilistic functions.
ProbFn choice(Probability p, const ProbFn& f, const ProbFn& g);
/// (f △ g) a = pair(f a, g a).
ProbFn split(const ProbFn& f, const ProbFn& g);
/// True iff f yields a Dirac distribution on every listed input.
bool is_sharp(const ProbFn& f, std::span<const Value> inputs);

}  // namespace faultcalc
