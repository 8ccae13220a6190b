#include "faultcalc/dist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "faultcalc/errors.hpp"

namespace faultcalc {

Probability::Probability(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability outside [0,1]: " + std::to_string(p));
  }
}

namespace {

void check_proper(const Dist::Support& s) {
  double total = 0.0;
  for (const auto& [v, m] : s) {
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw DomainError("negative or non-finite mass at " + render(v));
    }
    total += m;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw DomainError("distribution mass " + std::to_string(total) + " is not 1");
  }
}

Dist::Support merge(std::span<const Dist::Entry> entries) {
  Dist::Support s;
  for (const auto& [v, m] : entries) s[v] += m;
  return s;
}

}  // namespace

Dist make_pruned(Dist::Support s) {
  std::erase_if(s, [](const auto& e) { return e.second < kPruneMass; });
  return Dist(Dist::Unchecked{}, std::move(s));
}

Dist::Dist(std::span<const Entry> entries) : support_(merge(entries)) {
  check_proper(support_);
}

Dist::Dist(std::initializer_list<Entry> entries)
    : Dist(std::span<const Entry>(entries.begin(), entries.size())) {}

double Dist::mass(const Value& v) const {
  auto it = support_.find(v);
  return it == support_.end() ? 0.0 : it->second;
}

double Dist::total() const {
  double t = 0.0;
  for (const auto& e : support_) t += e.second;
  return t;
}

bool Dist::is_dirac() const {
  return support_.size() == 1 && std::abs(support_.begin()->second - 1.0) <= kMassTolerance;
}

const Value& Dist::dirac_value() const {
  if (!is_dirac()) throw DomainError("distribution is not Dirac:\n" + render(*this));
  return support_.begin()->first;
}

std::vector<Dist::Entry> Dist::by_mass() const {
  std::vector<Entry> out(support_.begin(), support_.end());
  // Stable sort keeps ascending value order among equal masses.
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& a, const Entry& b) { return a.second > b.second; });
  return out;
}

Dist Dist::normalize(std::span<const Entry> entries) {
  Support s = merge(entries);
  double total = 0.0;
  for (const auto& [v, m] : s) {
    if (m < 0.0) throw DomainError("negative mass at " + render(v));
    total += m;
  }
  if (total <= 0.0) throw DomainError("cannot normalize zero mass");
  for (auto& e : s) e.second /= total;
  return Dist(Unchecked{}, std::move(s));
}

Dist dirac(Value v) { return Dist{{std::move(v), 1.0}}; }

Dist choice(Probability p, const Dist& d, const Dist& e) {
  Dist::Support s;
  for (const auto& [v, m] : d.support()) s[v] += p.value() * m;
  for (const auto& [v, m] : e.support()) s[v] += p.complement() * m;
  return make_pruned(std::move(s));
}

Dist bind(const Dist& d, const std::function<Dist(const Value&)>& k) {
  Dist::Support s;
  for (const auto& [b, m] : d.support()) {
    const Dist kb = k(b);
    for (const auto& [c, w] : kb.support()) s[c] += m * w;
  }
  return make_pruned(std::move(s));
}

Dist fmap(const Dist& d, const std::function<Value(const Value&)>& f) {
  Dist::Support s;
  for (const auto& [b, m] : d.support()) s[f(b)] += m;
  return make_pruned(std::move(s));
}

Dist pair(const Dist& d, const Dist& e) {
  Dist::Support s;
  for (const auto& [b, m] : d.support()) {
    for (const auto& [c, w] : e.support()) s[Value::pair(b, c)] += m * w;
  }
  return make_pruned(std::move(s));
}

Dist first_marginal(const Dist& d) {
  return fmap(d, [](const Value& v) { return v.first(); });
}

Dist second_marginal(const Dist& d) {
  return fmap(d, [](const Value& v) { return v.second(); });
}

double tv_distance(const Dist& d, const Dist& e) {
  double sum = 0.0;
  auto i = d.support().begin();
  auto j = e.support().begin();
  while (i != d.support().end() || j != e.support().end()) {
    if (j == e.support().end() || (i != d.support().end() && i->first < j->first)) {
      sum += i->second;
      ++i;
    } else if (i == d.support().end() || j->first < i->first) {
      sum += j->second;
      ++j;
    } else {
      sum += std::abs(i->second - j->second);
      ++i;
      ++j;
    }
  }
  return 0.5 * sum;
}

std::string format_percent(double mass) {
  // Nudge by ~1e-12 of mass so exact ties such as 4.75 survive binary
  // representation error before rounding away from zero.
  const double tenths = mass * 1000.0;
  const double rounded = std::round(tenths + std::copysign(1e-9, tenths));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", rounded / 10.0);
  return buf;
}

std::string render(const Dist& d) {
  std::string out;
  for (const auto& [v, m] : d.by_mass()) {
    out += render(v);
    out += '\t';
    out += format_percent(m);
    out += '\n';
  }
  return out;
}

ProbFn ProbFn::sharp(std::function<Value(const Value&)> f) {
  return ProbFn([f = std::move(f)](const Value& a) { return dirac(f(a)); });
}

ProbFn ProbFn::identity() {
  return ProbFn([](const Value& a) { return dirac(a); });
}

ProbFn kleisli(const ProbFn& f, const ProbFn& g) {
  return ProbFn([f, g](const Value& a) { return bind(g(a), [&f](const Value& b) { return f(b); }); });
}

ProbFn choice(Probability p, const ProbFn& f, const ProbFn& g) {
  return ProbFn([p, f, g](const Value& a) { return choice(p, f(a), g(a)); });
}

ProbFn split(const ProbFn& f, const ProbFn& g) {
  return ProbFn([f, g](const Value& a) { return pair(f(a), g(a)); });
}

bool is_sharp(const ProbFn& f, std::span<const Value> inputs) {
  return std::all_of(inputs.begin(), inputs.end(), [&f](const Value& a) { return f(a).is_dirac(); });
}

}  // namespace faultcalc
