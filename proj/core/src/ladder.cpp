#include "trisat/ladder.hpp"

#include <algorithm>

#include "trisat/error.hpp"
#include "trisat/root_system.hpp"
#include "trisat/weil.hpp"

namespace trisat {

HyperbolicTriple validate_triple(int a, int b, int c) { return HyperbolicTriple::make(a, b, c); }

const std::array<HyperbolicTriple, 6>& excluded_triples() {
  static const std::array<HyperbolicTriple, 6> s{
      HyperbolicTriple::make(2, 4, 6),  HyperbolicTriple::make(2, 6, 6),
      HyperbolicTriple::make(2, 6, 10), HyperbolicTriple::make(3, 4, 4),
      HyperbolicTriple::make(3, 6, 6),  HyperbolicTriple::make(4, 6, 12)};
  return s;
}

bool in_excluded_set(int a, int b, int c) noexcept {
  switch (a) {
    case 2: return (b == 4 && c == 6) || (b == 6 && (c == 6 || c == 10));
    case 3: return (b == 4 && c == 4) || (b == 6 && c == 6);
    case 4: return b == 6 && c == 12;
    default: return false;
  }
}

std::array<HyperbolicTriple, 3> minimal_triples() {
  return {HyperbolicTriple::make(2, 3, 7), HyperbolicTriple::make(2, 4, 5),
          HyperbolicTriple::make(3, 3, 4)};
}

LadderChain ladder_chain(DynkinType target) {
  const int r = target.rank();
  const DynkinType g2(Family::G, 2);
  const DynkinType b3(Family::B, 3);
  switch (target.family()) {
    case Family::A:
      if (r <= 2) return {target, {target}};
      if (r == 6) return {target, {g2, b3, target}};
      if (r % 2 == 0) return {target, {DynkinType(Family::B, r / 2), target}};
      return {target, {DynkinType(Family::C, (r + 1) / 2), target}};
    case Family::B:
      if (r == 3) return {target, {g2, target}};
      return {target, {target}};
    case Family::D:
      if (r == 4) return {target, {g2, b3, target}};
      return {target, {DynkinType(Family::B, r - 1), target}};
    case Family::E:
      if (r == 6) return {target, {DynkinType(Family::F, 4), target}};
      return {target, {target}};
    case Family::C:
    case Family::F:
    case Family::G:
      break;
  }
  return {target, {target}};
}

std::vector<int> exponent_difference(DynkinType g, DynkinType h) {
  const std::vector<int> eg = exponents(g);
  const std::vector<int> eh = exponents(h);
  if (!std::includes(eg.begin(), eg.end(), eh.begin(), eh.end())) {
    throw InvalidArgument("exponents of " + h.name() + " are not a sub-multiset of those of " +
                          g.name());
  }
  std::vector<int> diff;
  std::set_difference(eg.begin(), eg.end(), eh.begin(), eh.end(), std::back_inserter(diff));
  return diff;
}

StepCriterion lr_criterion(DynkinType g, DynkinType h, const HyperbolicTriple& t) {
  StepCriterion s{h, g, 0, 0, false};
  for (int e : exponent_difference(g, h)) {
    for (int n : t.orders()) s.lhs += e / n;
    s.rhs += e - 1;
  }
  s.strict = s.lhs < s.rhs;
  return s;
}

std::string_view outcome_name(Outcome o) noexcept {
  return o == Outcome::Saturated ? "Saturated" : "PossibleException";
}

std::string_view reason_name(Reason r) noexcept {
  switch (r) {
    case Reason::None: return "None";
    case Reason::InS: return "InS";
    case Reason::RankOne: return "RankOne";
    case Reason::A2aTwo: return "A2aTwo";
    case Reason::BaseH1Zero: return "BaseH1Zero";
    case Reason::StepEquality: return "StepEquality";
  }
  return "None";
}

namespace {

bool is_a2(DynkinType t) { return t.family() == Family::A && t.rank() == 2; }

}  // namespace

SaturationVerdict saturation(DynkinType type, const HyperbolicTriple& t) {
  SaturationVerdict v;
  v.chain = ladder_chain(type);
  const DynkinType base = v.chain.steps.front();
  v.base_h1 = principal_h1(base, t);
  v.base_case = ineq_case(base, t);
  for (std::size_t i = 0; i + 1 < v.chain.steps.size(); ++i) {
    v.steps.push_back(lr_criterion(v.chain.steps[i + 1], v.chain.steps[i], t));
  }

  if (!so3_dense(t)) v.failures.push_back({Reason::InS, -1});
  if (type.family() == Family::A && type.rank() == 1) v.failures.push_back({Reason::RankOne, -1});
  if (v.base_case) v.failures.push_back({is_a2(base) ? Reason::A2aTwo : Reason::BaseH1Zero, -1});
  for (std::size_t i = 0; i < v.steps.size(); ++i) {
    if (!v.steps[i].strict) v.failures.push_back({Reason::StepEquality, static_cast<int>(i)});
  }

  if (!v.failures.empty()) {
    v.outcome = Outcome::PossibleException;
    v.reason = v.failures.front().reason;
    v.failing_step = v.failures.front().step;
  }
  return v;
}

LadderEvaluator::LadderEvaluator(DynkinType target)
    : chain_(ladder_chain(target)), window_(stabilization_bound(target)) {
  const DynkinType base = chain_.steps.front();
  const std::vector<int> base_exp = exponents(base);
  for (int e : base_exp) base_dim_ += 1 + 2 * e;
  base_fixed_.assign(window_ + 1, 0);
  for (int n = 2; n <= window_; ++n) {
    for (int e : base_exp) base_fixed_[n] += 1 + 2 * (e / n);
  }
  for (std::size_t i = 0; i + 1 < chain_.steps.size(); ++i) {
    const std::vector<int> diff = exponent_difference(chain_.steps[i + 1], chain_.steps[i]);
    std::int64_t rhs = 0;
    std::vector<std::int64_t> floors(window_ + 1, 0);
    for (int e : diff) {
      rhs += e - 1;
      for (int n = 2; n <= window_; ++n) floors[n] += e / n;
    }
    step_rhs_.push_back(rhs);
    step_floor_.push_back(std::move(floors));
  }
}

int LadderEvaluator::base_h1(int a, int b, int c) const {
  return base_dim_ - base_fixed_[clamp(a)] - base_fixed_[clamp(b)] - base_fixed_[clamp(c)];
}

bool LadderEvaluator::step_strict(std::size_t step, int a, int b, int c) const {
  const auto& f = step_floor_.at(step);
  return f[clamp(a)] + f[clamp(b)] + f[clamp(c)] < step_rhs_[step];
}

Reason LadderEvaluator::first_failure(int a, int b, int c) const {
  if (in_excluded_set(a, b, c)) return Reason::InS;
  const DynkinType target = chain_.target;
  if (target.family() == Family::A && target.rank() == 1) return Reason::RankOne;
  if (base_h1(a, b, c) == 0) return is_a2(chain_.steps.front()) ? Reason::A2aTwo : Reason::BaseH1Zero;
  for (std::size_t i = 0; i < step_rhs_.size(); ++i) {
    if (!step_strict(i, a, b, c)) return Reason::StepEquality;
  }
  return Reason::None;
}

}  // namespace trisat
