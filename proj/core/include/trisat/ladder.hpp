#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trisat/dynkin.hpp"
#include "trisat/triple.hpp"

namespace trisat {

HyperbolicTriple validate_triple(int a, int b, int c);

/// The six hyperbolic triples without an SO(3)-dense representation.
const std::array<HyperbolicTriple, 6>& excluded_triples();

/// Raw variant for sorted entries.
bool in_excluded_set(int a, int b, int c) noexcept;

inline bool so3_dense(const HyperbolicTriple& t) { return !in_excluded_set(t.a(), t.b(), t.c()); }

/// Minimal elements of the componentwise order on hyperbolic triples.
std::array<HyperbolicTriple, 3> minimal_triples();

/// Subgroup chain along which the principal base point is deformed; the last
/// entry is the target.
struct LadderChain {
  DynkinType target{Family::A, 1};
  std::vector<DynkinType> steps;
};

LadderChain ladder_chain(DynkinType target);

/// Multiset difference exponents(g) - exponents(h). Throws InvalidArgument
/// unless exponents(h) is a sub-multiset of exponents(g).
std::vector<int> exponent_difference(DynkinType g, DynkinType h);

/// Floor-sum comparison for a step h < g:
///   lhs = sum_k sum_{e in E} floor(e / n_k),  rhs = sum_{e in E} e - |E|,
/// and dim H^1(g) > dim H^1(h) iff lhs < rhs.
struct StepCriterion {
  DynkinType lower;
  DynkinType upper;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool strict = false;
};

StepCriterion lr_criterion(DynkinType g, DynkinType h, const HyperbolicTriple& t);

enum class Outcome { Saturated, PossibleException };
/// Base failures on A_2 (exceptional case (b), a = 2) are reported as A2aTwo, every
/// other base failure as BaseH1Zero.
enum class Reason { None, InS, RankOne, A2aTwo, BaseH1Zero, StepEquality };

std::string_view outcome_name(Outcome o) noexcept;
std::string_view reason_name(Reason r) noexcept;

struct Failure {
  Reason reason = Reason::None;
  int step = -1;  ///< index into SaturationVerdict::steps for StepEquality
};

struct SaturationVerdict {
  Outcome outcome = Outcome::Saturated;
  Reason reason = Reason::None;
  int failing_step = -1;
  LadderChain chain;
  int base_h1 = 0;
  /// Exceptional-case letter of the first chain group, if any.
  std::optional<char> base_case;
  /// One record per consecutive pair of the chain.
  std::vector<StepCriterion> steps;
  /// Every failed condition in the order InS, RankOne, BaseH1Zero, steps.
  std::vector<Failure> failures;
};

SaturationVerdict saturation(DynkinType type, const HyperbolicTriple& t);

/// Precomputed floor tables for sweeping many triples of one target type.
/// Independent of saturation(): the base check goes through the formula
/// (principal_h1 == 0) rather than the exceptional-case table.
class LadderEvaluator {
 public:
  explicit LadderEvaluator(DynkinType target);

  DynkinType target() const noexcept { return chain_.target; }
  const LadderChain& chain() const noexcept { return chain_; }
  int window() const noexcept { return window_; }

  /// Arguments are a sorted hyperbolic triple, entries may exceed window().
  int base_h1(int a, int b, int c) const;
  bool step_strict(std::size_t step, int a, int b, int c) const;
  Reason first_failure(int a, int b, int c) const;

 private:
  int clamp(int n) const noexcept { return n < window_ ? n : window_; }

  LadderChain chain_;
  int window_;
  int base_dim_ = 0;
  std::vector<int> base_fixed_;                 // indexed by n
  std::vector<std::int64_t> step_rhs_;
  std::vector<std::vector<std::int64_t>> step_floor_;  // [step][n]
};

}  // namespace trisat
