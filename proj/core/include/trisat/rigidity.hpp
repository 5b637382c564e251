#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trisat/dynkin.hpp"
#include "trisat/table.hpp"
#include "trisat/torus_delta.hpp"
#include "trisat/triple.hpp"

namespace trisat {

enum class TripleKind { Reducible, Rigid, Nonrigid };

std::string_view kind_name(TripleKind k) noexcept;

struct TripleClassification {
  TripleKind kind = TripleKind::Rigid;
  std::array<int, 3> deltas{};
  int threshold = 0;  ///< 2 dim G

  int delta_sum() const noexcept { return deltas[0] + deltas[1] + deltas[2]; }
};

TripleClassification classify(DynkinType type, const HyperbolicTriple& t,
                              std::uint64_t budget = default_torus_budget());
TripleClassification classify(DeltaCache& cache, const HyperbolicTriple& t);

struct RigidPattern {
  DynkinType type;
  TriplePattern pattern;
  /// The pattern has an open bound that reached the scan cap; only the
  /// scanned range was verified.
  bool open_beyond_cap = false;
};

struct RigidPairsReport {
  int rank_cap = 0;
  int c_cap = 0;
  std::vector<DynkinType> types;
  std::vector<RigidPattern> rigid;
  std::vector<std::pair<DynkinType, HyperbolicTriple>> reducible;
};

/// Classifies every canonical type of rank <= rank_cap against every
/// hyperbolic triple with entries <= c_cap and coalesces the rigid ones.
RigidPairsReport rigid_pairs(int rank_cap, int c_cap,
                             std::uint64_t budget = default_torus_budget());

bool is_prime(long long n) noexcept;

struct MarionVerdict {
  bool finite = false;
  std::string reason;
  TripleClassification classification;
};

/// Finiteness hypothesis: rigid and p does not divide a*b*c*d
/// with d the Cartan determinant. Throws InvalidArgument if p is not prime.
MarionVerdict marion_finiteness(DynkinType type, const HyperbolicTriple& t, int p,
                                std::uint64_t budget = default_torus_budget());

}  // namespace trisat
