#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "trisat/dynkin.hpp"
#include "trisat/root_system.hpp"
#include "trisat/triple.hpp"

namespace trisat {

// delta_m is computed for the adjoint group over an algebraically closed
// field of characteristic zero (equivalently p not dividing m). Elements of
// order dividing m are then semisimple and conjugate into the maximal torus,
// and the conjugacy class of t has dimension dim G - dim C_G(t). The torus of
// the adjoint group has the root lattice as character lattice, so an m-torsion
// point is determined by its values on the simple roots, i.e. a residue
// vector in (Z/m)^rank.

struct TorusPoint {
  std::vector<int> coords;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

struct DeltaResult {
  int m = 1;
  int delta = 0;
  TorusPoint witness;
  int centralizer_dim_min = 0;
};

/// rank + #{roots alpha (both signs) with sum_i alpha_i * coords_i = 0 mod m}.
int centralizer_dim(const RootSystem& rs, int m, const TorusPoint& p);

/// Budget read from TRISAT_TORUS_BUDGET, default 10^8 torus points.
std::uint64_t default_torus_budget();

/// Exhaustive minimum of centralizer_dim over (Z/m)^rank in lexicographic
/// order; the witness is the lexicographically least minimiser. Throws
/// BudgetExceeded when m^rank exceeds `budget`.
DeltaResult delta(DynkinType type, int m, std::uint64_t budget = default_torus_budget());

int delta_sum(DynkinType type, const HyperbolicTriple& t,
              std::uint64_t budget = default_torus_budget());

/// Memoises delta(type, m) for one type. Not thread-safe.
class DeltaCache {
 public:
  explicit DeltaCache(DynkinType type, std::uint64_t budget = default_torus_budget())
      : type_(type), budget_(budget) {}

  DynkinType type() const noexcept { return type_; }
  const DeltaResult& get(int m);

 private:
  DynkinType type_;
  std::uint64_t budget_;
  std::map<int, DeltaResult> cache_;
};

}  // namespace trisat
