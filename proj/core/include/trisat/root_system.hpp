#pragma once

#include <cstdint>
#include <vector>

#include "trisat/dynkin.hpp"

namespace trisat {

using IntMatrix = std::vector<std::vector<int>>;

/// Coordinates of a root in the basis of simple roots.
using Root = std::vector<int>;

/// Combinatorial data of an irreducible root system.
///
/// The Cartan matrix uses the convention a[i][j] = <alpha_i^vee, alpha_j>
/// with Bourbaki numbering, so the alpha_i-string through beta has
/// p - q = sum_j beta_j * a[i][j].
struct RootSystem {
  DynkinType dynkin;
  IntMatrix cartan_matrix;
  /// Sorted by height, then lexicographically.
  std::vector<Root> positive_roots;
  /// Sorted ascending, one entry per simple root.
  std::vector<int> exponents;
  int dimension = 0;
  std::int64_t cartan_det = 0;

  int rank() const noexcept { return dynkin.rank(); }
  int max_exponent() const noexcept { return exponents.back(); }
  int coxeter_number() const noexcept { return exponents.back() + 1; }
  const Root& highest_root() const { return positive_roots.back(); }
};

IntMatrix cartan_matrix(DynkinType type);

/// Builds the root system; positive roots come from closing the simple roots
/// under root strings, not from a stored table.
RootSystem build(DynkinType type);

/// Cached, shared instance of build(type). Thread-safe.
const RootSystem& root_system(DynkinType type);

/// Closed-form exponent lists.
std::vector<int> exponents(DynkinType type);

/// Determinant of the Cartan matrix.
std::int64_t cartan_det(DynkinType type);

/// Exact integer determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);

/// Exponents recovered from the height distribution of the positive roots:
/// the multiplicity of k equals #{height k} - #{height k+1}.
std::vector<int> exponents_from_heights(const std::vector<Root>& positive_roots);

int height(const Root& root) noexcept;

}  // namespace trisat
