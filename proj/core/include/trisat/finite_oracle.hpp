#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "trisat/triple.hpp"

namespace trisat {

enum class Conjugation {
  Inner,    ///< by PSL_2(q)
  Adjoint,  ///< by PGL_2(q)
};

std::string_view conjugation_name(Conjugation c) noexcept;

struct EpiCount {
  int q = 0;
  HyperbolicTriple triple;
  Conjugation conjugation = Conjugation::Inner;
  bool exact_orders = false;
  /// Generating pairs (x, y) of PSL_2(q) with x^a = y^b = (xy)^c = 1
  /// (orders exactly a, b, c when exact_orders is set).
  std::uint64_t raw_count = 0;
  /// Number of orbits of those pairs under simultaneous conjugation.
  std::uint64_t class_count = 0;
  /// Size of each orbit; sums to raw_count.
  std::vector<std::uint64_t> orbit_sizes;
};

/// Largest q accepted, from TRISAT_EPI_QMAX (default 61).
int default_epi_q_limit();

/// Exhaustive count of epimorphisms T_{a,b,c} -> PSL_2(q). Orbits are found
/// by fixing x to a class representative x0 and partitioning the admissible
/// y under the centralizer of x0. Throws InvalidArgument for q not an odd
/// prime, BudgetExceeded for q above q_limit.
EpiCount epi_count(const HyperbolicTriple& t, int q, Conjugation conjugation = Conjugation::Inner,
                   bool exact_orders = false, int q_limit = default_epi_q_limit());

}  // namespace trisat
