#pragma once

#include <optional>

#include "trisat/dynkin.hpp"
#include "trisat/rational.hpp"
#include "trisat/triple.hpp"

namespace trisat {

/// Inputs of Weil's dimension formulas for a representation s of T_{a,b,c}
/// on a d-dimensional space V.
struct WeilInputs {
  int d = 0;       ///< dim V
  int i = 0;       ///< dim of the invariants of s
  int i_star = 0;  ///< dim of the invariants of the dual s*
  int e_x = 0;     ///< rank(Id - s(x)), likewise e_y, e_z
  int e_y = 0;
  int e_z = 0;
};

struct CohomologyReport {
  WeilInputs inputs;
  int dim_ptilde1 = 0;
  int dim_p1 = 0;
};

/// -2d + i + i* + e_x + e_y + e_z. A negative value means the inputs cannot
/// come from an actual representation.
int dim_p1(int d, int i, int i_star, int e_x, int e_y, int e_z) noexcept;

/// -d + i* + e_x + e_y + e_z
int dim_ptilde1(int d, int i_star, int e_x, int e_y, int e_z) noexcept;

/// Validates 0 <= e_t <= d and nonnegative inputs, then evaluates both formulas.
CohomologyReport cohomology_report(const WeilInputs& in);

/// Dimension of the fixed space of the principal image of an element of
/// order n acting on the Lie algebra: sum_j (1 + 2 floor(e_j / n)).
int principal_fixed_count(DynkinType type, int n);

/// Weil data of Ad o rho_0 for the principal homomorphism (characteristic
/// zero, so P^1 = H^1 and there are no invariants).
CohomologyReport principal_report(DynkinType type, const HyperbolicTriple& t);

/// dim H^1(T, Ad o rho_0) = dim G - sum_k principal_fixed_count(type, n_k).
int principal_h1(DynkinType type, const HyperbolicTriple& t);

/// The six exceptional configurations, as a pattern table. Returns the case
/// letter 'a'..'f' or nullopt. B_2 is treated as C_2.
std::optional<char> ineq_case(DynkinType type, const HyperbolicTriple& t);

inline bool ineq_exceptional(DynkinType type, const HyperbolicTriple& t) {
  return ineq_case(type, t).has_value();
}

/// (1 + 2 floor(e/n)) - (2e + 1)/n, which only depends on e mod n.
Rational deviation(int e, int n);

/// Sum of deviation(e_j, n) over the exponents of `type`.
Rational type_deviation(DynkinType type, int n);

enum class ClassicalFamily { A, BC, D };

/// Supremum over all ranks of type_deviation for a classical family. The
/// per-rank value is periodic in the rank up to a drift per period; throws
/// std::domain_error if that drift is positive (unbounded supremum).
Rational family_deviation_sup(ClassicalFamily family, int n);

/// Smallest c* such that every quantity depending on n only through
/// floor(e/n), e an exponent, is constant for n >= c*: max(max_exponent+1, 7).
/// The floor of 7 keeps clamped triples hyperbolic.
int stabilization_bound(DynkinType type);

}  // namespace trisat
