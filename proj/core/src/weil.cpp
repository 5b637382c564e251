#include "trisat/weil.hpp"

#include <stdexcept>

#include "trisat/error.hpp"
#include "trisat/root_system.hpp"

namespace trisat {

int dim_p1(int d, int i, int i_star, int e_x, int e_y, int e_z) noexcept {
  return -2 * d + i + i_star + e_x + e_y + e_z;
}

int dim_ptilde1(int d, int i_star, int e_x, int e_y, int e_z) noexcept {
  return -d + i_star + e_x + e_y + e_z;
}

CohomologyReport cohomology_report(const WeilInputs& in) {
  if (in.d < 0 || in.i < 0 || in.i_star < 0) throw InvalidArgument("Weil inputs must be >= 0");
  if (in.i > in.d || in.i_star > in.d) throw InvalidArgument("invariant dimension exceeds d");
  for (int e : {in.e_x, in.e_y, in.e_z}) {
    if (e < 0 || e > in.d) throw InvalidArgument("rank(Id - s(t)) must lie in [0, d]");
  }
  return {in, dim_ptilde1(in.d, in.i_star, in.e_x, in.e_y, in.e_z),
          dim_p1(in.d, in.i, in.i_star, in.e_x, in.e_y, in.e_z)};
}

namespace {

int fixed_count(const std::vector<int>& exps, int n) {
  int total = 0;
  for (int e : exps) total += 1 + 2 * (e / n);
  return total;
}

}  // namespace

int principal_fixed_count(DynkinType type, int n) {
  if (n < 2) throw InvalidArgument("element order must be >= 2");
  return fixed_count(root_system(type).exponents, n);
}

CohomologyReport principal_report(DynkinType type, const HyperbolicTriple& t) {
  const RootSystem& rs = root_system(type);
  const int dim = rs.dimension;
  WeilInputs in{dim, 0, 0, dim - fixed_count(rs.exponents, t.a()),
                dim - fixed_count(rs.exponents, t.b()), dim - fixed_count(rs.exponents, t.c())};
  return cohomology_report(in);
}

int principal_h1(DynkinType type, const HyperbolicTriple& t) {
  return principal_report(type, t).dim_p1;
}

std::optional<char> ineq_case(DynkinType type, const HyperbolicTriple& t) {
  const int r = type.rank();
  switch (type.family()) {
    case Family::A:
      if (r == 1) return 'a';
      if (r == 2 && t.a() == 2) return 'b';
      if (r == 3 && t.a() == 2 && t.b() == 3) return 'c';
      if (r == 4 && t.a() == 2 && t.b() == 3) return 'd';
      break;
    case Family::B:
    case Family::C:
      if (r == 2 && t.b() == 3) return 'e';
      break;
    case Family::G:
      if (t.a() == 2 && t.c() == 5) return 'f';
      break;
    default:
      break;
  }
  return std::nullopt;
}

Rational deviation(int e, int n) {
  if (e < 1 || n < 2) throw InvalidArgument("deviation needs e >= 1 and n >= 2");
  return Rational(1) - Rational(2 * (e % n) + 1, n);
}

Rational type_deviation(DynkinType type, int n) {
  Rational sum;
  for (int e : exponents(type)) sum += deviation(e, n);
  return sum;
}

Rational family_deviation_sup(ClassicalFamily family, int n) {
  if (n < 2) throw InvalidArgument("deviation needs n >= 2");
  Family f = Family::A;
  int r_min = 1;
  switch (family) {
    case ClassicalFamily::A: break;
    case ClassicalFamily::BC: f = Family::B; r_min = 2; break;
    case ClassicalFamily::D: f = Family::D; r_min = 4; break;
  }
  // value(r + n) = value(r) + drift, since n consecutive ranks add n exponents
  // spread evenly over the residues that occur
  const Rational drift = type_deviation(DynkinType(f, r_min + n), n) -
                         type_deviation(DynkinType(f, r_min), n);
  if (drift > Rational(0)) throw std::domain_error("deviation is unbounded over the family");
  Rational best = type_deviation(DynkinType(f, r_min), n);
  for (int r = r_min + 1; r < r_min + n; ++r) {
    const Rational v = type_deviation(DynkinType(f, r), n);
    if (v > best) best = v;
  }
  return best;
}

int stabilization_bound(DynkinType type) {
  const int c = exponents(type).back() + 1;
  return c < 7 ? 7 : c;
}

}  // namespace trisat
