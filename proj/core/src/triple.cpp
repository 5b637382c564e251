#include "trisat/triple.hpp"

#include <algorithm>

#include "trisat/error.hpp"

namespace trisat {

bool is_hyperbolic(int a, int b, int c) noexcept {
  if (a < 2 || b < 2 || c < 2) return false;
  // 1/a + 1/b + 1/c < 1  <=>  bc + ac + ab < abc
  const long long x = a, y = b, z = c;
  return y * z + x * z + x * y < x * y * z;
}

HyperbolicTriple HyperbolicTriple::make(int a, int b, int c) {
  std::array<int, 3> n{a, b, c};
  std::sort(n.begin(), n.end());
  const std::string shown =
      "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  if (n[0] < 2) throw InvalidArgument("triple " + shown + " has an entry below 2");
  if (!is_hyperbolic(n[0], n[1], n[2])) {
    const Rational mu = Rational(1, n[0]) + Rational(1, n[1]) + Rational(1, n[2]);
    throw InvalidArgument("triple " + shown + " is not hyperbolic: mu = 1/a+1/b+1/c = " +
                          mu.compact() + " >= 1");
  }
  return HyperbolicTriple(n);
}

Rational HyperbolicTriple::mu() const {
  return Rational(1, n_[0]) + Rational(1, n_[1]) + Rational(1, n_[2]);
}

bool HyperbolicTriple::precedes(const HyperbolicTriple& o) const noexcept {
  return n_[0] <= o.n_[0] && n_[1] <= o.n_[1] && n_[2] <= o.n_[2];
}

std::string HyperbolicTriple::str() const {
  return "(" + std::to_string(n_[0]) + "," + std::to_string(n_[1]) + "," + std::to_string(n_[2]) +
         ")";
}

}  // namespace trisat
