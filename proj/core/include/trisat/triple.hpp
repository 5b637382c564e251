#pragma once

#include <array>
#include <compare>
#include <string>

#include "trisat/rational.hpp"

namespace trisat {

/// True iff 1/a + 1/b + 1/c < 1 (order of the arguments is irrelevant).
bool is_hyperbolic(int a, int b, int c) noexcept;

/// Sorted triple 2 <= a <= b <= c with 1/a + 1/b + 1/c < 1.
class HyperbolicTriple {
 public:
  /// Sorts the arguments and validates them; throws InvalidArgument when an
  /// entry is below 2 or the triple is not hyperbolic (the message quotes mu).
  static HyperbolicTriple make(int a, int b, int c);

  int a() const noexcept { return n_[0]; }
  int b() const noexcept { return n_[1]; }
  int c() const noexcept { return n_[2]; }
  const std::array<int, 3>& orders() const noexcept { return n_; }

  /// 1/a + 1/b + 1/c, exact.
  Rational mu() const;

  /// Componentwise <=.
  bool precedes(const HyperbolicTriple& other) const noexcept;

  /// "(2,3,7)"
  std::string str() const;

  friend auto operator<=>(const HyperbolicTriple&, const HyperbolicTriple&) = default;
  friend bool operator==(const HyperbolicTriple&, const HyperbolicTriple&) = default;

 private:
  explicit HyperbolicTriple(std::array<int, 3> n) : n_(n) {}
  std::array<int, 3> n_;
};

}  // namespace trisat
