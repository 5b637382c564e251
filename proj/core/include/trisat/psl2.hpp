#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace trisat {

/// PSL_2(q) for an odd prime q, with elements stored as canonical
/// representatives of 2x2 matrices modulo scalars: the first nonzero entry
/// of (a, b, c, d) is scaled to 1. With that rule the determinant of a
/// representative of a PSL_2 element is a nonzero square.
class Psl2 {
 public:
  /// Packed canonical matrix a*q^3 + b*q^2 + c*q + d.
  using Element = std::uint32_t;

  explicit Psl2(int q);

  int q() const noexcept { return q_; }
  /// q(q^2 - 1)/2
  std::uint64_t order() const noexcept { return elements_.size(); }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  Element identity() const noexcept { return identity_; }
  /// Canonicalises; throws InvalidArgument for a singular matrix.
  Element make(int a, int b, int c, int d) const;
  std::array<int, 4> entries(Element x) const noexcept;
  Element multiply(Element x, Element y) const noexcept;
  Element inverse(Element x) const noexcept;

  bool contains(Element x) const noexcept { return index_.count(x) != 0; }
  std::size_t index_of(Element x) const;
  int element_order(Element x) const;

  /// PGL_2(q), the group of inner-diagonal automorphisms, in the same encoding.
  std::vector<Element> pgl_elements() const;

 private:
  int mod(long long v) const noexcept {
    long long r = v % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  Element pack(int a, int b, int c, int d) const noexcept;
  Element canonical(int a, int b, int c, int d) const noexcept;

  int q_;
  std::vector<int> inverse_mod_;
  std::vector<bool> is_square_;
  std::vector<Element> elements_;
  std::unordered_map<Element, std::uint32_t> index_;
  std::vector<std::uint16_t> orders_;
  Element identity_ = 0;
};

/// True iff <x, y> is all of PSL_2(q). Breadth-first closure; stops as soon
/// as more than half of the group is reached (a proper subgroup has index >= 2).
bool subgroup_generates(const Psl2& group, Psl2::Element x, Psl2::Element y);

}  // namespace trisat
