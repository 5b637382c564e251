#include "trisat/psl2.hpp"

#include <string>

#include "trisat/error.hpp"

namespace trisat {

Psl2::Psl2(int q) : q_(q) {
  if (q < 3 || q % 2 == 0) throw InvalidArgument("PSL_2(q) needs an odd prime q");
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw InvalidArgument("PSL_2(q) needs an odd prime q, got " + std::to_string(q));
  }
  if (q > 255) throw InvalidArgument("q too large for the packed element encoding");

  inverse_mod_.assign(q, 0);
  is_square_.assign(q, false);
  for (int x = 1; x < q; ++x) {
    is_square_[mod(static_cast<long long>(x) * x)] = true;
    for (int y = 1; y < q; ++y) {
      if (mod(static_cast<long long>(x) * y) == 1) inverse_mod_[x] = y;
    }
  }

  // canonical representatives: first nonzero entry is 1
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          const int lead = a ? a : b ? b : c ? c : d;
          if (lead != 1) continue;
          const int det = mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c);
          if (det == 0 || !is_square_[det]) continue;
          index_.emplace(pack(a, b, c, d), static_cast<std::uint32_t>(elements_.size()));
          elements_.push_back(pack(a, b, c, d));
        }
  identity_ = pack(1, 0, 0, 1);

  orders_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    Element p = elements_[i];
    std::uint16_t k = 1;
    while (p != identity_) {
      p = multiply(p, elements_[i]);
      ++k;
    }
    orders_[i] = k;
  }
}

Psl2::Element Psl2::pack(int a, int b, int c, int d) const noexcept {
  const auto qq = static_cast<Element>(q_);
  return ((static_cast<Element>(a) * qq + b) * qq + c) * qq + d;
}

Psl2::Element Psl2::canonical(int a, int b, int c, int d) const noexcept {
  const int lead = a ? a : b ? b : c ? c : d;
  const long long s = inverse_mod_[lead];
  return pack(mod(a * s), mod(b * s), mod(c * s), mod(d * s));
}

Psl2::Element Psl2::make(int a, int b, int c, int d) const {
  a = mod(a);
  b = mod(b);
  c = mod(c);
  d = mod(d);
  if (mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c) == 0) {
    throw InvalidArgument("singular matrix");
  }
  return canonical(a, b, c, d);
}

std::array<int, 4> Psl2::entries(Element x) const noexcept {
  std::array<int, 4> e{};
  for (int i = 3; i >= 0; --i) {
    e[i] = static_cast<int>(x % static_cast<Element>(q_));
    x /= static_cast<Element>(q_);
  }
  return e;
}

Psl2::Element Psl2::multiply(Element x, Element y) const noexcept {
  const auto [a, b, c, d] = entries(x);
  const auto [e, f, g, h] = entries(y);
  return canonical(mod(a * e + b * g), mod(a * f + b * h), mod(c * e + d * g), mod(c * f + d * h));
}

Psl2::Element Psl2::inverse(Element x) const noexcept {
  const auto [a, b, c, d] = entries(x);
  return canonical(d, mod(-b), mod(-c), a);
}

std::size_t Psl2::index_of(Element x) const {
  const auto it = index_.find(x);
  if (it == index_.end()) throw InvalidArgument("element is not in PSL_2(" + std::to_string(q_) + ")");
  return it->second;
}

int Psl2::element_order(Element x) const { return orders_[index_of(x)]; }

std::vector<Psl2::Element> Psl2::pgl_elements() const {
  std::vector<Element> out;
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      for (int c = 0; c < q_; ++c)
        for (int d = 0; d < q_; ++d) {
          const int lead = a ? a : b ? b : c ? c : d;
          if (lead != 1) continue;
          if (mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c) == 0) continue;
          out.push_back(pack(a, b, c, d));
        }
  return out;
}

bool subgroup_generates(const Psl2& group, Psl2::Element x, Psl2::Element y) {
  const std::size_t n = group.order();
  std::vector<char> seen(n, 0);
  std::vector<Psl2::Element> frontier{group.identity()};
  seen[group.index_of(group.identity())] = 1;
  group.index_of(x);
  group.index_of(y);
  std::size_t reached = 1;
  // a proper subgroup has at most n/2 elements
  while (!frontier.empty()) {
    std::vector<Psl2::Element> next;
    for (Psl2::Element g : frontier) {
      for (Psl2::Element s : {x, y}) {
        const Psl2::Element h = group.multiply(g, s);
        const std::size_t i = group.index_of(h);
        if (seen[i]) continue;
        seen[i] = 1;
        if (++reached * 2 > n) return true;
        next.push_back(h);
      }
    }
    frontier.swap(next);
  }
  return false;
}

}  // namespace trisat
