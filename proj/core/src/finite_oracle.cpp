#include "trisat/finite_oracle.hpp"

#include <cstdlib>
#include <string>

#include "trisat/error.hpp"
#include "trisat/psl2.hpp"

namespace trisat {

namespace {

constexpr int kDefaultEpiQLimit = 61;

bool is_prime_power_of_odd(int q, int& base) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    base = p;
    int r = q;
    while (r % p == 0) r /= p;
    return r == 1;
  }
  return false;
}

void check_field(int q, int q_limit) {
  if (q < 2) throw InvalidArgument("q must be a prime, got " + std::to_string(q));
  int base = 0;
  if (!is_prime_power_of_odd(q, base)) {
    throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
  }
  if (base == 2) {
    throw InvalidArgument("even q = " + std::to_string(q) + " is not supported, q must be an odd prime");
  }
  if (base != q) {
    throw InvalidArgument("prime power q = " + std::to_string(q) +
                          " is not supported, q must be an odd prime");
  }
  if (q > q_limit) {
    throw BudgetExceeded("q = " + std::to_string(q) + " exceeds the enumeration limit " +
                             std::to_string(q_limit) + " (TRISAT_EPI_QMAX)",
                         static_cast<std::uint64_t>(q_limit), static_cast<std::uint64_t>(q));
  }
}

bool order_ok(int order, int n, bool exact) { return exact ? order == n : n % order == 0; }

}  // namespace

std::string_view conjugation_name(Conjugation c) noexcept {
  return c == Conjugation::Inner ? "inner" : "adjoint";
}

int default_epi_q_limit() {
  if (const char* env = std::getenv("TRISAT_EPI_QMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultEpiQLimit;
}

EpiCount epi_count(const HyperbolicTriple& t, int q, Conjugation conjugation, bool exact_orders,
                   int q_limit) {
  check_field(q, q_limit);
  const Psl2 g(q);
  EpiCount out{q, t, conjugation, exact_orders, 0, 0, {}};

  const std::vector<Psl2::Element> conjugators =
      conjugation == Conjugation::Inner ? g.elements() : g.pgl_elements();
  std::vector<Psl2::Element> conj_inverse;
  conj_inverse.reserve(conjugators.size());
  for (Psl2::Element k : conjugators) conj_inverse.push_back(g.inverse(k));

  const std::vector<Psl2::Element>& elems = g.elements();
  std::vector<char> assigned(elems.size(), 0);
  std::vector<char> y_seen(elems.size(), 0);

  for (std::size_t xi = 0; xi < elems.size(); ++xi) {
    if (assigned[xi] || !order_ok(g.element_order(elems[xi]), t.a(), exact_orders)) continue;
    const Psl2::Element x0 = elems[xi];

    // class of x0 and its centralizer in the conjugating group
    std::uint64_t class_size = 0;
    std::vector<std::size_t> centralizer;
    for (std::size_t k = 0; k < conjugators.size(); ++k) {
      const Psl2::Element c = g.multiply(g.multiply(conjugators[k], x0), conj_inverse[k]);
      const std::size_t ci = g.index_of(c);
      if (!assigned[ci]) {
        assigned[ci] = 1;
        ++class_size;
      }
      if (c == x0) centralizer.push_back(k);
    }

    std::vector<Psl2::Element> admissible;
    for (Psl2::Element y : elems) {
      if (!order_ok(g.element_order(y), t.b(), exact_orders)) continue;
      if (!order_ok(g.element_order(g.multiply(x0, y)), t.c(), exact_orders)) continue;
      if (!subgroup_generates(g, x0, y)) continue;
      admissible.push_back(y);
    }
    out.raw_count += class_size * admissible.size();

    for (Psl2::Element y : admissible) y_seen[g.index_of(y)] = 0;
    for (Psl2::Element y : admissible) {
      if (y_seen[g.index_of(y)]) continue;
      std::uint64_t orbit = 0;
      for (std::size_t k : centralizer) {
        const Psl2::Element c = g.multiply(g.multiply(conjugators[k], y), conj_inverse[k]);
        const std::size_t ci = g.index_of(c);
        if (!y_seen[ci]) {
          y_seen[ci] = 1;
          ++orbit;
        }
      }
      ++out.class_count;
      out.orbit_sizes.push_back(orbit * class_size);
    }
  }
  return out;
}

}  // namespace trisat
