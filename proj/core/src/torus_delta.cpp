#include "trisat/torus_delta.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>

#include "trisat/error.hpp"

namespace trisat {

namespace {

constexpr std::uint64_t kDefaultTorusBudget = 100'000'000;

int zero_pairings(const RootSystem& rs, int m, const std::vector<int>& coords) {
  int count = 0;
  for (const Root& root : rs.positive_roots) {
    long long s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) s += static_cast<long long>(root[i]) * coords[i];
    if (s % m == 0) ++count;
  }
  return count;
}

}  // namespace

int centralizer_dim(const RootSystem& rs, int m, const TorusPoint& p) {
  if (m < 1) throw InvalidArgument("torsion order m must be >= 1");
  if (static_cast<int>(p.coords.size()) != rs.rank()) {
    throw InvalidArgument("torus point has " + std::to_string(p.coords.size()) +
                          " coordinates, rank is " + std::to_string(rs.rank()));
  }
  return rs.rank() + 2 * zero_pairings(rs, m, p.coords);
}

std::uint64_t default_torus_budget() {
  if (const char* env = std::getenv("TRISAT_TORUS_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultTorusBudget;
}

DeltaResult delta(DynkinType type, int m, std::uint64_t budget) {
  if (m < 1) throw InvalidArgument("torsion order m must be >= 1");
  const RootSystem& rs = root_system(type);
  const int r = rs.rank();

  std::uint64_t points = 1;
  for (int i = 0; i < r; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(points) * m;
    if (next > UINT64_MAX) {
      points = UINT64_MAX;
      break;
    }
    points = static_cast<std::uint64_t>(next);
  }
  if (points > budget) {
    throw BudgetExceeded("delta(" + type.name() + ", " + std::to_string(m) + ") needs " +
                             std::to_string(m) + "^" + std::to_string(r) +
                             " torus points, budget is " + std::to_string(budget) +
                             " (TRISAT_TORUS_BUDGET)",
                         budget, points);
  }

  std::vector<int> coords(r, 0);
  DeltaResult best{m, 0, TorusPoint{coords}, rs.dimension};
  // lexicographic odometer, last coordinate fastest
  while (best.centralizer_dim_min > r) {
    int k = r - 1;
    while (k >= 0 && coords[k] == m - 1) coords[k--] = 0;
    if (k < 0) break;
    ++coords[k];
    const int c = r + 2 * zero_pairings(rs, m, coords);
    if (c < best.centralizer_dim_min) {
      best.centralizer_dim_min = c;
      best.witness.coords = coords;
    }
  }
  best.delta = rs.dimension - best.centralizer_dim_min;
  return best;
}

int delta_sum(DynkinType type, const HyperbolicTriple& t, std::uint64_t budget) {
  DeltaCache cache(type, budget);
  return cache.get(t.a()).delta + cache.get(t.b()).delta + cache.get(t.c()).delta;
}

const DeltaResult& DeltaCache::get(int m) {
  auto it = cache_.find(m);
  if (it == cache_.end()) it = cache_.emplace(m, delta(type_, m, budget_)).first;
  return it->second;
}

}  // namespace trisat
