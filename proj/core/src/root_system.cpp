#include "trisat/root_system.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_set>

#include "trisat/error.hpp"

namespace trisat {

namespace {

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept {
    std::size_t h = 0;
    for (int x : r) h = h * 1000003u + static_cast<std::size_t>(x);
    return h;
  }
};

void link(IntMatrix& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

}  // namespace

IntMatrix cartan_matrix(DynkinType type) {
  const int r = type.rank();
  IntMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;

  switch (type.family()) {
    case Family::A:
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case Family::B:  // alpha_r short
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      a[r - 1][r - 2] = -2;
      break;
    case Family::C:  // alpha_r long
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      a[r - 2][r - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 3, r - 1);
      break;
    case Family::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      break;
    case Family::G:  // alpha_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

int height(const Root& root) noexcept {
  int h = 0;
  for (int x : root) h += x;
  return h;
}

RootSystem build(DynkinType type) {
  RootSystem rs{type, cartan_matrix(type), {}, {}, 0, 0};
  const int r = type.rank();
  const IntMatrix& a = rs.cartan_matrix;

  std::unordered_set<Root, RootHash> known;
  std::vector<Root> layer;
  for (int i = 0; i < r; ++i) {
    Root e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }

  while (!layer.empty()) {
    rs.positive_roots.insert(rs.positive_roots.end(), layer.begin(), layer.end());
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (int i = 0; i < r; ++i) {
        // alpha_i-string through beta: p - q = <alpha_i^vee, beta>
        int p = 0;
        Root down = beta;
        while (true) {
          --down[i];
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[j] * a[i][j];
        if (p - pairing > 0) {
          Root up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(layer.begin(), layer.end());
  }

  std::stable_sort(rs.positive_roots.begin(), rs.positive_roots.end(),
                   [](const Root& x, const Root& y) {
                     const int hx = height(x), hy = height(y);
                     return hx != hy ? hx < hy : x < y;
                   });
  rs.exponents = exponents(type);
  rs.dimension = r + 2 * static_cast<int>(rs.positive_roots.size());
  rs.cartan_det = determinant(a);
  return rs;
}

const RootSystem& root_system(DynkinType type) {
  static std::mutex mu;
  static std::map<DynkinType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(type);
  if (it == cache.end()) it = cache.emplace(type, std::make_unique<RootSystem>(build(type))).first;
  return *it->second;
}

std::vector<int> exponents(DynkinType type) {
  const int r = type.rank();
  std::vector<int> e;
  switch (type.family()) {
    case Family::A:
      for (int k = 1; k <= r; ++k) e.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= r; ++k) e.push_back(2 * k - 1);
      break;
    case Family::D:
      for (int k = 1; k <= r - 1; ++k) e.push_back(2 * k - 1);
      e.push_back(r - 1);
      break;
    case Family::E:
      if (r == 6) e = {1, 4, 5, 7, 8, 11};
      if (r == 7) e = {1, 5, 7, 9, 11, 13, 17};
      if (r == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
      break;
    case Family::F: e = {1, 5, 7, 11}; break;
    case Family::G: e = {1, 5}; break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

std::int64_t cartan_det(DynkinType type) { return root_system(type).cartan_det; }

std::int64_t determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidArgument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }

  int sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * static_cast<std::int64_t>(a[n - 1][n - 1]);
}

std::vector<int> exponents_from_heights(const std::vector<Root>& positive_roots) {
  std::map<int, int> per_height;
  for (const Root& root : positive_roots) ++per_height[height(root)];
  std::vector<int> e;
  for (const auto& [k, count] : per_height) {
    const auto it = per_height.find(k + 1);
    const int above = it == per_height.end() ? 0 : it->second;
    for (int i = 0; i < count - above; ++i) e.push_back(k);
  }
  return e;
}

}  // namespace trisat
