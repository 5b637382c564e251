#include "trisat/rigidity.hpp"

#include <future>

#include "trisat/error.hpp"
#include "trisat/root_system.hpp"

namespace trisat {

std::string_view kind_name(TripleKind k) noexcept {
  switch (k) {
    case TripleKind::Reducible: return "Reducible";
    case TripleKind::Rigid: return "Rigid";
    case TripleKind::Nonrigid: return "Nonrigid";
  }
  return "Rigid";
}

TripleClassification classify(DeltaCache& cache, const HyperbolicTriple& t) {
  TripleClassification out;
  out.deltas = {cache.get(t.a()).delta, cache.get(t.b()).delta, cache.get(t.c()).delta};
  out.threshold = 2 * root_system(cache.type()).dimension;
  const int sum = out.delta_sum();
  out.kind = sum < out.threshold   ? TripleKind::Reducible
             : sum == out.threshold ? TripleKind::Rigid
                                    : TripleKind::Nonrigid;
  return out;
}

TripleClassification classify(DynkinType type, const HyperbolicTriple& t, std::uint64_t budget) {
  DeltaCache cache(type, budget);
  return classify(cache, t);
}

namespace {

struct TypeScan {
  std::vector<RigidPattern> rigid;
  std::vector<HyperbolicTriple> reducible;
};

TypeScan scan_type(DynkinType type, int c_cap, std::uint64_t budget) {
  DeltaCache cache(type, budget);
  LabelGrid grid(c_cap);
  TypeScan out;
  for (int a = 2; a <= c_cap; ++a)
    for (int b = a; b <= c_cap; ++b)
      for (int c = b; c <= c_cap; ++c) {
        if (!is_hyperbolic(a, b, c)) continue;
        const HyperbolicTriple t = HyperbolicTriple::make(a, b, c);
        const TripleClassification k = classify(cache, t);
        if (k.kind == TripleKind::Rigid) grid.insert(a, b, c, 1);
        if (k.kind == TripleKind::Reducible) out.reducible.push_back(t);
      }
  for (const CoalescedRow& row : coalesce(grid)) {
    const TriplePattern& p = row.pattern;
    out.rigid.push_back({type, p, p.a.open || p.b.open || p.c.open});
  }
  return out;
}

}  // namespace

RigidPairsReport rigid_pairs(int rank_cap, int c_cap, std::uint64_t budget) {
  if (rank_cap < 1) throw InvalidArgument("rank cap must be >= 1");
  if (c_cap < 7) throw InvalidArgument("c cap must be >= 7 to contain a hyperbolic triple");
  RigidPairsReport report;
  report.rank_cap = rank_cap;
  report.c_cap = c_cap;
  report.types = canonical_types(rank_cap);

  std::vector<std::future<TypeScan>> jobs;
  for (const DynkinType& t : report.types) {
    root_system(t);
    jobs.push_back(std::async(std::launch::async, scan_type, t, c_cap, budget));
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    TypeScan scan = jobs[i].get();
    report.rigid.insert(report.rigid.end(), scan.rigid.begin(), scan.rigid.end());
    for (const HyperbolicTriple& t : scan.reducible) report.reducible.emplace_back(report.types[i], t);
  }
  return report;
}

bool is_prime(long long n) noexcept {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

MarionVerdict marion_finiteness(DynkinType type, const HyperbolicTriple& t, int p,
                                std::uint64_t budget) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  MarionVerdict v;
  v.classification = classify(type, t, budget);
  const std::int64_t d = cartan_det(type);
  if (v.classification.kind != TripleKind::Rigid) {
    v.reason = t.str() + " is " + std::string(kind_name(v.classification.kind)) + " for " +
               type.name();
  } else if (t.a() % p == 0 || t.b() % p == 0 || t.c() % p == 0) {
    v.reason = "p | abc";
  } else if (d % p == 0) {
    v.reason = "p | d, Cartan determinant " + std::to_string(d);
  } else {
    v.finite = true;
    v.reason = "rigid and p does not divide abcd";
  }
  return v;
}

}  // namespace trisat
