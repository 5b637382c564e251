#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trisat/error.hpp"
#include "trisat/ladder.hpp"
#include "trisat/root_system.hpp"
#include "trisat/weil.hpp"

using namespace trisat;

namespace {

std::vector<std::string> chain_names(DynkinType t) {
  std::vector<std::string> out;
  for (const DynkinType& s : ladder_chain(t).steps) out.push_back(s.name());
  return out;
}

DynkinType T(const char* s) { return DynkinType::parse(s); }

template <class F>
void for_each_triple(int cap, F&& f) {
  for (int a = 2; a <= cap; ++a)
    for (int b = a; b <= cap; ++b)
      for (int c = b; c <= cap; ++c)
        if (is_hyperbolic(a, b, c)) f(HyperbolicTriple::make(a, b, c));
}

}  // namespace

TEST_SUITE("ladder") {

TEST_CASE("excluded set and minimal triples") {
  CHECK(excluded_triples().size() == 6);
  for (const auto& t : excluded_triples()) CHECK_FALSE(so3_dense(t));
  CHECK(in_excluded_set(4, 6, 12));
  CHECK_FALSE(in_excluded_set(2, 3, 7));
  const auto mins = minimal_triples();
  CHECK(mins[0] == HyperbolicTriple::make(2, 3, 7));
  CHECK(mins[1] == HyperbolicTriple::make(2, 4, 5));
  CHECK(mins[2] == HyperbolicTriple::make(3, 3, 4));
  for_each_triple(30, [&](const HyperbolicTriple& t) {
    CHECK(std::any_of(mins.begin(), mins.end(), [&](const auto& m) { return m.precedes(t); }));
  });
  CHECK_THROWS_AS(validate_triple(2, 3, 6), InvalidArgument);
  CHECK(validate_triple(7, 3, 2) == HyperbolicTriple::make(2, 3, 7));
}

TEST_CASE("chains") {
  using V = std::vector<std::string>;
  CHECK(chain_names(T("A_1")) == V{"A_1"});
  CHECK(chain_names(T("A_2")) == V{"A_2"});
  CHECK(chain_names(T("A_3")) == V{"C_2", "A_3"});
  CHECK(chain_names(T("A_4")) == V{"B_2", "A_4"});
  CHECK(chain_names(T("A_6")) == V{"G_2", "B_3", "A_6"});
  CHECK(chain_names(T("A_7")) == V{"C_4", "A_7"});
  CHECK(chain_names(T("A_8")) == V{"B_4", "A_8"});
  CHECK(chain_names(T("D_4")) == V{"G_2", "B_3", "D_4"});
  CHECK(chain_names(T("D_5")) == V{"B_4", "D_5"});
  CHECK(chain_names(T("B_3")) == V{"G_2", "B_3"});
  CHECK(chain_names(T("E_6")) == V{"F_4", "E_6"});
  for (const char* direct : {"B_4", "C_3", "E_7", "E_8", "F_4", "G_2", "C_2"})
    CHECK(chain_names(T(direct)) == V{direct});
  // every step is an exponent inclusion
  for (const DynkinType& x : canonical_types(40)) {
    const auto chain = ladder_chain(x);
    CHECK(chain.steps.back() == x);
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i)
      CHECK_NOTHROW(exponent_difference(chain.steps[i + 1], chain.steps[i]));
  }
  CHECK_THROWS_AS(exponent_difference(T("G_2"), T("B_3")), InvalidArgument);
}

TEST_CASE("floor-sum criterion spot values") {
  const auto t = HyperbolicTriple::make(2, 3, 7);
  const auto b3 = lr_criterion(T("B_3"), T("G_2"), t);
  CHECK(b3.lhs == 2);
  CHECK(b3.rhs == 2);
  CHECK_FALSE(b3.strict);
  const auto e6 = lr_criterion(T("E_6"), T("F_4"), t);
  CHECK(e6.lhs == 10);
  CHECK(e6.rhs == 10);
  const auto d6 = lr_criterion(T("D_6"), T("B_5"), t);
  CHECK(d6.lhs == 3);
  CHECK(d6.rhs == 4);
  CHECK(d6.strict);
}

TEST_CASE("h1 difference is twice the floor-sum gap") {
  for (const DynkinType& x : canonical_types(30)) {
    const auto chain = ladder_chain(x);
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
      const DynkinType h = chain.steps[i], g = chain.steps[i + 1];
      for_each_triple(16, [&](const HyperbolicTriple& t) {
        const auto s = lr_criterion(g, h, t);
        CHECK(principal_h1(g, t) - principal_h1(h, t) == 2 * (s.rhs - s.lhs));
        CHECK(s.lhs <= s.rhs);
        // cross-check against the eigenvalue oracle
        const auto eg = oracle::exponents_table(family_letter(g.family()), g.rank());
        const auto eh = oracle::exponents_table(family_letter(h.family()), h.rank());
        CHECK(oracle::eigen_h1(eg, t.orders()) - oracle::eigen_h1(eh, t.orders()) ==
              2 * (s.rhs - s.lhs));
      });
    }
  }
}

TEST_CASE("verdict structure") {
  const auto v = saturation(T("D_4"), HyperbolicTriple::make(3, 3, 9));
  CHECK(v.outcome == Outcome::PossibleException);
  CHECK(v.reason == Reason::StepEquality);
  CHECK(v.failing_step == 0);
  CHECK(v.steps[0].lhs == 2);
  CHECK(v.steps[0].rhs == 2);
  CHECK(saturation(T("A_5"), HyperbolicTriple::make(2, 4, 6)).reason == Reason::InS);
  CHECK(saturation(T("A_1"), HyperbolicTriple::make(2, 3, 7)).reason == Reason::RankOne);
  CHECK(saturation(T("A_2"), HyperbolicTriple::make(2, 5, 5)).reason == Reason::A2aTwo);
  CHECK(saturation(T("G_2"), HyperbolicTriple::make(2, 4, 5)).reason == Reason::BaseH1Zero);
  const auto e8 = saturation(T("E_8"), HyperbolicTriple::make(2, 3, 7));
  CHECK(e8.outcome == Outcome::Saturated);
  CHECK(e8.reason == Reason::None);
  CHECK(e8.failures.empty());
  CHECK(e8.base_h1 == principal_h1(T("E_8"), HyperbolicTriple::make(2, 3, 7)));
}

TEST_CASE("verdict post-conditions") {
  for (const DynkinType& x : canonical_types(12)) {
    for_each_triple(24, [&](const HyperbolicTriple& t) {
      const auto v = saturation(x, t);
      CAPTURE(x.name());
      CAPTURE(t.str());
      CHECK((v.outcome == Outcome::Saturated) == (v.reason == Reason::None));
      CHECK((v.reason == Reason::None) == v.failures.empty());
      if (!v.failures.empty()) CHECK(v.failures.front().reason == v.reason);
      CHECK(v.steps.size() + 1 == v.chain.steps.size());
      if (v.outcome == Outcome::Saturated) CHECK(principal_h1(x, t) > 0);
      if (v.reason == Reason::StepEquality) {
        CHECK_FALSE(v.steps[v.failing_step].strict);
        for (int i = 0; i < v.failing_step; ++i) CHECK(v.steps[i].strict);
      }
    });
  }
}

TEST_CASE("sweep evaluator agrees with the verdict") {
  for (const DynkinType& x : canonical_types(20)) {
    const LadderEvaluator ev(x);
    for_each_triple(40, [&](const HyperbolicTriple& t) {
      const auto v = saturation(x, t);
      CHECK(ev.first_failure(t.a(), t.b(), t.c()) == v.reason);
    });
    // far beyond the window the answer is that of the window
    CHECK(ev.first_failure(2, 3, 1000) == saturation(x, HyperbolicTriple::make(2, 3, 1000)).reason);
  }
}

TEST_CASE("strictness is monotone in the triple order") {
  for (const DynkinType& x : canonical_types(10)) {
    const auto chain = ladder_chain(x);
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
      const DynkinType h = chain.steps[i], g = chain.steps[i + 1];
      const int cap = 2 * root_system(g).max_exponent() + 1;
      long bad = 0;
      for_each_triple(cap, [&](const HyperbolicTriple& t) {
        if (!lr_criterion(g, h, t).strict) return;
        const auto [a, b, c] = t.orders();
        for (auto n : {std::array{a, b, c + 1}, std::array{a, b + 1, c}, std::array{a + 1, b, c}})
          bad += !lr_criterion(g, h, HyperbolicTriple::make(n[0], n[1], n[2])).strict;
      });
      CAPTURE(g.name());
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("A chain: strict once, strict for all larger ranks") {
  for_each_triple(30, [&](const HyperbolicTriple& t) {
    bool seen_strict = false;
    for (int r = 3; r <= 60; ++r) {
      if (r == 6) continue;
      const auto chain = ladder_chain(DynkinType(Family::A, r));
      const bool strict = lr_criterion(chain.steps[1], chain.steps[0], t).strict;
      if (seen_strict) {
        CAPTURE(t.str());
        CAPTURE(r);
        CHECK(strict);
      }
      seen_strict = seen_strict || strict;
    }
  });
  // ranks 2s and 2s+1 share the floor sums
  for (int s = 4; s <= 25; ++s) {
    const auto even = ladder_chain(DynkinType(Family::A, 2 * s));
    const auto odd = ladder_chain(DynkinType(Family::A, 2 * s + 1));
    const auto t = HyperbolicTriple::make(2, 3, 7);
    const auto le = lr_criterion(even.steps[1], even.steps[0], t);
    const auto lo = lr_criterion(odd.steps[1], odd.steps[0], t);
    CHECK(le.lhs == lo.lhs);
    CHECK(le.rhs == lo.rhs);
    auto diff = exponent_difference(even.steps[1], even.steps[0]);
    std::sort(diff.begin(), diff.end());
    std::vector<int> want;
    for (int k = 1; k <= s; ++k) want.push_back(2 * k);
    CHECK(diff == want);
  }
}

TEST_CASE("type A failures only at small ranks") {
  for (int r = 20; r <= 60; ++r) {
    if (r == 6) continue;
    const DynkinType x(Family::A, r);
    for_each_triple(30, [&](const HyperbolicTriple& t) {
      if (so3_dense(t)) CHECK(saturation(x, t).outcome == Outcome::Saturated);
    });
  }
}

TEST_CASE("type D has no step equality beyond rank 43") {
  for (int r = 44; r <= 100; ++r) {
    const LadderEvaluator ev(DynkinType(Family::D, r));
    long hits = 0;
    for_each_triple(ev.window(), [&](const HyperbolicTriple& t) {
      hits += ev.first_failure(t.a(), t.b(), t.c()) == Reason::StepEquality;
    });
    CAPTURE(r);
    CHECK(hits == 0);
  }
  CHECK(saturation(DynkinType(Family::D, 43), HyperbolicTriple::make(2, 3, 7)).reason ==
        Reason::StepEquality);
}

TEST_CASE("names") {
  CHECK(outcome_name(Outcome::PossibleException) == "PossibleException");
  CHECK(reason_name(Reason::StepEquality) == "StepEquality");
  CHECK(reason_name(Reason::A2aTwo) == "A2aTwo");
}

}
