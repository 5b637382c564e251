#include <doctest.h>

#include <fstream>
#include <sstream>

#include "trisat/error.hpp"
#include "trisat/ladder.hpp"
#include "trisat/table.hpp"
#include "trisat/table_generation.hpp"
#include "trisat/triple.hpp"

using namespace trisat;

namespace {

ParsedTable load_fixture(int which) {
  std::ifstream in(std::string(TRISAT_FIXTURE_DIR) + "/tables/table" + std::to_string(which) + ".csv");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table_csv(ss.str());
}

}  // namespace

TEST_SUITE("table") {

TEST_CASE("bounds and patterns") {
  CHECK(Bound::parse(">=7") == Bound{7, true});
  CHECK(Bound::parse("5") == Bound{5, false});
  CHECK(Bound{7, true}.str() == ">=7");
  CHECK(Bound{7, true}.matches(100));
  CHECK_FALSE(Bound{7, false}.matches(8));
  CHECK_THROWS_AS(Bound::parse(">=x"), InvalidArgument);
  CHECK_THROWS_AS(Bound::parse("1"), InvalidArgument);
  const TriplePattern p{{2, false}, {3, false}, {7, true}};
  CHECK(p.str() == "(2,3,>=7)");
  CHECK(p.matches(2, 3, 9));
  CHECK_FALSE(p.matches(2, 4, 9));
}

TEST_CASE("rank set encoding") {
  const RankSet s = RankSet::parse("3-5;7-19");
  CHECK(s.contains(4));
  CHECK_FALSE(s.contains(6));
  CHECK(s.contains(19));
  CHECK(s.encode() == "3-5;7-19");
  CHECK(RankSet::parse("5;7;13").encode() == "5;7;13");
  CHECK(RankSet{{1, 2, 3, 5}, false}.encode() == "1-3;5");
  CHECK(RankSet::parse("*").any);
  CHECK(RankSet::parse("*").contains(99));
  CHECK(RankSet::parse("*").encode() == "*");
  CHECK_THROWS_AS(RankSet::parse("5-3"), InvalidArgument);
  CHECK_THROWS_AS(RankSet::parse(""), InvalidArgument);
}

TEST_CASE("csv round trip") {
  for (int which = 1; which <= 4; ++which) {
    const ParsedTable t = load_fixture(which);
    const ParsedTable again = parse_table_csv(table_to_csv(t.rows));
    CHECK(again.rows == t.rows);
  }
  const ParsedTable t1 = load_fixture(1);
  REQUIRE(t1.comments.size() >= 1);
  CHECK(t1.comments.back().rfind("quirk:", 0) == 0);
  CHECK_THROWS_AS(parse_table_csv("family,rank_set,a,b,c,provenance\nA,1,2,3\n"), InvalidArgument);
  CHECK_THROWS_AS(parse_table_csv("a,b\n"), InvalidArgument);
  const std::string md = table_to_markdown(load_fixture(4).rows);
  CHECK(md.find("| E | 6 | (2,4,8) | StepEquality |") != std::string::npos);
}

TEST_CASE("coalescer") {
  SUBCASE("full a-tail") {
    LabelGrid g(12);
    for (int a = 2; a <= 12; ++a)
      for (int b = a; b <= 12; ++b)
        for (int c = b; c <= 12; ++c)
          if (g.contains(a, b, c)) g.insert(a, b, c, 1);
    const auto rows = coalesce(g);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].pattern.str() == "(>=2,>=2,>=2)");
  }
  SUBCASE("c-tail and explicit cells") {
    LabelGrid g(12);
    for (int c = 7; c <= 12; ++c) g.insert(2, 3, c, 4);
    g.insert(2, 4, 5, 4);
    g.insert(2, 4, 6, 5);
    const auto rows = coalesce(g);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].pattern.str() == "(2,3,>=7)");
    CHECK(rows[1].pattern.str() == "(2,4,5)");
    CHECK(rows[2].pattern.str() == "(2,4,6)");
    CHECK(rows[2].label == std::vector<int>{5});
  }
  SUBCASE("wildcards do not break a run") {
    LabelGrid g(12);
    for (int b = 3; b <= 12; ++b)
      for (int c = b; c <= 12; ++c)
        if (g.contains(2, b, c) && !in_excluded_set(2, b, c)) g.insert(2, b, c, 1);
    const auto rows = coalesce(g, [](int a, int b, int c) { return in_excluded_set(a, b, c); });
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].pattern.str() == "(2,>=3,>=3)");
  }
  SUBCASE("a broken tail stays explicit") {
    LabelGrid g(12);
    g.insert(2, 3, 12, 1);
    g.insert(2, 3, 10, 1);
    const auto rows = coalesce(g);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].pattern.str() == "(2,3,>=12)");
    CHECK(rows[1].pattern.str() == "(2,3,10)");
  }
}

TEST_CASE("expansion") {
  const std::vector<TableRow> rows{{"C", RankSet::parse("2"), {{2, false}, {3, false}, {7, true}}, "x"},
                                   {"*", RankSet::parse("*"), {{2, false}, {4, false}, {6, false}}, "InS"}};
  const auto cells = expand(rows, {DynkinType(Family::C, 2), DynkinType(Family::A, 3)}, 10);
  // C_2: (2,3,7..10) and (2,4,6); A_3: (2,4,6)
  CHECK(cells.size() == 6);
  CHECK(std::is_sorted(cells.begin(), cells.end()));
}

TEST_CASE("generated tables equal the fixtures") {
  CHECK(required_rank_cap(1) == 43);
  CHECK(required_rank_cap(2) == 8);
  CHECK(required_rank_cap(3) == 43);
  CHECK(required_rank_cap(4) == 6);
  for (int which = 1; which <= 4; ++which) {
    CAPTURE(which);
    const auto gen = generate_table(which);
    const TableDiff d = compare_tables(which, gen, load_fixture(which));
    CHECK(d.match);
    CHECK(d.extensional == (which == 1));
    CHECK(d.missing_count == 0);
    CHECK(d.extra_count == 0);
    if (which > 1) CHECK(table_to_csv(gen) == table_to_csv(load_fixture(which).rows));
  }
  CHECK_THROWS_AS(generate_table(5), InvalidArgument);
  CHECK_THROWS_AS(generate_table(3, 20), InvalidArgument);
  CHECK_THROWS_AS(generate_table(2, 121), BudgetExceeded);
}

TEST_CASE("comparison reports a perturbed fixture") {
  ParsedTable f = load_fixture(3);
  f.rows.pop_back();
  const TableDiff d = compare_tables(3, generate_table(3), f);
  CHECK_FALSE(d.match);
  CHECK(d.extra_count == 1);
  ParsedTable f1 = load_fixture(1);
  f1.rows.erase(f1.rows.begin() + 7);
  const TableDiff d1 = compare_tables(1, generate_table(1), f1);
  CHECK_FALSE(d1.match);
  CHECK(d1.extra_count > 0);
  CHECK(d1.missing_count == 0);
}

TEST_CASE("table rows agree with pointwise verdicts") {
  const auto rows = generate_table(1);
  const auto universe = canonical_types(12);
  const auto cells = expand(rows, universe, 30);
  for (const DynkinType& x : universe) {
    for (int a = 2; a <= 30; ++a)
      for (int b = a; b <= 30; ++b)
        for (int c = b; c <= 30; ++c) {
          if (!is_hyperbolic(a, b, c)) continue;
          const bool listed = std::binary_search(cells.begin(), cells.end(), Cell{x, {a, b, c}});
          const bool exception =
              saturation(x, HyperbolicTriple::make(a, b, c)).outcome == Outcome::PossibleException;
          if (listed != exception) {
            CAPTURE(x.name());
            CAPTURE(a * 10000 + b * 100 + c);
            CHECK(listed == exception);
          }
        }
  }
}

}
