#include "trisat/table_generation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "trisat/error.hpp"
#include "trisat/ladder.hpp"
#include "trisat/weil.hpp"

namespace trisat {

namespace {

constexpr int kMaxRankCap = 120;

// Label items pack (rank, reason) so that rows split on either.
int item(int rank, Reason reason) { return rank * 8 + static_cast<int>(reason); }

using CellPredicate = std::function<Reason(const LadderEvaluator&, int, int, int)>;

std::vector<TableRow> family_rows(Family family, const std::vector<DynkinType>& types,
                                  const CellPredicate& label_of) {
  if (types.empty()) return {};
  int window = 7;
  for (const DynkinType& t : types) window = std::max(window, stabilization_bound(t));

  LabelGrid grid(window);
  for (const DynkinType& t : types) {
    const LadderEvaluator ev(t);
    for (int a = 2; a <= window; ++a)
      for (int b = a; b <= window; ++b)
        for (int c = b; c <= window; ++c) {
          if (!grid.contains(a, b, c) || in_excluded_set(a, b, c)) continue;
          const Reason r = label_of(ev, a, b, c);
          if (r != Reason::None) grid.insert(a, b, c, item(t.rank(), r));
        }
  }

  std::vector<TableRow> rows;
  for (const CoalescedRow& cr : coalesce(grid, in_excluded_set)) {
    TableRow row;
    row.family = std::string(1, family_letter(family));
    row.pattern = cr.pattern;
    std::set<int> reasons;
    for (int it : cr.label) {
      row.ranks.ranks.push_back(it / 8);
      reasons.insert(it % 8);
    }
    row.ranks.ranks.erase(std::unique(row.ranks.ranks.begin(), row.ranks.ranks.end()),
                          row.ranks.ranks.end());
    for (int r : reasons) {
      if (!row.provenance.empty()) row.provenance += '+';
      row.provenance += reason_name(static_cast<Reason>(r));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> rows_for(const std::vector<DynkinType>& types, const CellPredicate& label_of) {
  std::map<Family, std::vector<DynkinType>> by_family;
  for (const DynkinType& t : types) by_family[t.family()].push_back(t);
  std::vector<TableRow> rows;
  for (const auto& [family, members] : by_family) {
    auto part = family_rows(family, members, label_of);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

Reason last_step_equal(const LadderEvaluator& ev, int a, int b, int c) {
  const std::size_t steps = ev.chain().steps.size() - 1;
  return ev.step_strict(steps - 1, a, b, c) ? Reason::None : Reason::StepEquality;
}

}  // namespace

int required_rank_cap(int which) {
  switch (which) {
    case 1:
    case 3: return 43;
    case 2: return 8;
    case 4: return 6;
    default: break;
  }
  throw InvalidArgument("unknown table " + std::to_string(which) + ", expected 1..4");
}

int table_window(int rank_cap) {
  int w = 7;
  for (const DynkinType& t : canonical_types(rank_cap)) w = std::max(w, stabilization_bound(t));
  return w;
}

std::vector<TableRow> generate_table(int which, int rank_cap) {
  const int need = required_rank_cap(which);
  if (rank_cap < need) {
    throw InvalidArgument("table " + std::to_string(which) + " needs --rank-cap >= " +
                          std::to_string(need) + ", got " + std::to_string(rank_cap));
  }
  if (rank_cap > kMaxRankCap) {
    throw BudgetExceeded("rank cap " + std::to_string(rank_cap) + " exceeds the supported maximum " +
                             std::to_string(kMaxRankCap),
                         kMaxRankCap, static_cast<std::uint64_t>(rank_cap));
  }

  std::vector<TableRow> rows;
  switch (which) {
    case 1: {
      for (const HyperbolicTriple& t : excluded_triples()) {
        rows.push_back({"*", RankSet{{}, true},
                        TriplePattern{{t.a(), false}, {t.b(), false}, {t.c(), false}}, "InS"});
      }
      rows.push_back({"A", RankSet{{1}, false},
                      TriplePattern{{2, true}, {2, true}, {2, true}}, "RankOne"});
      std::vector<DynkinType> types;
      for (const DynkinType& t : canonical_types(rank_cap)) {
        if (!(t.family() == Family::A && t.rank() == 1)) types.push_back(t);
      }
      auto part = rows_for(types, [](const LadderEvaluator& ev, int a, int b, int c) {
        return ev.first_failure(a, b, c);
      });
      rows.insert(rows.end(), part.begin(), part.end());
      break;
    }
    case 2: {
      std::vector<DynkinType> types;
      for (const DynkinType& t : canonical_types(rank_cap)) {
        if (t.rank() > 1 && ladder_chain(t).steps.size() == 1) types.push_back(t);
      }
      rows = rows_for(types, [](const LadderEvaluator& ev, int a, int b, int c) {
        return ev.base_h1(a, b, c) == 0 ? Reason::BaseH1Zero : Reason::None;
      });
      break;
    }
    case 3: {
      std::vector<DynkinType> types;
      for (int r = 3; r <= rank_cap; ++r) {
        if (r != 6) types.emplace_back(Family::A, r);
      }
      for (int r = 5; r <= rank_cap; ++r) types.emplace_back(Family::D, r);
      rows = rows_for(types, last_step_equal);
      break;
    }
    case 4:
      rows = rows_for({DynkinType(Family::B, 3), DynkinType(Family::E, 6)}, last_step_equal);
      break;
  }
  sort_rows(rows);
  return rows;
}

namespace {

constexpr std::size_t kListedDiffs = 50;

std::string cell_str(const Cell& c) {
  return c.type.name() + " (" + std::to_string(c.triple[0]) + "," + std::to_string(c.triple[1]) +
         "," + std::to_string(c.triple[2]) + ")";
}

template <typename T, typename Show>
void diff_sorted(const std::vector<T>& gen, const std::vector<T>& fix, Show show, TableDiff& d) {
  std::vector<T> only_fix, only_gen;
  std::set_difference(fix.begin(), fix.end(), gen.begin(), gen.end(), std::back_inserter(only_fix));
  std::set_difference(gen.begin(), gen.end(), fix.begin(), fix.end(), std::back_inserter(only_gen));
  d.missing_count = only_fix.size();
  d.extra_count = only_gen.size();
  for (std::size_t i = 0; i < only_fix.size() && i < kListedDiffs; ++i) d.missing.push_back(show(only_fix[i]));
  for (std::size_t i = 0; i < only_gen.size() && i < kListedDiffs; ++i) d.extra.push_back(show(only_gen[i]));
  d.match = only_fix.empty() && only_gen.empty();
}

}  // namespace

TableDiff compare_tables(int which, const std::vector<TableRow>& generated, const ParsedTable& fixture,
                         int rank_cap) {
  required_rank_cap(which);
  TableDiff d;
  d.which = which;
  d.extensional = which == 1;
  d.generated_rows = generated.size();
  d.fixture_rows = fixture.rows.size();
  for (const std::string& c : fixture.comments) {
    if (c.rfind("quirk:", 0) == 0) d.notes.push_back(c.substr(c.find_first_not_of(' ', 6)));
  }

  if (!d.extensional) {
    std::vector<std::string> gen, fix;
    for (const TableRow& r : generated) gen.push_back(row_to_csv(r));
    for (const TableRow& r : fixture.rows) fix.push_back(row_to_csv(r));
    std::sort(gen.begin(), gen.end());
    std::sort(fix.begin(), fix.end());
    diff_sorted(gen, fix, [](const std::string& s) { return s; }, d);
    return d;
  }

  int window = table_window(rank_cap);
  for (const auto* rows : {&generated, &fixture.rows}) {
    for (const TableRow& r : *rows) {
      for (const Bound& b : {r.pattern.a, r.pattern.b, r.pattern.c}) window = std::max(window, b.lo + 1);
    }
  }
  d.window = window;
  const std::vector<DynkinType> universe = canonical_types(rank_cap);
  const std::vector<Cell> gen = expand(generated, universe, window);
  const std::vector<Cell> fix = expand(fixture.rows, universe, window);
  d.cells = gen.size();
  diff_sorted(gen, fix, cell_str, d);
  return d;
}

}  // namespace trisat
