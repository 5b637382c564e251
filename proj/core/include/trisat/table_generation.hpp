#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trisat/dynkin.hpp"
#include "trisat/table.hpp"

namespace trisat {

inline constexpr int kDefaultRankCap = 50;

/// Smallest rank cap at which table `which` (1..4) is complete.
int required_rank_cap(int which);

/// Largest stabilization bound over the canonical types of rank <= rank_cap.
int table_window(int rank_cap);

/// Regenerates one exception table.
///   1: every (type, triple) that is not Saturated, plus the excluded set
///   2: direct types with principal H^1 = 0
///   3: A_r (r >= 3, r != 6) and D_r (r >= 5) steps with L = R
///   4: the G_2 < B_3 and F_4 < E_6 steps with L = R
/// Throws InvalidArgument for an unknown table or rank_cap < required_rank_cap.
std::vector<TableRow> generate_table(int which, int rank_cap = kDefaultRankCap);

struct TableDiff {
  int which = 0;
  /// Table 1 is compared as sets of (type, triple) cells, the others row by row.
  bool extensional = false;
  bool match = false;
  std::size_t generated_rows = 0;
  std::size_t fixture_rows = 0;
  std::size_t cells = 0;    ///< extensional mode: size of the generated cell set
  int window = 0;           ///< extensional mode: largest entry enumerated
  std::size_t missing_count = 0;  ///< in the fixture, not generated
  std::size_t extra_count = 0;    ///< generated, not in the fixture
  std::vector<std::string> missing;  ///< first entries only
  std::vector<std::string> extra;
  /// "quirk:" comments of the fixture.
  std::vector<std::string> notes;
};

TableDiff compare_tables(int which, const std::vector<TableRow>& generated, const ParsedTable& fixture,
                         int rank_cap = kDefaultRankCap);

}  // namespace trisat
