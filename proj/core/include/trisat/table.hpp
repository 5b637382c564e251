#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "trisat/dynkin.hpp"

namespace trisat {

/// One component of a triple pattern: an exact value "7" or a tail ">=7".
struct Bound {
  int lo = 2;
  bool open = false;

  bool matches(int v) const noexcept { return open ? v >= lo : v == lo; }
  std::string str() const;
  static Bound parse(std::string_view text);

  friend auto operator<=>(const Bound&, const Bound&) = default;
  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Set of hyperbolic sorted triples (a,b,c) whose components match the three
/// bounds. "(2,>=5,>=5)" is every hyperbolic (2,b,c) with 5 <= b <= c.
struct TriplePattern {
  Bound a, b, c;

  bool matches(int x, int y, int z) const noexcept {
    return a.matches(x) && b.matches(y) && c.matches(z);
  }
  std::string str() const;

  friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

/// Explicit set of ranks, or "*" (every type).
struct RankSet {
  std::vector<int> ranks;
  bool any = false;

  bool contains(int r) const noexcept;
  /// Maximal runs joined by ';', e.g. "3-5;7-19". "*" for any.
  std::string encode() const;
  static RankSet parse(std::string_view text);

  friend bool operator==(const RankSet&, const RankSet&) = default;
};

/// One line of a table file: family,rank_set,a,b,c,provenance
struct TableRow {
  std::string family;  ///< "A".."G", or "*" for every type
  RankSet ranks;
  TriplePattern pattern;
  std::string provenance;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::string_view kTableHeader = "family,rank_set,a,b,c,provenance";

std::string row_to_csv(const TableRow& row);
std::string table_to_csv(const std::vector<TableRow>& rows);
std::string table_to_markdown(const std::vector<TableRow>& rows);

struct ParsedTable {
  std::vector<TableRow> rows;
  /// Text of "# ..." lines, without the marker.
  std::vector<std::string> comments;
};

ParsedTable parse_table_csv(std::string_view text);

/// Family order, then pattern, then ranks.
void sort_rows(std::vector<TableRow>& rows);

// --- coalescing -----------------------------------------------------------

/// Per-triple labels (sorted integer sets) on the hyperbolic sorted triples
/// with entries in [2, window]. The value `window` stands for every n >= window.
class LabelGrid {
 public:
  explicit LabelGrid(int window);

  int window() const noexcept { return window_; }
  bool contains(int a, int b, int c) const noexcept;
  void insert(int a, int b, int c, int item);
  const std::vector<int>& at(int a, int b, int c) const;

 private:
  std::size_t slot(int a, int b, int c) const;

  int window_;
  std::vector<std::int32_t> index_;
  std::vector<std::vector<int>> cells_;
};

struct CoalescedRow {
  TriplePattern pattern;
  std::vector<int> label;
};

using CellFilter = std::function<bool(int a, int b, int c)>;

/// Turns a label grid into pattern rows. Cells for which `skip` holds are
/// wildcards: they never break a run and never produce a row of their own.
/// Tails are recognised from the window boundary inwards, in the order
/// a-tail (">=a0" everywhere), b-tail for a fixed a, c-tail for fixed (a,b);
/// remaining cells with a nonempty label become explicit rows. Empty labels
/// produce no rows.
std::vector<CoalescedRow> coalesce(const LabelGrid& grid, const CellFilter& skip = {});

// --- extensional comparison -------------------------------------------------

struct Cell {
  DynkinType type;
  std::array<int, 3> triple;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Every (type, triple) covered by the rows, for types in `universe` and
/// hyperbolic sorted triples with entries <= window. Sorted, unique.
std::vector<Cell> expand(const std::vector<TableRow>& rows, const std::vector<DynkinType>& universe,
                         int window);

}  // namespace trisat
