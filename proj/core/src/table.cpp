#include "trisat/table.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "trisat/error.hpp"
#include "trisat/triple.hpp"

namespace trisat {

namespace {

int parse_positive(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
    throw InvalidArgument("malformed " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int family_rank(const std::string& family) {
  return family == "*" ? 0 : static_cast<unsigned char>(family[0]);
}

}  // namespace

std::string Bound::str() const { return (open ? ">=" : "") + std::to_string(lo); }

Bound Bound::parse(std::string_view text) {
  text = trim(text);
  const bool open = text.substr(0, 2) == ">=";
  const Bound b{parse_positive(open ? text.substr(2) : text, "bound"), open};
  if (b.lo < 2) throw InvalidArgument("triple bounds start at 2, got " + std::string(text));
  return b;
}

std::string TriplePattern::str() const {
  return "(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

bool RankSet::contains(int r) const noexcept {
  return any || std::binary_search(ranks.begin(), ranks.end(), r);
}

std::string RankSet::encode() const {
  if (any) return "*";
  std::string out;
  for (std::size_t i = 0; i < ranks.size();) {
    std::size_t j = i;
    while (j + 1 < ranks.size() && ranks[j + 1] == ranks[j] + 1) ++j;
    if (!out.empty()) out += ';';
    out += std::to_string(ranks[i]);
    if (j > i) out += "-" + std::to_string(ranks[j]);
    i = j + 1;
  }
  return out;
}

RankSet RankSet::parse(std::string_view text) {
  text = trim(text);
  RankSet rs;
  if (text == "*") {
    rs.any = true;
    return rs;
  }
  for (std::string_view run : split(text, ';')) {
    run = trim(run);
    const auto dash = run.find('-');
    if (dash == std::string_view::npos) {
      rs.ranks.push_back(parse_positive(run, "rank"));
      continue;
    }
    const int lo = parse_positive(run.substr(0, dash), "rank");
    const int hi = parse_positive(run.substr(dash + 1), "rank");
    if (hi < lo) throw InvalidArgument("empty rank run '" + std::string(run) + "'");
    for (int r = lo; r <= hi; ++r) rs.ranks.push_back(r);
  }
  std::sort(rs.ranks.begin(), rs.ranks.end());
  rs.ranks.erase(std::unique(rs.ranks.begin(), rs.ranks.end()), rs.ranks.end());
  return rs;
}

std::string row_to_csv(const TableRow& row) {
  return row.family + "," + row.ranks.encode() + "," + row.pattern.a.str() + "," +
         row.pattern.b.str() + "," + row.pattern.c.str() + "," + row.provenance;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::string out(kTableHeader);
  out += '\n';
  for (const TableRow& row : rows) out += row_to_csv(row) + '\n';
  return out;
}

std::string table_to_markdown(const std::vector<TableRow>& rows) {
  std::string out = "| X | r | (a,b,c) | provenance |\n|---|---|---|---|\n";
  for (const TableRow& row : rows) {
    out += "| " + (row.family == "*" ? std::string("any") : row.family) + " | " +
           (row.ranks.any ? std::string() : row.ranks.encode()) + " | " + row.pattern.str() +
           " | " + row.provenance + " |\n";
  }
  return out;
}

ParsedTable parse_table_csv(std::string_view text) {
  ParsedTable table;
  bool header_seen = false;
  int line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    if (!header_seen) {
      if (line != kTableHeader) {
        throw InvalidArgument("line " + std::to_string(line_no) + ": expected header '" +
                              std::string(kTableHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": expected 6 fields, got " +
                            std::to_string(fields.size()));
    }
    TableRow row;
    row.family = std::string(trim(fields[0]));
    if (row.family != "*") {
      if (row.family.size() != 1) throw InvalidArgument("line " + std::to_string(line_no) + ": bad family");
      family_from_letter(row.family[0]);
    }
    row.ranks = RankSet::parse(fields[1]);
    row.pattern = {Bound::parse(fields[2]), Bound::parse(fields[3]), Bound::parse(fields[4])};
    row.provenance = std::string(trim(fields[5]));
    table.rows.push_back(std::move(row));
  }
  if (!header_seen) throw InvalidArgument("table has no header line");
  return table;
}

void sort_rows(std::vector<TableRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    const int fx = family_rank(x.family), fy = family_rank(y.family);
    if (fx != fy) return fx < fy;
    if (x.pattern != y.pattern) return x.pattern < y.pattern;
    return x.ranks.ranks < y.ranks.ranks;
  });
}

// --- LabelGrid ---------------------------------------------------------------

LabelGrid::LabelGrid(int window) : window_(window) {
  if (window < 7) throw InvalidArgument("label grid window must be >= 7");
  const std::size_t side = static_cast<std::size_t>(window) + 1;
  index_.assign(side * side * side, -1);
  for (int a = 2; a <= window; ++a) {
    for (int b = a; b <= window; ++b) {
      for (int c = b; c <= window; ++c) {
        if (!is_hyperbolic(a, b, c)) continue;
        index_[slot(a, b, c)] = static_cast<std::int32_t>(cells_.size());
        cells_.emplace_back();
      }
    }
  }
}

std::size_t LabelGrid::slot(int a, int b, int c) const {
  const std::size_t side = static_cast<std::size_t>(window_) + 1;
  return (static_cast<std::size_t>(a) * side + b) * side + c;
}

bool LabelGrid::contains(int a, int b, int c) const noexcept {
  if (a < 2 || a > b || b > c || c > window_) return false;
  return index_[slot(a, b, c)] >= 0;
}

void LabelGrid::insert(int a, int b, int c, int item) {
  if (!contains(a, b, c)) throw InvalidArgument("cell outside the label grid");
  auto& cell = cells_[index_[slot(a, b, c)]];
  const auto it = std::lower_bound(cell.begin(), cell.end(), item);
  if (it == cell.end() || *it != item) cell.insert(it, item);
}

const std::vector<int>& LabelGrid::at(int a, int b, int c) const {
  if (!contains(a, b, c)) throw InvalidArgument("cell outside the label grid");
  return cells_[index_[slot(a, b, c)]];
}

// --- coalesce -----------------------------------------------------------------

namespace {

struct Region {
  const LabelGrid& grid;
  const CellFilter& skip;

  bool wildcard(int a, int b, int c) const { return skip && skip(a, b, c); }

  // Compares every non-wildcard cell of the slab to `label`. Returns -1 on a
  // mismatch, otherwise the number of cells compared.
  template <typename Cells>
  int slab_matches(const std::vector<int>*& label, Cells&& cells) const {
    int seen = 0;
    bool ok = true;
    cells([&](int a, int b, int c) {
      if (!ok || !grid.contains(a, b, c) || wildcard(a, b, c)) return;
      const auto& l = grid.at(a, b, c);
      if (!label) label = &l;
      if (l != *label) ok = false;
      ++seen;
    });
    return ok ? seen : -1;
  }
};

}  // namespace

std::vector<CoalescedRow> coalesce(const LabelGrid& grid, const CellFilter& skip) {
  const int w = grid.window();
  Region region{grid, skip};
  std::vector<CoalescedRow> out;

  // a-tail
  const std::vector<int>* tail_label = nullptr;
  int a0 = w + 1;
  for (int a = w; a >= 2; --a) {
    const std::vector<int>* label = tail_label;
    const int seen = region.slab_matches(label, [&](auto&& f) {
      for (int b = a; b <= w; ++b)
        for (int c = b; c <= w; ++c) f(a, b, c);
    });
    if (seen < 0) break;
    tail_label = label;
    if (seen > 0) a0 = a;
  }
  int a_end = w;
  if (tail_label && a0 <= w) {
    if (!tail_label->empty()) {
      out.push_back({TriplePattern{{a0, true}, {a0, true}, {a0, true}}, *tail_label});
    }
    a_end = a0 - 1;
  }

  for (int a = 2; a <= a_end; ++a) {
    // b-tail for this a
    const int bmin = a == 2 ? 3 : a;
    const std::vector<int>* b_label = nullptr;
    int b0 = w + 1;
    for (int b = w; b >= bmin; --b) {
      const std::vector<int>* label = b_label;
      const int seen = region.slab_matches(label, [&](auto&& f) {
        for (int c = b; c <= w; ++c) f(a, b, c);
      });
      if (seen < 0) break;
      b_label = label;
      if (seen > 0) b0 = b;
    }
    int b_end = w;
    if (b_label && b0 <= w) {
      if (!b_label->empty()) {
        out.push_back({TriplePattern{{a, false}, {b0, true}, {b0, true}}, *b_label});
      }
      b_end = b0 - 1;
    }

    for (int b = bmin; b <= b_end; ++b) {
      // c-tail for (a, b)
      const std::vector<int>* c_label = nullptr;
      int c0 = w + 1;
      for (int c = w; c >= b; --c) {
        if (!grid.contains(a, b, c) || region.wildcard(a, b, c)) continue;
        const auto& l = grid.at(a, b, c);
        if (c_label && l != *c_label) break;
        c_label = &l;
        c0 = c;
      }
      if (!c_label) continue;
      if (!c_label->empty()) {
        out.push_back({TriplePattern{{a, false}, {b, false}, {c0, true}}, *c_label});
      }
      for (int c = b; c < c0; ++c) {
        if (!grid.contains(a, b, c) || region.wildcard(a, b, c)) continue;
        const auto& l = grid.at(a, b, c);
        if (!l.empty()) out.push_back({TriplePattern{{a, false}, {b, false}, {c, false}}, l});
      }
    }
  }
  return out;
}

// --- expand -------------------------------------------------------------------

std::vector<Cell> expand(const std::vector<TableRow>& rows, const std::vector<DynkinType>& universe,
                         int window) {
  std::vector<std::array<int, 3>> triples;
  for (int a = 2; a <= window; ++a)
    for (int b = a; b <= window; ++b)
      for (int c = b; c <= window; ++c)
        if (is_hyperbolic(a, b, c)) triples.push_back({a, b, c});

  std::vector<Cell> out;
  for (const TableRow& row : rows) {
    std::vector<DynkinType> types;
    for (const DynkinType& t : universe) {
      if (row.family != "*" && row.family[0] != family_letter(t.family())) continue;
      if (!row.ranks.contains(t.rank())) continue;
      types.push_back(t);
    }
    if (types.empty()) continue;
    for (const auto& n : triples) {
      if (!row.pattern.matches(n[0], n[1], n[2])) continue;
      for (const DynkinType& t : types) out.push_back({t, n});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace trisat
