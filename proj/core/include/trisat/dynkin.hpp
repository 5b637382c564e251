#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace trisat {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f) noexcept;
Family family_from_letter(char letter);

bool is_admissible(Family family, int rank) noexcept;

/// An irreducible Dynkin diagram. Construction validates the rank, so every
/// DynkinType value in circulation is admissible.
class DynkinType {
 public:
  DynkinType(Family family, int rank);

  /// Parses "A_7", "D_43", "G_2" (also accepts "A7").
  static DynkinType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  /// "A_7"
  std::string name() const;

  /// B_2 and C_2 are the same root system; tables list it once, as C_2.
  bool is_canonical() const noexcept { return !(family_ == Family::B && rank_ == 2); }

  friend auto operator<=>(const DynkinType&, const DynkinType&) = default;
  friend bool operator==(const DynkinType&, const DynkinType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Every canonical type with rank <= rank_cap, in (family, rank) order.
std::vector<DynkinType> canonical_types(int rank_cap);

}  // namespace trisat
