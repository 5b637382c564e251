#include "trisat/dynkin.hpp"

#include <charconv>

#include "trisat/error.hpp"

namespace trisat {

char family_letter(Family f) noexcept { return static_cast<char>(f); }

Family family_from_letter(char letter) {
  switch (letter) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: break;
  }
  throw InvalidArgument(std::string("unknown Dynkin family '") + letter + "'");
}

bool is_admissible(Family family, int rank) noexcept {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 4;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

namespace {

std::string admissible_ranks(Family f) {
  switch (f) {
    case Family::A: return "r >= 1";
    case Family::B:
    case Family::C: return "r >= 2";
    case Family::D: return "r >= 4";
    case Family::E: return "r in {6,7,8}";
    case Family::F: return "r = 4";
    case Family::G: return "r = 2";
  }
  return {};
}

}  // namespace

DynkinType::DynkinType(Family family, int rank) : family_(family), rank_(rank) {
  if (!is_admissible(family, rank)) {
    throw InvalidArgument(std::string(1, family_letter(family)) + "_" + std::to_string(rank) +
                          " is not an irreducible Dynkin diagram (" + family_letter(family) +
                          "_r needs " + admissible_ranks(family) + ")");
  }
}

DynkinType DynkinType::parse(std::string_view text) {
  const std::string quoted = "'" + std::string(text) + "'";
  if (text.size() < 2) throw InvalidArgument("malformed Dynkin type " + quoted + ", expected e.g. A_7");
  const Family f = family_from_letter(text[0]);
  std::string_view digits = text.substr(1);
  if (!digits.empty() && digits[0] == '_') digits.remove_prefix(1);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw InvalidArgument("malformed Dynkin type " + quoted + ", expected e.g. A_7");
  }
  return DynkinType(f, rank);
}

std::string DynkinType::name() const {
  return std::string(1, family_letter(family_)) + "_" + std::to_string(rank_);
}

std::vector<DynkinType> canonical_types(int rank_cap) {
  std::vector<DynkinType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
    for (int r = 1; r <= rank_cap; ++r) {
      if (!is_admissible(f, r)) continue;
      DynkinType t(f, r);
      if (t.is_canonical()) out.push_back(t);
    }
  }
  return out;
}

}  // namespace trisat
