#pragma once

// Base rows of the co-clone table (bases of arity <= 4) and the expected
// complexity of the three optimization problems for each row.

#include <boolhd/boolhd.hpp>

#include <string>
#include <vector>

namespace boolhd::testing {

struct BaseRow {
  std::string label;
  std::vector<std::string> base;
  Complexity nsol, xsol, msd;
};

inline std::vector<BaseRow> base_rows() {
  using C = Complexity;
  std::vector<BaseRow> rows = {
      {"iBF", {"eq"}, C::PO, C::PO, C::PO},
      {"iR0", {"f"}, C::PO, C::PO, C::PO},
      {"iR1", {"t"}, C::PO, C::PO, C::PO},
      {"iR2", {"f", "t"}, C::PO, C::PO, C::PO},
      {"iM", {"impl"}, C::PO, C::PO, C::PO},
      {"iM0", {"impl", "f"}, C::PO, C::PO, C::PO},
      {"iM1", {"impl", "t"}, C::PO, C::PO, C::PO},
      {"iM2", {"impl", "f", "t"}, C::PO, C::PO, C::PO},
      {"iD", {"xor"}, C::PO, C::PO, C::PO},
      {"iD1", {"xor", "t"}, C::PO, C::PO, C::PO},
      {"iD2", {"xor", "impl"}, C::APX_complete, C::PO, C::PO},
      {"iL", {"even4"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL0", {"even4", "f"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL0", {"even3"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL1", {"even4", "t"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL1", {"odd3"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL2", {"even4", "f", "t"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iL3", {"even4", "xor"}, C::NCW_complete, C::MinDist_complete, C::MinDist_complete},
      {"iV", {"dhorn3"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iV0", {"dhorn3", "f"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iV1", {"dhorn3", "t"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iV2", {"dhorn3", "f", "t"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iE", {"horn3"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iE0", {"horn3", "f"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iE1", {"horn3", "t"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iE2", {"horn3", "f", "t"}, C::MinHD_complete, C::MinHD_complete, C::PO},
      {"iN", {"dup3"}, C::pAPX_complete, C::pAPX, C::pAPX},
      {"iN2", {"nae3"}, C::NPO_complete, C::pAPX, C::NPO_complete},
      {"iI", {"even4", "impl"}, C::pAPX_complete, C::pAPX, C::pAPX},
      {"iI0", {"even4", "impl", "f"}, C::pAPX_complete, C::NPO_complete, C::NPO_complete},
      {"iI1", {"even4", "impl", "t"}, C::pAPX_complete, C::NPO_complete, C::NPO_complete},
      {"BR", {"one_in_three"}, C::NPO_complete, C::NPO_complete, C::NPO_complete},
  };
  for (int m = 2; m <= 4; ++m) {
    const std::string k = std::to_string(m), o = "or" + k, na = "nand" + k, s = "^" + k;
    rows.push_back({"iS0" + s, {o}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS02" + s, {o, "f", "t"}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS01" + s, {o, "impl"}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS00" + s, {o, "impl", "f", "t"}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS1" + s, {na}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS12" + s, {na, "f", "t"}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS11" + s, {na, "impl"}, C::APX_complete, C::PO, C::PO});
    rows.push_back({"iS10" + s, {na, "impl", "f", "t"}, C::APX_complete, C::PO, C::PO});
  }
  return rows;
}

inline Language language_of(const std::vector<std::string>& names) {
  Language l;
  for (const auto& n : names) l.resolve(n);
  return l;
}

inline std::vector<Relation> dual_relations(const Language& l) {
  std::vector<Relation> out;
  for (const auto& r : l.relations()) out.push_back(dualize(r));
  return out;
}

}  // namespace boolhd::testing
