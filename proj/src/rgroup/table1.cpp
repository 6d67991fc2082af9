#include "alcove/rgroup.hpp"

namespace alcove {

std::vector<std::string> table1_types() {
  return {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2",  "B3",  "B4",  "B5",  "C2",  "C3",
          "C4", "C5", "D4", "D5", "D6", "D7", "E6", "E7", "2A5", "2A7", "2D3", "2D4", "2D5"};
}

std::vector<long> table1_expected(const std::string& label) {
  const CartanType t = CartanType::parse(label);
  if (t.twist == 2 && (t.series == Series::A || t.series == Series::D)) return {2};
  if (t.twist != 1) throw Error(ErrorKind::InvalidType, label + " has no row in the table");
  switch (t.series) {
    case Series::A: return {t.rank + 1L};
    case Series::B:
    case Series::C: return {2};
    // The printed table gives ℤ/2 for odd n as well.
    case Series::D: return t.rank % 2 == 0 ? std::vector<long>{2, 2} : std::vector<long>{2};
    case Series::E:
      if (t.rank == 6) return {3};
      if (t.rank == 7) return {2};
      break;
    default: break;
  }
  throw Error(ErrorKind::InvalidType, label + " has no row in the table");
}

std::vector<Table1Row> table1() {
  std::vector<Table1Row> rows;
  for (const auto& label : table1_types()) {
    Setting s(CartanType::parse(label), Isogeny::simply_connected);
    Table1Row row;
    row.type = label;
    row.expected = table1_expected(label);
    row.computed = s.omega.quotient.factors_as_long();
    row.match = row.expected == row.computed;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace alcove
