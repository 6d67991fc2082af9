#include <cctype>

#include "alcove/rootdata.hpp"

namespace alcove {

std::string_view to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::E: return "E";
    case Series::F: return "F";
    case Series::G: return "G";
    case Series::BC: return "BC";
  }
  return "?";
}

std::string_view to_string(Isogeny i) {
  return i == Isogeny::simply_connected ? "sc" : "adjoint";
}

Isogeny parse_isogeny(std::string_view text) {
  if (text == "sc" || text == "simply_connected") return Isogeny::simply_connected;
  if (text == "adjoint" || text == "ad") return Isogeny::adjoint;
  throw Error(ErrorKind::InvalidType, "unknown isogeny '" + std::string(text) + "'");
}

std::string CartanType::label() const {
  std::string s;
  if (twist > 1) s += std::to_string(twist);
  s += to_string(series);
  s += std::to_string(rank);
  return s;
}

namespace {

void check_rank(Series series, int rank) {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 3; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
    case Series::BC: ok = rank >= 1; break;
  }
  if (!ok) {
    throw Error(ErrorKind::InvalidRank, std::string(to_string(series)) + std::to_string(rank) + " is not a valid type");
  }
}

}  // namespace

CartanType CartanType::parse(std::string_view text) {
  std::size_t pos = 0;
  CartanType t;
  if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    t.twist = text[pos] - '0';
    ++pos;
  }
  if (pos >= text.size()) throw Error(ErrorKind::InvalidType, "empty type label");
  if (text.substr(pos, 2) == "BC") {
    t.series = Series::BC;
    pos += 2;
  } else {
    switch (std::toupper(static_cast<unsigned char>(text[pos]))) {
      case 'A': t.series = Series::A; break;
      case 'B': t.series = Series::B; break;
      case 'C': t.series = Series::C; break;
      case 'D': t.series = Series::D; break;
      case 'E': t.series = Series::E; break;
      case 'F': t.series = Series::F; break;
      case 'G': t.series = Series::G; break;
      default: throw Error(ErrorKind::InvalidType, "unknown series in '" + std::string(text) + "'");
    }
    ++pos;
  }
  std::string digits(text.substr(pos));
  if (digits.empty() || digits.size() > 3) throw Error(ErrorKind::InvalidType, "missing rank in '" + std::string(text) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorKind::InvalidType, "bad rank in '" + std::string(text) + "'");
  }
  t.rank = std::stoi(digits);
  check_rank(t.series, t.rank);
  if (t.twist != 1) t.twist_permutation = standard_twist(t.series, t.rank, t.twist);
  return t;
}

std::vector<int> standard_twist(Series series, int rank, int order) {
  std::vector<int> perm(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) perm[static_cast<std::size_t>(i)] = i;
  if (order == 1) return perm;
  if (order == 2 && series == Series::A && rank >= 2) {
    for (int i = 0; i < rank; ++i) perm[static_cast<std::size_t>(i)] = rank - 1 - i;
    return perm;
  }
  if (order == 2 && series == Series::D) {
    std::swap(perm[static_cast<std::size_t>(rank - 2)], perm[static_cast<std::size_t>(rank - 1)]);
    return perm;
  }
  if (order == 3 && series == Series::D && rank == 4) {
    perm = {2, 1, 3, 0};
    return perm;
  }
  if (order == 2 && series == Series::E && rank == 6) {
    perm = {5, 1, 4, 3, 2, 0};
    return perm;
  }
  throw Error(ErrorKind::InvalidType, "no diagram automorphism of order " + std::to_string(order) + " on " +
                                          std::string(to_string(series)) + std::to_string(rank));
}

IntMatrix cartan_matrix(Series series, int rank) {
  check_rank(series, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (series) {
    case Series::A:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
    case Series::BC:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (n >= 2) a(n - 1, n - 2) = -2;
      break;
    case Series::C:
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Series::D:
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E:
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;
      break;
    case Series::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

}  // namespace alcove
