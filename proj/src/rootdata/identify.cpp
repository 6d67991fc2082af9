#include <functional>
#include <map>

#include "alcove/rootdata.hpp"

namespace alcove {

namespace {

// Searches for a node ordering p with m(p[i], p[j]) == ref(i, j).
bool match_up_to_permutation(const IntMatrix& m, const IntMatrix& ref) {
  const std::size_t n = m.rows();
  if (ref.rows() != n) return false;
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = m(c, perm[k]) == ref(i, k) && m(perm[k], c) == ref(k, i);
      }
      if (!ok || m(c, c) != ref(i, i)) continue;
      used[c] = true;
      perm[i] = c;
      if (place(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return place(0);
}

// Canonical labels: B2 is reported as C2 and D3 as A3.
std::vector<CartanType> candidates(int r) {
  std::vector<CartanType> out;
  auto add = [&](Series s) { out.push_back(CartanType{s, r, 1, {}}); };
  add(Series::A);
  if (r >= 3) add(Series::B);
  if (r >= 2) add(Series::C);
  if (r >= 4) add(Series::D);
  if (r >= 6 && r <= 8) add(Series::E);
  if (r == 4) add(Series::F);
  if (r == 2) add(Series::G);
  return out;
}

}  // namespace

std::vector<IdentifiedComponent> identify_type(const BasedRootDatum& d) {
  const IntMatrix full = cartan_matrix(d);
  const auto comps = irreducible_components(d);

  std::vector<bool> nonreduced_node(d.simple.size(), false);
  {
    std::map<IntVector, std::size_t> index;
    for (std::size_t i = 0; i < d.roots.size(); ++i) index.emplace(d.roots[i], i);
    std::vector<RationalVector> coords;
    bool have_coords = false;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
      if (!index.count(scale(d.roots[i], 2))) continue;
      if (!have_coords) {
        coords = root_coordinates(d);
        have_coords = true;
      }
      for (std::size_t k = 0; k < d.simple.size(); ++k)
        if (coords[i][k] != 0) nonreduced_node[k] = true;
    }
  }

  std::vector<IdentifiedComponent> out;
  for (const auto& comp : comps) {
    const std::size_t r = comp.size();
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        m(i, j) = full(static_cast<std::size_t>(comp[i]), static_cast<std::size_t>(comp[j]));
    bool nonreduced = false;
    for (int node : comp) nonreduced = nonreduced || nonreduced_node[static_cast<std::size_t>(node)];
    const int rank = static_cast<int>(r);
    if (nonreduced) {
      IntMatrix ref = rank == 1 ? cartan_matrix(Series::A, 1) : cartan_matrix(Series::B, rank);
      if (!match_up_to_permutation(m, ref)) {
        throw Error(ErrorKind::Unrecognized, "non-reduced component with Cartan matrix " + m.to_string());
      }
      out.push_back({CartanType{Series::BC, rank, 1, {}}, comp});
      continue;
    }
    bool found = false;
    for (const auto& cand : candidates(rank)) {
      if (match_up_to_permutation(m, cartan_matrix(cand.series, cand.rank))) {
        out.push_back({cand, comp});
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::Unrecognized, "Cartan matrix " + m.to_string());
  }
  return out;
}

std::string type_label(const std::vector<IdentifiedComponent>& components) {
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += components[i].type.label();
  }
  return s.empty() ? "T" : s;
}

}  // namespace alcove
