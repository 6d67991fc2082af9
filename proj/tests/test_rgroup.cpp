#include <doctest.h>

#include <random>

#include "alcove/rgroup.hpp"

using namespace alcove;

namespace {

Setting setting(const char* label) { return Setting(CartanType::parse(label), Isogeny::simply_connected); }

RationalVector from_weights(const AlcoveGeometry& g, const std::vector<long>& w) {
  RationalVector x(g.dimension(), Rational(0));
  long total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    total += w[i];
    x = add(x, scale(g.vertices()[i], Rational(w[i])));
  }
  return scale(x, Rational(1, total));
}

bool contains_all(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("setting for untwisted and twisted types") {
  const Setting a3 = setting("A3");
  CHECK(a3.sigma() == IntMatrix::identity(3));
  CHECK(a3.omega.size() == 4);
  const Setting t = setting("2A5");
  CHECK(type_label(identify_type(t.restriction.folded)) == "C3");
  CHECK(t.omega.size() == 2);
  CHECK_FALSE(t.sigma() == IntMatrix::identity(5));
}

TEST_CASE("parameter points") {
  const Setting s = setting("A3");
  CHECK(parse_point(s.alcove, "c0").point == s.alcove.barycenter());
  const RationalVector f = parse_point(s.alcove, "face:0,2").point;
  const auto vals = s.alcove.wall_values(f);
  CHECK(vals[0] == 0);
  CHECK(vals[2] == 0);
  CHECK(vals[1] > 0);
  CHECK(vals[3] > 0);
  CHECK(parse_point(s.alcove, "1/4, 0, 1/4").point == RationalVector{Rational(1, 4), 0, Rational(1, 4)});
  CHECK_THROWS_AS(parse_point(s.alcove, "1/4,0"), Error);
  CHECK_THROWS_AS(parse_point(s.alcove, "face:9"), Error);
  CHECK_THROWS_AS(parse_point(s.alcove, "face:0,1,2,3"), Error);
  CHECK_THROWS_AS(parse_point(s.alcove, "nonsense"), Error);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) CHECK(s.alcove.contains(random_alcove_point(s.alcove, rng)));
}

TEST_CASE("stabilizer examples") {
  const Setting s = setting("A3");
  SUBCASE("barycenter is fixed by everything") {
    CHECK(stabilizer(s.alcove, s.omega, s.alcove.barycenter()).order() == 4);
  }
  SUBCASE("generic perturbation of the barycenter") {
    RationalVector x = s.alcove.barycenter();
    x[0] += Rational(1, 97);
    x[1] -= Rational(1, 89);
    REQUIRE(s.alcove.in_interior(x));
    const StabilizerSubgroup st = stabilizer(s.alcove, s.omega, x);
    CHECK(st.order() == 1);
    CHECK(st.iso_type.empty());
  }
  SUBCASE("midpoint of an orbit of the order-two element") {
    // The order-two element ω swaps the vertices pairwise, so the midpoint of
    // v1 and ω(v1) is fixed by ω but moved by the generators of order four.
    const std::size_t two = s.omega.by_class(GroupElement{2});
    const RationalVector v = s.alcove.vertices()[1];
    const RationalVector m = scale(add(v, act(s.omega.elements[two], v)), Rational(1, 2));
    const StabilizerSubgroup st = stabilizer(s.alcove, s.omega, m);
    CHECK(st.order() == 2);
    CHECK(st.iso_type == std::vector<Integer>{2});
    CHECK(std::find(st.elements.begin(), st.elements.end(), two) != st.elements.end());
  }
  SUBCASE("points outside the alcove are rejected") {
    CHECK_THROWS_AS(stabilizer(s.alcove, s.omega, RationalVector{-1, 0, 0}), Error);
  }
}

TEST_CASE("stabilizer properties") {
  for (const char* label : {"A4", "D4", "D5", "2A5", "2D4", "E6"}) {
    CAPTURE(label);
    const Setting s = setting(label);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const RationalVector x = random_alcove_point(s.alcove, rng);
      const StabilizerSubgroup st = stabilizer(s.alcove, s.omega, x);
      CHECK(is_subgroup(s.omega, st.elements));
      for (std::size_t k : st.elements) CHECK(act(s.omega.elements[k], x) == x);
      // equivariance (Ω̲ is abelian, so conjugation is trivial)
      const std::size_t w = rng() % s.omega.size();
      const RationalVector y = act(s.omega.elements[w], x);
      CHECK(s.alcove.contains(y));
      CHECK(stabilizer(s.alcove, s.omega, y).elements == st.elements);
    }
  }
}

TEST_CASE("stabilizers grow toward the boundary of a face") {
  const Setting s = setting("A5");
  const std::size_t n = s.alcove.walls();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    // Distinct nonzero weights make the point generic in its face.
    std::vector<long> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    for (auto& x : w)
      if (rng() % 3 == 0) x = 0;
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) w[0] = 1;
    const auto generic = stabilizer(s.alcove, s.omega, from_weights(s.alcove, w)).elements;
    // drop one more vertex: the new point lies in the closure of the face
    std::vector<long> w2 = w;
    for (std::size_t i = 0; i < n; ++i) {
      if (w2[i] != 0 && std::count_if(w2.begin(), w2.end(), [](long x) { return x != 0; }) > 1) {
        w2[i] = 0;
        break;
      }
    }
    const auto boundary = stabilizer(s.alcove, s.omega, from_weights(s.alcove, w2)).elements;
    // The generic stabilizer fixes the face pointwise, hence every point of its closure.
    CHECK(contains_all(boundary, generic));
  }
}

TEST_CASE("compatibility of the action with translation") {
  for (const char* label : {"A3", "B3", "C4", "D4", "D5", "E6", "E7", "2A5", "2D3", "2D5"}) {
    CAPTURE(label);
    const Setting s = setting(label);
    const std::size_t id = s.omega.identity_index();
    const CompatibilityResult at_c0 = compatibility_check(s.alcove, s.omega, s.omega.size() - 1, s.alcove.barycenter());
    CHECK(at_c0.ok);
    CHECK(at_c0.lhs == s.alcove.barycenter());
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const RationalVector x = random_alcove_point(s.alcove, rng);
      const CompatibilityResult trivial = compatibility_check(s.alcove, s.omega, id, x);
      CHECK(trivial.ok);
      CHECK(trivial.lhs == x);
      for (std::size_t a = 0; a < s.omega.size(); ++a) CHECK(compatibility_check(s.alcove, s.omega, a, x).ok);
    }
  }
}

TEST_CASE("coinvariants bridge") {
  SUBCASE("untwisted A3") {
    const CoinvariantsBridge b = coinvariants_bridge(setting("A3"));
    CHECK(b.a_sigma.factors_as_long() == std::vector<long>{4});
    CHECK(b.folded_quotient.factors_as_long() == std::vector<long>{4});
    CHECK(b.surjection == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(b.kernel.size() == 1);
    CHECK(b.torsion_type.empty());
    CHECK(b.kernel_matches_torsion);
  }
  // (Z/n)_σ with σ = −1 is Z/gcd(n, 2); the folded quotients are read off the folded types.
  struct Case {
    const char* label;
    long a_sigma;
    long folded;
  };
  for (const Case& c : {Case{"2A3", 2, 2}, Case{"2A4", 1, 1}, Case{"2A5", 2, 2}, Case{"2D4", 2, 2},
                        Case{"2D5", 2, 2}, Case{"3D4", 1, 1}, Case{"2E6", 1, 1}}) {
    CAPTURE(c.label);
    const CoinvariantsBridge b = coinvariants_bridge(setting(c.label));
    CHECK(b.a_sigma.order() == c.a_sigma);
    CHECK(b.folded_quotient.order() == c.folded);
    CHECK(b.homomorphism);
    CHECK(b.surjective);
    CHECK(Integer(static_cast<long>(b.kernel.size())) * b.folded_quotient.order() == b.a_sigma.order());
  }
}

TEST_CASE("order law") {
  for (const char* label : {"A3", "D4", "2A3", "2D5", "E6"}) {
    CAPTURE(label);
    const Setting s = setting(label);
    const CoinvariantsBridge b = coinvariants_bridge(s);
    const OrderReport full = sphi_order(s, b, s.alcove.barycenter());
    CHECK(full.a_phi_preimage == static_cast<std::size_t>(b.a_sigma.order().get_ui()));
    CHECK(full.ok);
    RationalVector x = s.alcove.barycenter();
    x[0] += Rational(1, 101);
    const OrderReport generic = sphi_order(s, b, x);
    CHECK(generic.omega_phi == 1);
    CHECK(generic.a_phi_preimage == generic.kernel);
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
      const OrderReport r = sphi_order(s, b, random_alcove_point(s.alcove, rng));
      CHECK(r.ok);
      CHECK(r.a_phi_action == r.a_phi_preimage);
    }
  }
}

TEST_CASE("classification of stabilizers") {
  struct Case {
    const char* label;
    std::size_t subgroups;
  };
  for (const Case& c : {Case{"A3", 3}, Case{"D4", 5}, Case{"E7", 2}, Case{"A5", 4}, Case{"2A5", 2}, Case{"G2", 1}}) {
    CAPTURE(c.label);
    const Setting s = setting(c.label);
    const Classification cl = classify_stabilizers(s);
    CHECK(cl.subgroups.size() == c.subgroups);
    CHECK(cl.all_realized);
    for (const auto& r : cl.subgroups) {
      REQUIRE(r.realized);
      CHECK(stabilizer(s.alcove, s.omega, r.witness).elements == r.subgroup.members);
    }
  }
}

TEST_CASE("table rows") {
  const auto rows = table1();
  CHECK(rows.size() == table1_types().size());
  for (const auto& row : rows) {
    CAPTURE(row.type);
    const CartanType t = CartanType::parse(row.type);
    if (t.series == Series::D && t.twist == 1 && t.rank % 2 == 1) {
      // The printed column lists Z/2 here; the computed X/Q is Z/4.
      CHECK(row.expected == std::vector<long>{2});
      CHECK(row.computed == std::vector<long>{4});
      CHECK_FALSE(row.match);
    } else {
      CHECK(row.match);
    }
  }
  CHECK(table1_expected("B3") == std::vector<long>{2});
  CHECK(table1_expected("E6") == std::vector<long>{3});
}
