#include <doctest.h>

#include <random>

#include "alcove/restriction.hpp"

using namespace alcove;

namespace {

TwistedDatum twisted(const char* label) { return build_twisted(CartanType::parse(label), Isogeny::simply_connected); }

}  // namespace

TEST_CASE("trivial group gives back the datum") {
  for (const char* label : {"A3", "B2", "E6"}) {
    CAPTURE(label);
    const BasedRootDatum d = build_datum(CartanType::parse(label), Isogeny::simply_connected);
    const RestrictionResult r = restrict_datum(d, {});
    CHECK(r.group.size() == 1);
    CHECK(r.projection == IntMatrix::identity(d.rank));
    CHECK(cartan_matrix(r.folded) == cartan_matrix(d));
    CHECK(r.folded.roots.size() == d.roots.size());
    for (const auto& f : r.fibers) CHECK(f.size() == 1);
  }
}

TEST_CASE("folded types") {
  struct Case {
    const char* twisted;
    const char* folded;
  };
  for (const Case& c : {Case{"2A2", "BC1"}, Case{"2A3", "C2"}, Case{"2A4", "BC2"}, Case{"2A5", "C3"},
                        Case{"2D3", "C2"}, Case{"2D4", "B3"}, Case{"2D5", "B4"}, Case{"3D4", "G2"},
                        Case{"2E6", "F4"}}) {
    CAPTURE(c.twisted);
    const RestrictionResult r = restrict_datum(twisted(c.twisted));
    CHECK(type_label(identify_type(r.folded)) == c.folded);
    const ValidationReport v = validate(r.folded);
    CHECK_MESSAGE(v.ok, v.violation);
  }
}

TEST_CASE("non-reduced fold of 2A2 uses the doubled coroot rule") {
  const RestrictionResult r = restrict_datum(twisted("2A2"));
  CHECK_FALSE(r.folded.reduced);
  CHECK(std::count(r.doubled.begin(), r.doubled.end(), true) > 0);
  for (std::size_t k = 0; k < r.folded.roots.size(); ++k) {
    if (!r.doubled[k]) continue;
    const IntVector twice = scale(r.folded.roots[k], 2);
    CHECK(r.folded.find_root(twice).has_value());
  }
  // Ω̲ of BC1 is trivial.
  CHECK(folded_omega(r).size() == 1);
}

TEST_CASE("fold invariants") {
  for (const char* label : {"2A3", "2A4", "2A5", "2D4", "3D4", "2E6"}) {
    CAPTURE(label);
    const TwistedDatum t = twisted(label);
    const RestrictionResult r = restrict_datum(t);
    const BasedRootDatum& d = t.datum;
    SUBCASE("fibers partition the roots") {
      std::vector<int> seen(d.roots.size(), 0);
      for (const auto& f : r.fibers)
        for (std::size_t a : f) ++seen[a];
      for (int s : seen) CHECK(s == 1);
    }
    SUBCASE("each fiber restricts to its folded root") {
      for (std::size_t k = 0; k < r.fibers.size(); ++k)
        for (std::size_t a : r.fibers[k]) CHECK(r.projection.apply(d.roots[a]) == r.folded.roots[k]);
    }
    SUBCASE("pairing is 2 on every folded root") {
      for (std::size_t k = 0; k < r.folded.roots.size(); ++k) CHECK(dot(r.folded.roots[k], r.folded.coroot_of(k)) == 2);
    }
    SUBCASE("inclusion lands in the invariants and is dual to the projection") {
      std::mt19937_64 rng(3);
      for (const IntMatrix& g : r.group) {
        const IntMatrix dual = inverse_unimodular(g).transpose();
        CHECK(dual * r.inclusion == r.inclusion);
      }
      for (int trial = 0; trial < 50; ++trial) {
        IntVector x(d.rank), y(r.folded.rank);
        for (auto& c : x) c = static_cast<long>(rng() % 21) - 10;
        for (auto& c : y) c = static_cast<long>(rng() % 21) - 10;
        CHECK(dot(r.projection.apply(x), y) == dot(x, r.inclusion.apply(y)));
      }
    }
  }
}

TEST_CASE("fixed Weyl elements restrict onto the folded Weyl group") {
  struct Case {
    const char* label;
    std::size_t fixed;
  };
  for (const Case& c : {Case{"2A2", 2}, Case{"2A3", 8}, Case{"2A4", 8}, Case{"2A5", 48}, Case{"2D4", 48},
                        Case{"3D4", 12}, Case{"2D5", 384}}) {
    CAPTURE(c.label);
    const TwistedDatum t = twisted(c.label);
    const YuReport y = verify_theorem_yu(t.datum, t.twist);
    CHECK_MESSAGE(y.ok, y.detail);
    CHECK(y.fixed_order == c.fixed);
    CHECK(y.folded_weyl_order == c.fixed);
    CHECK(y.injective);
    CHECK(y.generators_contained);
  }
}

TEST_CASE("folded Omega") {
  CHECK(folded_omega(restrict_datum(twisted("2A5"))).quotient.factors_as_long() == std::vector<long>{2});
  CHECK(folded_omega(restrict_datum(twisted("2D5"))).quotient.factors_as_long() == std::vector<long>{2});
  CHECK(folded_omega(restrict_datum(twisted("3D4"))).size() == 1);
  CHECK(folded_omega(restrict_datum(twisted("2A4"))).size() == 1);
}

TEST_CASE("restriction input checks") {
  const TwistedDatum t = twisted("2A3");
  BasedRootDatum other = build_datum(CartanType::parse("B3"), Isogeny::simply_connected);
  CHECK_THROWS_AS(restrict_datum(other, t.twist), Error);
  const RestrictionResult bc = restrict_datum(twisted("2A2"));
  CHECK_THROWS_AS(restrict_datum(bc.folded, {}), Error);
  CHECK_THROWS_AS(group_closure({IntMatrix::from_rows({{1, 1}, {0, 1}})}), Error);
}
