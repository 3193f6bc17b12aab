#include <doctest.h>

#include <map>
#include <random>

#include "sts/census.hpp"
#include "sts/constructions.hpp"
#include "sts/formulas.hpp"
#include "sts/sl2z.hpp"

using namespace sts;

TEST_SUITE("sl2z") {

TEST_CASE("the torus is fixed by both generators") {
  Origami t = unit_torus();
  CHECK(canonical_key(act_T(t)) == canonical_key(t));
  CHECK(canonical_key(act_S(t)) == canonical_key(t));
  CHECK(orbit(t).size == 1);
  CHECK(veech_index(t) == 1);
  CHECK(is_symmetry_torus(t));
  CHECK(is_characteristic(t));
}

TEST_CASE("S has order four on the nose and (S T) order six up to relabeling") {
  std::mt19937 rng(3);
  auto records = census(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Origami o = records[rng() % records.size()].origami();
    CHECK(act_S(act_S(act_S(act_S(o)))) == o);
    Origami cur = o;
    for (int i = 0; i < 6; ++i) cur = act_S(act_T(cur));
    CHECK(canonical_key(cur) == canonical_key(o));
    CHECK(canonical_key(act_T_inv(act_T(o))) == canonical_key(o));
    CHECK(canonical_key(act_T_pow(o, 3)) ==
          canonical_key(act_T(act_T(act_T(o)))));
    CHECK(canonical_key(act_S_inv(act_S(o))) == canonical_key(o));
  }
}

TEST_CASE("generators preserve square count, stratum, reducedness, primitivity") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& r : census(n)) {
      Origami o = r.origami();
      for (const Origami& image : {act_T(o), act_S(o)}) {
        CHECK(image.squares() == n);
        CHECK(stratum(image) == r.stratum);
        CHECK(is_reduced(image) == r.reduced);
        CHECK(is_primitive(image) == r.primitive);
      }
    }
  }
}

TEST_CASE("one-cylinder shear orbit closes after the circumference") {
  // T shifts the shear of a one-cylinder surface by its height step
  Origami o = build_h2(H2OneCylinder{2, 1, 1, 1, 0});
  CHECK(canonical_key(act_T(o)) == canonical_key(build_h2(H2OneCylinder{2, 1, 1, 1, 1})));
  Origami cur = o;
  for (int i = 0; i < 4; ++i) cur = act_T(cur);  // k+l+m = 4 shears
  CHECK(canonical_key(cur) == canonical_key(o));
}

TEST_CASE("named orbit sizes") {
  CHECK(orbit(l_shaped(5)).size == 18);
  CHECK(orbit(l_shaped(6)).size == 36);
  CHECK(veech_index(four_square_holonomy_torus()) == 6);
  CHECK(orbit(ew_surface()).size == 1);
  CHECK(orbit(swiss_cross()).size == 9);
}

TEST_CASE("orbit summary is closed under both generators") {
  OrbitSummary orb = orbit(l_shaped(5));
  CHECK(orb.size == orb.representatives.size());
  for (const auto& key : orb.representatives) {
    Origami o = origami_from_key(key);
    CHECK(orb.representatives.count(canonical_key(act_T(o))) == 1);
    CHECK(orb.representatives.count(canonical_key(act_S(o))) == 1);
  }
}

TEST_CASE("orbit cap reports a partial result") {
  CHECK_THROWS_AS(orbit(l_shaped(6), 10), OrbitCapExceeded);
}

TEST_CASE("veech index rejects non-reduced input") {
  Origami two_wide(Perm::from_cycles(2, {{1, 2}}), Perm::identity(2));
  CHECK_THROWS_AS(veech_index(two_wide), std::invalid_argument);
}

TEST_CASE("symmetry tori") {
  CHECK(is_symmetry_torus(ornithorynque()));
  CHECK_FALSE(is_symmetry_torus(four_square_holonomy_torus()));
  CHECK_FALSE(is_symmetry_torus(l_shaped(5)));
  // non-reduced surfaces are never symmetry tori
  CHECK_FALSE(is_symmetry_torus(Origami(Perm::from_cycles(2, {{1, 2}}), Perm::identity(2))));
}

TEST_CASE("characteristic surfaces") {
  CHECK(is_characteristic(ew_surface()));
  CHECK(is_characteristic(unit_torus()));
  CHECK_FALSE(is_characteristic(ornithorynque()));  // symmetry but not normal
  CHECK_FALSE(is_characteristic(four_square_holonomy_torus()));
}

TEST_CASE("both characteristic routes agree across a census") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& r : census(n)) CHECK_NOTHROW(is_characteristic(r.origami()));
}

TEST_CASE("reduced H(2) orbit sizes match the closed forms") {
  for (int n = 3; n <= 8; ++n) {
    std::multiset<std::uint64_t> got;
    for (const auto& r : census_stratum(n, Stratum{2}))
      if (r.reduced && r.orbit_size) got.insert(*r.orbit_size);
    H2OrbitSizes want = lr_orbit_sizes(n);
    std::multiset<std::uint64_t> expect;
    // each orbit contributes its size once per member
    for (std::int64_t i = 0; i < want.first; ++i)
      expect.insert(static_cast<std::uint64_t>(want.first));
    if (want.two_orbits)
      for (std::int64_t i = 0; i < want.second; ++i)
        expect.insert(static_cast<std::uint64_t>(want.second));
    CHECK(got == expect);
  }
}

TEST_CASE("the n=9 reduced H(2) family splits into two orbits of sizes 108 and 81") {
  std::vector<CanonicalKey> keys;
  for (const auto& k : h2_family_keys(9)) keys.push_back(k);
  std::map<std::uint64_t, std::int64_t> members;
  for (const auto& r : classify_keys(std::move(keys)))
    if (r.reduced) ++members[*r.orbit_size];
  H2OrbitSizes want = lr_orbit_sizes(9);
  CHECK(want.first == 108);
  CHECK(want.second == 81);
  CHECK(members == std::map<std::uint64_t, std::int64_t>{{108, 108}, {81, 81}});
}

TEST_CASE("word reduction sends primitive vectors to (1,0)") {
  std::mt19937 rng(17);
  auto apply_matrix = [](std::pair<std::int64_t, std::int64_t> v, Gen g) {
    switch (g) {
      case Gen::T: return std::make_pair(v.first + v.second, v.second);
      case Gen::TInv: return std::make_pair(v.first - v.second, v.second);
      case Gen::S: return std::make_pair(-v.second, v.first);
    }
    return v;
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t p = std::int64_t(rng() % 41) - 20;
    std::int64_t q = std::int64_t(rng() % 41) - 20;
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1) continue;
    std::pair<std::int64_t, std::int64_t> v{p, q};
    for (Gen g : word_sending_to_horizontal(p, q)) v = apply_matrix(v, g);
    CHECK(v == std::make_pair(std::int64_t{1}, std::int64_t{0}));
  }
}

}  // TEST_SUITE
