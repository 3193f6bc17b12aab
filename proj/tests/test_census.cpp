#include <doctest.h>

#include "oracles.hpp"
#include "sts/census.hpp"
#include "sts/constructions.hpp"
#include "sts/formulas.hpp"

using namespace sts;

TEST_SUITE("census") {

TEST_CASE("class counts at small n") {
  static const std::int64_t kTotal[] = {1, 3, 7, 26, 97, 624};
  static const std::int64_t kReduced[] = {1, 0, 3, 19, 91, 603};
  static const std::int64_t kPrimitive[] = {1, 0, 3, 13, 91, 500};
  for (int n = 1; n <= 6; ++n) {
    CensusSummary s = summarize(census(n));
    CHECK(s.total == kTotal[n - 1]);
    CHECK(s.reduced == kReduced[n - 1]);
    CHECK(s.primitive == kPrimitive[n - 1]);
  }
}

TEST_CASE("fake torus category counts at small n") {
  static const std::int64_t kSymm[] = {0, 0, 0, 0, 0};
  static const std::int64_t kHol[] = {0, 3, 10, 40, 254};
  static const std::int64_t kNonvis[] = {0, 0, 0, 0, 36};
  for (int n = 2; n <= 6; ++n) {
    CensusSummary s = summarize(census(n));
    CHECK(s.symmetry == kSymm[n - 2]);
    CHECK(s.holonomy == kHol[n - 2]);
    CHECK(s.nonvisibility == kNonvis[n - 2]);
  }
}

TEST_CASE("enumeration agrees with the all-pairs oracle") {
  for (int n = 1; n <= 5; ++n) {
    std::set<CanonicalKey> expect = testing::naive_census_keys(n);
    std::set<CanonicalKey> got;
    for (auto& key : census_keys(n)) got.insert(std::move(key));
    CHECK(got == expect);
  }
}

TEST_CASE("genus-one classes are counted by the divisor sum") {
  // index-n sublattices of Z^2 <-> unbranched torus covers
  for (int n = 1; n <= 7; ++n) {
    std::int64_t genus_one = 0;
    CensusOptions opt;
    opt.classify = false;
    for (const auto& r : census(n, opt)) genus_one += r.stratum.empty();
    CHECK(genus_one == divisor_sigma(1, n));
  }
}

TEST_CASE("stratum slices") {
  CHECK(census_stratum(2, Stratum{2}).empty());
  auto h2_min = census_stratum(3, Stratum{2});
  CHECK(h2_min.size() == 3);
  for (const auto& r : h2_min) CHECK(r.holonomy_torus);
  for (const auto& r : census_stratum(4, Stratum{1, 1})) CHECK(r.holonomy_torus);
  CHECK_THROWS_AS(census_stratum(4, Stratum{1}), std::invalid_argument);
}

TEST_CASE("the n=7 H(2) slice is entirely non-visibility") {
  auto slice = census_stratum(7, Stratum{2});
  std::int64_t reduced = 0, nonvis = 0;
  for (const auto& r : slice) {
    reduced += r.reduced;
    nonvis += r.reduced && !r.visibility;
  }
  CHECK(reduced == 90);
  CHECK(nonvis == 90);
}

TEST_CASE("record invariants across censuses") {
  for (int n = 1; n <= 7; ++n) {
    auto records = census(n);
    // sorted, unique keys
    for (std::size_t i = 1; i < records.size(); ++i)
      CHECK(records[i - 1].key < records[i].key);
    for (const auto& r : records) {
      CHECK(r.stratum.total_order() % 2 == 0);
      if (!r.stratum.empty())
        CHECK(r.stratum.genus() == r.stratum.total_order() / 2 + 1);
      // covering degree argument: the lattice index divides n
      CHECK(n % period_lattice(r.origami()).index() == 0);
      // minimal square count iff holonomy torus
      if (!r.stratum.empty())
        CHECK(r.holonomy_torus == (n == r.stratum.min_squares()));
      if (r.reduced) CHECK(r.orbit_size.has_value());
      if (r.normal && !r.stratum.empty()) CHECK(r.holonomy_torus);
      if (r.primitive && n > 1) CHECK(r.reduced);
    }
  }
}

TEST_CASE("orbit sizes partition each reduced stratum slice") {
  for (int n = 3; n <= 6; ++n) {
    std::map<Stratum, std::map<std::uint64_t, std::int64_t>> by_stratum;
    std::map<Stratum, std::int64_t> reduced_count;
    for (const auto& r : census(n)) {
      if (!r.reduced) continue;
      ++by_stratum[r.stratum][*r.orbit_size];
      ++reduced_count[r.stratum];
    }
    for (const auto& [alpha, sizes] : by_stratum) {
      std::int64_t total = 0;
      for (const auto& [size, members] : sizes) {
        CHECK(members % size == 0);  // whole orbits
        total += members;
      }
      CHECK(total == reduced_count[alpha]);
    }
  }
}

TEST_CASE("standalone classification matches census flags") {
  for (const auto& r : census(5)) {
    Classification c = classify(r.origami(), true);
    CHECK(c.reduced == r.reduced);
    CHECK(c.primitive == r.primitive);
    CHECK(c.normal == r.normal);
    CHECK(c.holonomy_torus == r.holonomy_torus);
    CHECK(c.visibility == r.visibility);
    CHECK(c.symmetry_torus == r.symmetry_torus);
    CHECK(c.characteristic == r.characteristic);
    CHECK(c.unit_saddle == r.unit_saddle);
    if (r.reduced) CHECK(c.orbit_size == r.orbit_size);
  }
}

TEST_CASE("visibility flags match direct evaluation") {
  for (const auto& r : census(5))
    if (r.reduced) CHECK(is_visibility(r.origami()) == r.visibility);
}

TEST_CASE("census rejects out-of-range requests") {
  CHECK_THROWS_AS(census(0), std::invalid_argument);
  CHECK_THROWS_AS(census(10), std::invalid_argument);  // needs allow_large
}

}  // TEST_SUITE
