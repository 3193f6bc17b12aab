#include <doctest.h>

#include <random>
#include <stdexcept>

#include "sts/perm.hpp"

using sts::Label;
using sts::Perm;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  std::vector<Label> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<Label>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("composition applies the right factor first") {
  Perm a = Perm::from_cycles(3, {{1, 2}});
  Perm b = Perm::from_cycles(3, {{1, 3}});
  Perm ab = a * b;
  // 1->3, 3->2, 2->1
  CHECK(ab.images() == std::vector<Label>{2, 0, 1});

  CHECK(Perm::identity(2) * Perm::from_cycles(2, {{1, 2}}) ==
        Perm::from_cycles(2, {{1, 2}}));
  CHECK((Perm::from_cycles(2, {{1, 2}}) * Perm::from_cycles(2, {{1, 2}})).is_identity());
}

TEST_CASE("composition is associative and inverses cancel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + int(rng() % 64);
    Perm a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("cycle construction and rendering round-trip") {
  Perm p = Perm::from_cycles(6, {{1, 2, 3, 4}, {5, 6}});
  CHECK(p.cycle_type() == std::vector<int>{4, 2});
  CHECK(sts::to_cycle_string(p) == "(1,2,3,4)(5,6)");
  CHECK(sts::to_one_line(p) == "2,3,4,1,6,5");

  CHECK(Perm::from_cycles(3, {{2}}).is_identity());
  CHECK_THROWS_AS(Perm::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Perm::from_cycles(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 0}), std::invalid_argument);
}

TEST_CASE("conjugation relabels cycles") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + int(rng() % 16);
    Perm p = random_perm(n, rng), g = random_perm(n, rng);
    Perm q = sts::conjugated(p, g);
    CHECK(q.cycle_type() == p.cycle_type());
    for (int i = 0; i < n; ++i)
      CHECK(q(g(static_cast<Label>(i))) == g(p(static_cast<Label>(i))));
  }
}

}  // TEST_SUITE
