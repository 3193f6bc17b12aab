#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sts/origami.hpp"

namespace sts {

// Zero orders of the translation structure, sorted descending. The empty
// stratum denotes an unbranched torus cover (genus 1, no singularities).
struct Stratum {
  std::vector<int> alpha;

  Stratum() = default;
  Stratum(std::initializer_list<int> a);
  explicit Stratum(std::vector<int> a);

  int zero_count() const { return static_cast<int>(alpha.size()); }
  int total_order() const;  // sum of alpha, equals 2g-2
  int genus() const { return total_order() / 2 + 1; }
  // 2g-2+s, the least square count realizing the stratum (0 for genus 1).
  int min_squares() const { return total_order() + zero_count(); }
  bool valid() const;  // entries >= 1, even sum
  bool empty() const { return alpha.empty(); }

  std::string to_string() const;  // "2,1,1", or "-" for the empty stratum

  friend bool operator==(const Stratum&, const Stratum&) = default;
  friend auto operator<=>(const Stratum& a, const Stratum& b) {
    return a.alpha <=> b.alpha;
  }
};

std::optional<Stratum> parse_stratum(const std::string& text);

Stratum stratum(const Origami& o);

// Sublattice of Z^2 generated by the holonomy of closed square paths,
// represented in Hermite normal form rows (a, b), (0, d) with a, d >= 1 and
// 0 <= b < d. The index [Z^2 : lattice] = a*d equals the degree of the
// largest torus the surface covers through a torus quotient; index 1 means
// reduced.
struct PeriodLattice {
  std::int64_t a = 1, b = 0, d = 1;
  std::int64_t index() const { return a * d; }
  friend bool operator==(const PeriodLattice&, const PeriodLattice&) = default;
};

PeriodLattice period_lattice(const Origami& o);

bool is_reduced(const Origami& o);

// The surface covers no square-tiled surface other than itself and the
// 1-square torus: reduced, and the action of <sigma, tau> admits no block
// system with block count strictly between 1 and n.
bool is_primitive(const Origami& o);

// Order of the monodromy group <sigma, tau>, by closure over products.
// Throws MonodromyCapExceeded once more than `cap` elements are generated.
struct MonodromyCapExceeded : std::runtime_error {
  explicit MonodromyCapExceeded(std::uint64_t cap);
};
std::uint64_t monodromy_order(const Origami& o, std::uint64_t cap = 10'000'000);

// Galois cover: the monodromy action is regular, i.e. the group order equals
// the square count. Decided by closure with an early exit once the element
// count passes n, so no cap is needed.
bool is_normal(const Origami& o);

// Hol(O) = RP. For genus >= 2 this is "the commutator has no fixed point";
// the 1-square torus counts as a holonomy torus, larger genus-1 covers do
// not.
bool is_holonomy_torus(const Origami& o);

// Number of maximal horizontal cylinders: sigma-orbits (rows) merged whenever
// tau carries one row onto another rigidly (tau o sigma = sigma o tau on the
// row).
int horizontal_cylinder_count(const Origami& o);

}  // namespace sts
