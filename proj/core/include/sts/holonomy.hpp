#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "sts/sl2z.hpp"
#include "sts/topology.hpp"

namespace sts {

// Horizontal saddle connections are traced on the integer corner grid: the
// vertex cycle through square i sits at the bottom-left corner of square i,
// one right-step moves that corner to the bottom-left corner of sigma(i),
// and a corner is singular iff the commutator moves its square. Each
// singular corner emits exactly one rightward saddle, ending at the first
// singular corner it meets.

struct HolonomyVector {
  std::int64_t a = 0, b = 0;
  friend bool operator==(const HolonomyVector&, const HolonomyVector&) = default;
  friend auto operator<=>(const HolonomyVector&, const HolonomyVector&) = default;
};

// Count of horizontal saddle connections of holonomy (L, 0) per length
// L <= the requested maximum.
struct SaddleInventory {
  std::map<int, std::int64_t> lengths;
  std::int64_t count(int len) const {
    auto it = lengths.find(len);
    return it == lengths.end() ? 0 : it->second;
  }
  std::int64_t total() const;
};

// Requires genus >= 2 (throws std::invalid_argument when there are no cone
// points).
SaddleInventory horizontal_saddles(const Origami& o, int max_length);

bool has_horizontal_unit_saddle(const Origami& o);
// Unit saddle in either axis direction: horizontal on o or on S.o. Integer
// holonomy admits no other vectors of norm one. Genus-1 input: true exactly
// for the 1-square torus.
bool has_unit_saddle(const Origami& o);

// Membership of v in Hol(o), decided by moving v to (k, 0) with an SL(2,Z)
// word and tracing horizontal saddles of length k on the transformed
// surface. The 1-square torus uses Hol = RP directly.
bool hol_contains(const Origami& o, HolonomyVector v);

struct HolonomyBall {
  std::set<std::pair<std::int64_t, std::int64_t>> vectors;  // +/- symmetric
  std::int64_t saddle_count = 0;  // saddle connections counted with multiplicity
};

// All holonomy vectors of norm <= r (plus the multiset saddle count),
// gathered direction by direction over primitive vectors. Saddle tracing is
// only attempted for r <= radius_cap; the 1-square torus path (plain
// primitive-vector enumeration) has no such limit.
HolonomyBall hol_ball(const Origami& o, double r, double radius_cap = 64.0);

// RP is contained in Hol(o): every surface in the SL(2,Z) orbit carries a
// unit horizontal saddle. Requires reduced input (throws otherwise); scans
// the orbit and exits false at the first witness.
bool is_visibility(const Origami& o);

struct Classification {
  Stratum stratum;
  bool reduced = false;
  bool primitive = false;
  bool normal = false;
  bool holonomy_torus = false;
  bool visibility = false;
  bool symmetry_torus = false;
  bool characteristic = false;
  bool unit_saddle = false;
  std::optional<std::uint64_t> orbit_size;
};

// Full flag bundle; the implication structure between the flags is asserted
// before returning. Orbit-dependent flags compute the SL(2,Z) orbit for
// reduced surfaces (with_orbit additionally records its size).
Classification classify(const Origami& o, bool with_orbit = false);

// Throws std::logic_error when the flags violate the implication lattice.
void check_flag_implications(const Classification& c, int n);

}  // namespace sts
