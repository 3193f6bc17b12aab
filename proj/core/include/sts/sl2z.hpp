#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "sts/origami.hpp"

namespace sts {

// Action of SL(2,Z) on origamis through the generators
//   T = [[1,1],[0,1]]  (horizontal shear)   T.(sigma, tau) = (sigma, tau sigma^-1)
//   S = [[0,-1],[1,0]] (quarter rotation)   S.(sigma, tau) = (tau^-1, sigma)
// with words read right-to-left as usual. On the new surface, stepping right
// means stepping along M^-1.(1,0) on the old one; the rewritings above are
// exactly that pullback. S^4 = 1 holds on the nose, all other relations hold
// up to simultaneous relabeling.

Origami act_T(const Origami& o);
Origami act_T_inv(const Origami& o);
Origami act_T_pow(const Origami& o, int m);  // T^m, tau -> tau sigma^-m
Origami act_S(const Origami& o);
Origami act_S_inv(const Origami& o);

enum class Gen : std::uint8_t { T, TInv, S };

Origami apply_word(const Origami& o, const std::vector<Gen>& word);

// A word w (applied left to right: w[0] first) whose matrix product sends the
// primitive vector (p, q) to (1, 0). gcd(|p|, |q|) must be 1.
std::vector<Gen> word_sending_to_horizontal(std::int64_t p, std::int64_t q);

struct OrbitCapExceeded : std::runtime_error {
  explicit OrbitCapExceeded(std::uint64_t cap);
};

struct OrbitSummary {
  std::uint64_t size = 0;
  std::set<CanonicalKey> representatives;
};

// Closure of the relabeling class of o under T and S by breadth-first search.
// Throws OrbitCapExceeded (partial result discarded) past `cap` classes.
OrbitSummary orbit(const Origami& o, std::uint64_t cap = 10'000'000);

// Orbit size, which for reduced origamis is the index of the Veech group in
// SL(2,Z). Throws std::invalid_argument on non-reduced input.
std::uint64_t veech_index(const Origami& o);

// Reduced with SL(2,Z) orbit of size one.
bool is_symmetry_torus(const Origami& o);

// Normal and fixed (up to relabeling) by every automorphism of the free
// group on the two gluing directions. Decided as normal && symmetry torus,
// and cross-checked against invariance under the three Nielsen moves
// (sigma,tau) -> (tau,sigma), (sigma^-1,tau), (sigma tau,tau); a mismatch
// between the two routes throws std::logic_error.
bool is_characteristic(const Origami& o);

}  // namespace sts
