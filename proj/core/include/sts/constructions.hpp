#pragma once

#include <set>
#include <vector>

#include "sts/origami.hpp"
#include "sts/topology.hpp"

namespace sts {

// Builders for the genus-two cylinder parametrizations and the designer
// surfaces used throughout the tests. Every builder returns a connected
// origami and asserts that it lands in the intended stratum.
//
// Cylinder diagrams are rendered into permutation pairs row-major: squares
// are numbered cylinder by cylinder, bottom row to top row, left to right.
// sigma cycles each row; tau moves up one row inside a cylinder, and across
// a cylinder's top boundary it follows the saddle-connection gluing after
// rotating the boundary circle by the cylinder's twist.

// One horizontal cylinder of height p and circumference k+l+m; the boundary
// saddles read (k,l,m) below and (k,m,l) above, rotated by the shear.
struct H2OneCylinder {
  int k = 1, l = 1, m = 1, p = 1;
  int shear = 0;  // 0 <= shear < k+l+m
};

// Two horizontal cylinders of widths k > l and heights p, q; the small
// cylinder sits over an l-segment of the big one.
struct H2TwoCylinder {
  int p = 1, q = 1, k = 2, l = 1;
  int shear_k = 0;  // 0 <= shear_k < k
  int shear_l = 0;  // 0 <= shear_l < l
};

Origami build_h2(const H2OneCylinder& params);
Origami build_h2(const H2TwoCylinder& params);

// The four cylinder diagrams of H(1,1). Widths: A one cylinder j+k+l+m;
// B cylinders k+l+m and m; C cylinders k+l and l+m; D cylinders k, k+l, l.
struct H11TypeA {
  int p = 1, j = 1, k = 1, l = 1, m = 1;
  int shear = 0;  // < j+k+l+m
};
struct H11TypeB {
  int p = 1, q = 1, k = 1, l = 1, m = 1;
  int shear_big = 0;    // < k+l+m
  int shear_small = 0;  // < m
};
struct H11TypeC {
  int p = 1, q = 1, k = 1, l = 1, m = 1;
  int shear_bottom = 0;  // < k+l
  int shear_top = 0;     // < l+m
};
struct H11TypeD {
  int p = 1, q = 1, r = 1, k = 1, l = 1;
  int shear_bottom = 0;  // < k
  int shear_middle = 0;  // < k+l
  int shear_top = 0;     // < l
};

Origami build_h11(const H11TypeA& params);
Origami build_h11(const H11TypeB& params);
Origami build_h11(const H11TypeC& params);
Origami build_h11(const H11TypeD& params);

// One-cylinder surface with n squares in the given stratum: sigma the full
// n-cycle, tau a concatenation of per-zero gluing blocks (a leading fixed
// square plus transpositions for an even order; a leading fixed square and
// a three-square bridge pattern for a pair of odd orders), padded with
// trailing identity spacer squares to reach n. Requires n >= 2g-2+s.
Origami one_cylinder(const Stratum& alpha, int n);

// The minimal one-cylinder surface with its self-glued square split into
// 2g-1+s squares: a reduced, non-visibility surface with 4g-4+2s squares in
// the same stratum (its holonomy misses (2g-2+s, 1)). Requires genus >= 2.
Origami split_square_nonvisibility(const Stratum& alpha);

// All parameter tuples with n squares (no deduplication; shears range over
// their full windows, so relabeling-equal surfaces repeat).
std::vector<H2OneCylinder> all_h2_one_cylinder(int n);
std::vector<H2TwoCylinder> all_h2_two_cylinder(int n);
std::vector<H11TypeA> all_h11_type_a(int n);
std::vector<H11TypeB> all_h11_type_b(int n);
std::vector<H11TypeC> all_h11_type_c(int n);
std::vector<H11TypeD> all_h11_type_d(int n);

// Relabeling classes of the full parametrized families.
std::set<CanonicalKey> h2_family_keys(int n);
std::set<CanonicalKey> h2_one_cylinder_keys(int n);
std::set<CanonicalKey> h11_family_keys(int n);

// Named surfaces.
Origami unit_torus();                      // n=1, sigma = tau = id
Origami genus_two_six_square();            // sigma (1234)(56), tau (15)(26)(34); H(1,1)
Origami ew_surface();                      // n=8 quaternion-group cover; H(1,1,1,1)
Origami ornithorynque();                   // n=12; H(2,2,2)
Origami swiss_cross();                     // n=5; H(2)
Origami four_square_holonomy_torus();      // n=4; H(1,1)
Origami l_shaped(int n);                   // row of n-1 squares plus one on top; H(2)

}  // namespace sts
