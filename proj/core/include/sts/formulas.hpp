#pragma once

#include <cstdint>
#include <vector>

#include "sts/rational.hpp"
#include "sts/topology.hpp"

namespace sts {

// Divisor power sum sigma_x(n) = sum over d | n of d^x. Exact.
std::int64_t divisor_sigma(int x, std::int64_t n);

// Sieved table of sigma_x(n) for n = 1..n_max (index 0 unused).
std::vector<std::int64_t> divisor_sigma_table(int x, std::int64_t n_max);

// Closed form for the number of two-cylinder n-square surfaces in H(2):
//   5/24 s3(n) + 1/2 s2(n) - 3/4 n s1(n) + 1/24 s1(n),
// evaluated exactly; throws std::logic_error if it fails to be a
// non-negative integer. Requires n >= 3.
std::int64_t two_cylinder_count_h2(std::int64_t n);

// Independent oracle: sum of k*l over {p,q >= 1, k > l >= 1, pk + ql = n}.
std::int64_t two_cylinder_param_count_h2(std::int64_t n);

struct RamanujanCheck {
  std::int64_t lhs = 0;  // sum of s1(P) s1(n-P) over 0 < P < n
  Rational rhs;          // 5/12 s3(n) + 1/12 s1(n) - 1/2 n s1(n)
  bool holds = false;
};
RamanujanCheck ramanujan_identity(std::int64_t n);

// SL(2,Z) orbit sizes of the reduced n-square surfaces in H(2): two orbits
// for odd n (the second empty at n = 3), one for even n.
struct H2OrbitSizes {
  std::int64_t first = 0;
  std::int64_t second = 0;  // 0 when there is a single orbit
  bool two_orbits = false;
};
H2OrbitSizes lr_orbit_sizes(std::int64_t n);

// 3/8 (n-2) n^2 prod_{p|n} (1 - p^-2): the reduced n-square count in H(2)
// (sum of the orbit sizes for either parity).
std::int64_t reduced_h2_count(std::int64_t n);

struct VisibilityThresholds {
  int min_squares = 0;         // 2g-2+s: below this the stratum is empty
  int guaranteed_vis_max = 0;  // 4g+2s-5: visibility forced up to here
  int first_nonvis = 0;        // 4g+2s-4: a non-visibility surface exists
};
VisibilityThresholds thresholds(const Stratum& alpha);

// Per-n visibility inventory of a stratum census. H(2) and H(1,1) are
// generated from their cylinder parametrizations (any n); other strata go
// through the exhaustive census and are capped accordingly.
struct NonvisSearchRow {
  int n = 0;
  std::int64_t surfaces = 0;
  std::int64_t reduced = 0;
  std::int64_t visibility = 0;  // count of visibility tori
};
std::vector<NonvisSearchRow> empirical_nonvis_search(const Stratum& alpha, int n_max,
                                                     int workers = 0);

// Exact per-n counts in H(2), via the cylinder parametrizations: all
// surfaces, surfaces with a unit saddle, and the same pair restricted to
// reduced surfaces.
struct UnitSaddleRow {
  int n = 0;
  std::int64_t total = 0;
  std::int64_t unit = 0;
  std::int64_t reduced = 0;
  std::int64_t unit_reduced = 0;
  double proportion() const {
    return reduced > 0 ? double(unit_reduced) / double(reduced) : 0.0;
  }
};
std::vector<UnitSaddleRow> unit_saddle_stats(int n_lo, int n_hi, int workers = 0);

// Least-squares diagnostics for the reciprocal-proportion plot.
struct LinearFit {
  double slope = 0, intercept = 0, r_squared = 0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sts
