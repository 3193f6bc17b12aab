// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Set STS_ACCEPT_LARGE=1 to extend the census exactness check to
// n = 9 and 10 (slow, gigabyte-scale memory at n = 10).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "sts/census.hpp"
#include "sts/census_io.hpp"
#include "sts/constructions.hpp"
#include "sts/formulas.hpp"
#include "sts/holonomy.hpp"
#include "sts/parallel.hpp"
#include "sts/sl2z.hpp"

using namespace sts;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::map<int, CensusSummary> census_summaries(int lo, int hi) {
  std::map<int, CensusSummary> out;
  for (int n = lo; n <= hi; ++n) out[n] = summarize(census(n));
  return out;
}

void criterion_1_census_exactness() {
  static const std::int64_t kTotal[] = {1, 3, 7, 26, 97, 624, 4163, 34470, 314493, 3202839};
  static const std::int64_t kReduced[] = {1, 0, 3, 19, 91, 603, 4155, 34398, 314468, 3202548};
  static const std::int64_t kPrimitive[] = {1, 0, 3, 13, 91, 500, 4155, 33190, 313474, 3176532};
  const char* large = std::getenv("STS_ACCEPT_LARGE");
  const int hi = (large && std::string(large) == "1") ? 10 : 8;

  bool ok = true;
  std::ostringstream detail;
  for (int n = 1; n <= hi; ++n) {
    CensusOptions opt;
    opt.allow_large = hi == 10;
    if (opt.allow_large) opt.max_n = 10;
    CensusSummary s = summarize(census(n, opt));
    bool row = s.total == kTotal[n - 1] && s.reduced == kReduced[n - 1] &&
               s.primitive == kPrimitive[n - 1];
    if (!row)
      detail << " n=" << n << " got (" << s.total << "," << s.reduced << ","
             << s.primitive << ")";
    ok = ok && row;
  }
  report(1, ok,
         "census counts |STS_n|, |rSTS_n|, |pSTS_n| exact for n=1.." +
             std::to_string(hi) + detail.str());
}

void criterion_2_fake_torus_table(const std::map<int, CensusSummary>& sums) {
  static const std::int64_t kSymm[] = {0, 0, 0, 0, 0, 0, 1};
  static const std::int64_t kHol[] = {0, 3, 10, 40, 254, 1620, 13364};
  static const std::int64_t kNonvis[] = {0, 0, 0, 0, 36, 90, 348};
  bool ok = true;
  std::ostringstream detail;
  for (int n = 2; n <= 8; ++n) {
    const CensusSummary& s = sums.at(n);
    bool row = s.symmetry == kSymm[n - 2] && s.holonomy == kHol[n - 2] &&
               s.nonvisibility == kNonvis[n - 2];
    if (!row)
      detail << " n=" << n << " got (" << s.symmetry << "," << s.holonomy << ","
             << s.nonvisibility << ")";
    ok = ok && row;
  }
  report(2, ok, "symmetry / holonomy / non-visibility counts exact for n=2..8" +
                    detail.str());
}

void criterion_3_genus_two_symmetry_absence() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 3; n <= 10; ++n) {
    std::vector<CanonicalKey> keys;
    for (const auto& k : h2_family_keys(n)) keys.push_back(k);
    if (n >= 4)
      for (const auto& k : h11_family_keys(n)) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& r : classify_keys(std::move(keys))) {
      if (r.symmetry_torus) {
        ok = false;
        detail << " n=" << n;
      }
    }
  }
  report(3, ok, "no symmetry torus in H(2) or H(1,1) for n<=10" + detail.str());
}

void criterion_4_orbit_formulas() {
  bool ok = true;
  std::ostringstream detail;
  for (int n = 3; n <= 8; ++n) {
    std::map<std::uint64_t, std::int64_t> members;  // orbit size -> count
    for (const auto& r : census_stratum(n, Stratum{2}))
      if (r.reduced) ++members[*r.orbit_size];
    H2OrbitSizes want = lr_orbit_sizes(n);
    std::map<std::uint64_t, std::int64_t> expect;
    expect[want.first] += want.first;
    if (want.two_orbits) expect[want.second] += want.second;
    if (members != expect) {
      ok = false;
      detail << " n=" << n;
    }
  }
  bool named = orbit(l_shaped(6)).size == 36 && orbit(l_shaped(5)).size == 18 &&
               veech_index(four_square_holonomy_torus()) == 6;
  ok = ok && named;
  report(4, ok,
         std::string("reduced H(2) orbit sizes match the closed forms for n=3..8; "
                     "named indices 36/18/6") +
             detail.str());
}

void criterion_5_threshold_table() {
  VisibilityThresholds t2 = thresholds(Stratum{2});
  VisibilityThresholds t11 = thresholds(Stratum{1, 1});
  bool ok = t2.min_squares == 3 && t2.guaranteed_vis_max == 5 && t2.first_nonvis == 6 &&
            t11.min_squares == 4 && t11.guaranteed_vis_max == 7 && t11.first_nonvis == 8;

  int largest2 = 0;
  for (const auto& row : empirical_nonvis_search(Stratum{2}, 12))
    if (row.visibility > 0) largest2 = std::max(largest2, row.n);
  ok = ok && largest2 == 5;

  int largest11 = 0;
  for (const auto& row : empirical_nonvis_search(Stratum{1, 1}, 10))
    if (row.visibility > 0) largest11 = std::max(largest11, row.n);
  ok = ok && largest11 == 9;

  report(5, ok,
         "thresholds (3,5,6) and (4,7,8); largest visibility torus n=5 in H(2) "
         "(none to 12), n=9 in H(1,1) (none at 10)");
}

void criterion_6_formula_oracles() {
  bool two_cyl = true;
  for (std::int64_t n = 3; n <= 40; ++n)
    two_cyl = two_cyl && two_cylinder_count_h2(n) == two_cylinder_param_count_h2(n);

  const std::int64_t N = 10000;
  auto s1 = divisor_sigma_table(1, N);
  auto s2 = divisor_sigma_table(2, N);
  auto s3 = divisor_sigma_table(3, N);
  bool ramanujan = true;
  for (std::int64_t n = 2; n <= N; ++n) {
    std::int64_t lhs = 0;
    for (std::int64_t P = 1; P < n; ++P) lhs += s1[P] * s1[n - P];
    Rational rhs = Rational(5, 12) * s3[n] + Rational(1, 12) * s1[n] -
                   Rational(1, 2) * n * s1[n];
    ramanujan = ramanujan && rhs.is_integer() && rhs.as_integer() == lhs;
  }

  bool sigma_bounds = true;
  const double zeta2 = 1.644934066848226, zeta3 = 1.202056903159594;
  for (std::int64_t n = 1; n <= N; ++n) {
    double n2 = double(n) * n, n3 = n2 * n;
    sigma_bounds = sigma_bounds && s2[n] >= n2 && s2[n] <= zeta2 * n2 + 1e-6 &&
                   s3[n] >= n3 && s3[n] <= zeta3 * n3 + 1e-6;
  }
  report(6, two_cyl && ramanujan && sigma_bounds,
         "two-cylinder closed form (n<=40), convolution identity and sigma bounds "
         "(n<=10000) all exact");
}

void criterion_7_asymptotics() {
  auto rows = unit_saddle_stats(10, 60);
  auto row_at = [&](int n) { return rows[n - 10]; };

  double total_lo = 1e18, total_hi = 0, unit_lo = 1e18, unit_hi = 0;
  for (int n = 20; n <= 60; ++n) {
    const auto& row = row_at(n);
    double t = double(row.total) / (double(n) * n * n);
    double u = double(row.unit) / (double(n) * n);
    total_lo = std::min(total_lo, t);
    total_hi = std::max(total_hi, t);
    unit_lo = std::min(unit_lo, u);
    unit_hi = std::max(unit_hi, u);
  }
  bool bounded = total_lo > 0 && unit_lo > 0 && total_hi / total_lo <= 10.0 &&
                 unit_hi / unit_lo <= 10.0;

  bool decreasing = true;
  std::vector<double> xs, ys;
  for (int n = 10; n <= 55; ++n) {
    double prop = row_at(n).proportion();
    if (n > 10) decreasing = decreasing && prop < row_at(n - 1).proportion();
    xs.push_back(n);
    ys.push_back(1.0 / prop);
  }
  LinearFit fit = linear_fit(xs, ys);
  bool linear = fit.r_squared >= 0.98;

  std::ostringstream detail;
  detail << "totals/n^3 in [" << total_lo << "," << total_hi << "], unit/n^2 in ["
         << unit_lo << "," << unit_hi << "], reciprocal fit r2=" << fit.r_squared;
  report(7, bounded && decreasing && linear, detail.str());
}

void criterion_8_constructions() {
  bool strata_ok = true;
  std::vector<Stratum> strata;
  {
    std::vector<int> cur;
    std::function<void(int, int)> gather = [&](int remaining, int max_part) {
      if (remaining == 0) {
        strata.emplace_back(cur);
        return;
      }
      for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        gather(remaining - part, part);
        cur.pop_back();
      }
    };
    for (int total = 2; total <= 8; total += 2) gather(total, total);
  }
  for (const auto& alpha : strata) {
    for (int n = alpha.min_squares(); n <= alpha.min_squares() + 3; ++n)
      strata_ok = strata_ok && stratum(one_cylinder(alpha, n)) == alpha;
    strata_ok = strata_ok && stratum(split_square_nonvisibility(alpha)) == alpha;
  }

  bool families_ok = true;
  CensusOptions opt;
  opt.classify = false;
  for (int n = 3; n <= 8; ++n) {
    std::set<CanonicalKey> h2, h11;
    for (auto& r : census(n, opt)) {
      if (r.stratum == Stratum{2}) h2.insert(std::move(r.key));
      else if (r.stratum == Stratum{1, 1}) h11.insert(std::move(r.key));
    }
    families_ok = families_ok && h2_family_keys(n) == h2;
    if (n >= 4) families_ok = families_ok && h11_family_keys(n) == h11;
  }
  report(8, strata_ok && families_ok,
         "one-cylinder and split-square builders land in their strata (sum<=8); "
         "parametrized families equal the census slices for n<=8");
}

void criterion_9_holonomy_ball() {
  HolonomyBall ball = hol_ball(unit_torus(), 100.0);
  double density = double(ball.vectors.size()) / (100.0 * 100.0);
  const double target = 6.0 / 3.14159265358979323846;
  bool torus_ok = std::abs(density - target) / target <= 0.10;

  std::mt19937 rng(12345);
  auto records = census(5);
  int done = 0;
  bool agree = true;
  while (done < 100) {
    const auto& r = records[rng() % records.size()];
    if (r.stratum.empty()) continue;
    std::int64_t a = std::int64_t(rng() % 13) - 6;
    std::int64_t b = std::int64_t(rng() % 13) - 6;
    if ((a == 0 && b == 0) || a * a + b * b > 36) continue;
    Origami o = r.origami();
    agree = agree && hol_contains(o, {a, b}) == (hol_ball(o, 6.0).vectors.count({a, b}) == 1);
    ++done;
  }
  std::ostringstream detail;
  detail << "|RP_100|/100^2 = " << density << " vs 6/pi = " << target
         << "; 100 membership agreements";
  report(9, torus_ok && agree, detail.str());
}

void criterion_10_determinism() {
  std::string reference;
  bool ok = true;
  for (int workers : {1, 4, 8}) {
    CensusOptions opt;
    opt.workers = workers;
    std::string text = serialize_census(census(6, opt), 6);
    if (reference.empty()) reference = text;
    ok = ok && text == reference;
  }
  report(10, ok, "census files byte-identical across 1, 4, and 8 workers");
}

}  // namespace

int main() {
  criterion_1_census_exactness();
  auto sums = census_summaries(2, 8);
  criterion_2_fake_torus_table(sums);
  criterion_3_genus_two_symmetry_absence();
  criterion_4_orbit_formulas();
  criterion_5_threshold_table();
  criterion_6_formula_oracles();
  criterion_7_asymptotics();
  criterion_8_constructions();
  criterion_9_holonomy_ball();
  criterion_10_determinism();

  if (g_failures == 0) {
    std::puts("all acceptance criteria passed");
    return 0;
  }
  std::printf("%d acceptance criterion(s) failed\n", g_failures);
  return 1;
}
