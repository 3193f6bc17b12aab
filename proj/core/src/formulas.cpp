#include "sts/formulas.hpp"

#include <stdexcept>

#include "sts/census.hpp"
#include "sts/constructions.hpp"
#include "sts/holonomy.hpp"
#include "sts/parallel.hpp"

namespace sts {

std::int64_t divisor_sigma(int x, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisor_sigma needs n >= 1");
  if (x < 0) throw std::invalid_argument("divisor_sigma needs x >= 0");
  auto power = [x](std::int64_t v) {
    std::int64_t r = 1;
    for (int e = 0; e < x; ++e) r *= v;
    return r;
  };
  std::int64_t total = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    total += power(d);
    if (d != n / d) total += power(n / d);
  }
  return total;
}

std::vector<std::int64_t> divisor_sigma_table(int x, std::int64_t n_max) {
  if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
  std::vector<std::int64_t> table(n_max + 1, 0);
  for (std::int64_t d = 1; d <= n_max; ++d) {
    std::int64_t pw = 1;
    for (int e = 0; e < x; ++e) pw *= d;
    for (std::int64_t m = d; m <= n_max; m += d) table[m] += pw;
  }
  return table;
}

std::int64_t two_cylinder_count_h2(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  Rational value = Rational(5, 24) * divisor_sigma(3, n) +
                   Rational(1, 2) * divisor_sigma(2, n) -
                   Rational(3, 4) * n * divisor_sigma(1, n) +
                   Rational(1, 24) * divisor_sigma(1, n);
  if (!value.is_integer() || value.num() < 0)
    throw std::logic_error("two-cylinder closed form is not a non-negative integer");
  return value.as_integer();
}

std::int64_t two_cylinder_param_count_h2(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t k = 2; k < n; ++k)
    for (std::int64_t l = 1; l < k; ++l)
      for (std::int64_t p = 1; p * k < n; ++p) {
        std::int64_t rem = n - p * k;
        if (rem % l == 0) total += k * l;
      }
  return total;
}

RamanujanCheck ramanujan_identity(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  RamanujanCheck check;
  for (std::int64_t P = 1; P < n; ++P)
    check.lhs += divisor_sigma(1, P) * divisor_sigma(1, n - P);
  check.rhs = Rational(5, 12) * divisor_sigma(3, n) +
              Rational(1, 12) * divisor_sigma(1, n) -
              Rational(1, 2) * n * divisor_sigma(1, n);
  check.holds = check.rhs.is_integer() && check.rhs.as_integer() == check.lhs;
  return check;
}

namespace {

Rational euler_like_factor(std::int64_t n) {
  // prod over primes p | n of (1 - 1/p^2)
  Rational prod(1);
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    prod = prod * Rational(p * p - 1, p * p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) prod = prod * Rational(rest * rest - 1, rest * rest);
  return prod;
}

std::int64_t expect_integer(const Rational& r, const char* what) {
  if (!r.is_integer())
    throw std::logic_error(std::string(what) + ": formula value is not an integer");
  return r.as_integer();
}

}  // namespace

H2OrbitSizes lr_orbit_sizes(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  H2OrbitSizes sizes;
  Rational common = Rational(3, 16) * n * n * euler_like_factor(n);
  if (n % 2 == 1) {
    sizes.first = expect_integer(common * (n - 1), "orbit size A");
    sizes.second = expect_integer(common * (n - 3), "orbit size B");
    sizes.two_orbits = sizes.second > 0;
  } else {
    sizes.first = expect_integer(common * Rational(2) * (n - 2), "even orbit size");
    sizes.second = 0;
    sizes.two_orbits = false;
  }
  return sizes;
}

std::int64_t reduced_h2_count(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("need n >= 3");
  return expect_integer(Rational(3, 8) * (n - 2) * n * n * euler_like_factor(n),
                        "reduced H(2) count");
}

VisibilityThresholds thresholds(const Stratum& alpha) {
  if (!alpha.valid() || alpha.empty())
    throw std::invalid_argument("thresholds need a nonempty valid stratum");
  const int g = alpha.genus(), s = alpha.zero_count();
  return {2 * g - 2 + s, 4 * g + 2 * s - 5, 4 * g + 2 * s - 4};
}

namespace {

std::vector<CanonicalKey> stratum_keys_any_n(const Stratum& alpha, int n, int workers) {
  std::set<CanonicalKey> keys;
  if (alpha == Stratum{2}) {
    keys = h2_family_keys(n);
  } else if (alpha == Stratum{1, 1}) {
    keys = h11_family_keys(n);
  } else {
    CensusOptions opt;
    opt.workers = workers;
    std::vector<CanonicalKey> out;
    for (auto& r : census_stratum(n, alpha, opt)) out.push_back(std::move(r.key));
    return out;
  }
  return {keys.begin(), keys.end()};
}

}  // namespace

std::vector<NonvisSearchRow> empirical_nonvis_search(const Stratum& alpha, int n_max,
                                                     int workers) {
  if (!alpha.valid() || alpha.empty()) throw std::invalid_argument("invalid stratum");
  std::vector<NonvisSearchRow> rows;
  for (int n = std::max(alpha.min_squares(), 1); n <= n_max; ++n) {
    std::vector<CensusRecord> records =
        classify_keys(stratum_keys_any_n(alpha, n, workers), workers);
    NonvisSearchRow row;
    row.n = n;
    row.surfaces = static_cast<std::int64_t>(records.size());
    for (const auto& r : records) {
      row.reduced += r.reduced;
      row.visibility += r.reduced && r.visibility;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<UnitSaddleRow> unit_saddle_stats(int n_lo, int n_hi, int workers) {
  if (n_lo < 3 || n_hi < n_lo) throw std::invalid_argument("need 3 <= n_lo <= n_hi");
  std::vector<UnitSaddleRow> rows(n_hi - n_lo + 1);
  parallel_for_index(rows.size(), worker_count(workers), [&](std::size_t idx) {
    const int n = n_lo + static_cast<int>(idx);
    UnitSaddleRow row;
    row.n = n;
    auto tally = [&](const Origami& o) {
      bool unit = has_unit_saddle(o);
      bool red = is_reduced(o);
      ++row.total;
      row.unit += unit;
      row.reduced += red;
      row.unit_reduced += unit && red;
    };
    // One-cylinder surfaces repeat across shears; dedup by canonical key.
    for (const CanonicalKey& key : h2_one_cylinder_keys(n)) tally(origami_from_key(key));
    // Two-cylinder tuples are pairwise distinct surfaces already.
    for (const auto& params : all_h2_two_cylinder(n)) tally(build_h2(params));
    rows[idx] = row;
  });
  return rows;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("need two samples of equal length");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinearFit fit;
  const double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double pred = fit.slope * x[i] + fit.intercept;
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }
  fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace sts
