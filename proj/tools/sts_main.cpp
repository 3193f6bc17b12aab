// Command-line front end: census enumeration, classification of single
// surfaces or census files, verification suites, and H(2) unit-saddle
// statistics. Exit codes: 0 success, 1 verification/runtime failure, 2 usage
// error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sts/census.hpp"
#include "sts/census_io.hpp"
#include "sts/constructions.hpp"
#include "sts/formulas.hpp"
#include "sts/holonomy.hpp"
#include "sts/rational.hpp"
#include "sts/parallel.hpp"
#include "sts/sl2z.hpp"

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

sts::Stratum parse_stratum_arg(const std::string& text) {
  auto alpha = sts::parse_stratum(text);
  if (!alpha || !alpha->valid()) throw UsageError("invalid stratum: " + text);
  return *alpha;
}

bool record_has_flag(const sts::CensusRecord& r, const std::string& name) {
  if (name == "reduced") return r.reduced;
  if (name == "primitive") return r.primitive;
  if (name == "normal") return r.normal;
  if (name == "holonomy") return r.holonomy_torus;
  if (name == "visibility") return r.visibility;
  if (name == "nonvisibility") return r.reduced && !r.visibility;
  if (name == "symmetry") return r.symmetry_torus;
  if (name == "characteristic") return r.characteristic;
  if (name == "unit-saddle") return r.unit_saddle;
  throw UsageError("unknown filter '" + name + "'");
}

int run_enumerate(int n, const std::string& stratum_text, const std::string& filter,
                  const std::string& out_path, int workers, bool allow_large) {
  sts::CensusOptions options;
  options.workers = workers;
  options.allow_large = allow_large;
  if (allow_large) options.max_n = 10;
  if (n == 10 && !allow_large)
    throw UsageError("n=10 produces ~3.2M classes and needs --allow-large (expect several GB of memory)");

  std::vector<sts::CensusRecord> records;
  if (!stratum_text.empty())
    records = sts::census_stratum(n, parse_stratum_arg(stratum_text), options);
  else
    records = sts::census(n, options);

  if (!filter.empty()) {
    std::vector<sts::CensusRecord> kept;
    std::stringstream ss(filter);
    std::vector<std::string> names;
    for (std::string part; std::getline(ss, part, ',');) names.push_back(part);
    for (auto& r : records) {
      bool ok = true;
      for (const auto& name : names) ok = ok && record_has_flag(r, name);
      if (ok) kept.push_back(std::move(r));
    }
    records = std::move(kept);
  }

  std::string text = sts::serialize_census(records, n);
  if (!out_path.empty())
    sts::write_census_file(out_path, records, n);
  else
    std::cout << text;

  sts::CensusSummary s = sts::summarize(records);
  std::ostream& sum = out_path.empty() ? std::cerr : std::cout;
  sum << "total=" << s.total << " reduced=" << s.reduced
      << " primitive=" << s.primitive << " normal=" << s.normal
      << " holonomy=" << s.holonomy << " nonvisibility=" << s.nonvisibility
      << " symmetry=" << s.symmetry << " characteristic=" << s.characteristic
      << " unit_saddle=" << s.unit_saddle << "\n";
  return 0;
}

void print_classification(const sts::Origami& o, bool with_orbit) {
  sts::Classification c = sts::classify(o, with_orbit);
  std::cout << "sigma=" << sts::to_cycle_string(o.sigma())
            << " tau=" << sts::to_cycle_string(o.tau()) << " n=" << o.squares()
            << " stratum=" << c.stratum.to_string() << " genus="
            << (c.stratum.empty() ? 1 : c.stratum.genus()) << " flags=";
  sts::CensusRecord r;
  r.reduced = c.reduced;
  r.primitive = c.primitive;
  r.normal = c.normal;
  r.holonomy_torus = c.holonomy_torus;
  r.visibility = c.visibility;
  r.symmetry_torus = c.symmetry_torus;
  r.characteristic = c.characteristic;
  r.unit_saddle = c.unit_saddle;
  std::cout << (sts::flags_string(r).empty() ? "-" : sts::flags_string(r));
  if (c.orbit_size) std::cout << " orbit=" << *c.orbit_size;
  std::cout << "\n";
}

int run_classify(const std::string& input, bool with_orbit) {
  if (std::filesystem::exists(input)) {
    sts::ParsedCensus parsed = sts::read_census_file(input);
    for (const auto& r : parsed.records)
      print_classification(r.origami(), with_orbit);
    return 0;
  }
  print_classification(sts::parse_origami_text(input), with_orbit);
  return 0;
}

struct CheckReporter {
  int failures = 0;
  void expect(bool ok, const std::string& name, const std::string& detail = "") {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    failures += ok ? 0 : 1;
  }
};

int verify_formulas(int max_n) {
  CheckReporter rep;
  bool two_cyl_ok = true;
  for (std::int64_t n = 3; n <= max_n; ++n)
    two_cyl_ok = two_cyl_ok &&
                 sts::two_cylinder_count_h2(n) == sts::two_cylinder_param_count_h2(n);
  rep.expect(two_cyl_ok, "two-cylinder closed form vs parameter count, n<=" +
                             std::to_string(max_n));

  const std::int64_t N = 10000;
  auto s1 = sts::divisor_sigma_table(1, N);
  auto s2 = sts::divisor_sigma_table(2, N);
  auto s3 = sts::divisor_sigma_table(3, N);

  bool ramanujan_ok = true;
  for (std::int64_t n = 2; n <= N; ++n) {
    std::int64_t lhs = 0;
    for (std::int64_t P = 1; P < n; ++P) lhs += s1[P] * s1[n - P];
    sts::Rational rhs = sts::Rational(5, 12) * s3[n] + sts::Rational(1, 12) * s1[n] -
                        sts::Rational(1, 2) * n * s1[n];
    ramanujan_ok = ramanujan_ok && rhs.is_integer() && rhs.as_integer() == lhs;
  }
  rep.expect(ramanujan_ok, "divisor-sum convolution identity, n<=10000");

  bool sigma_ok = true;
  const double zeta2 = 1.644934066848226;
  const double zeta3 = 1.202056903159594;
  for (std::int64_t n = 1; n <= N; ++n) {
    double n2 = double(n) * n, n3 = n2 * n;
    sigma_ok = sigma_ok && s2[n] >= n2 && s2[n] <= zeta2 * n2 + 1e-6 &&
               s3[n] >= n3 && s3[n] <= zeta3 * n3 + 1e-6;
  }
  rep.expect(sigma_ok, "divisor sigma within [n^x, zeta(x) n^x], n<=10000");
  return rep.failures == 0 ? 0 : kExitVerifyFailure;
}

int verify_census(int max_n, int workers, bool allow_large) {
  // Frozen reference counts for n = 1..10.
  static const std::int64_t kTotal[] = {1, 3, 7, 26, 97, 624, 4163, 34470, 314493, 3202839};
  static const std::int64_t kReduced[] = {1, 0, 3, 19, 91, 603, 4155, 34398, 314468, 3202548};
  static const std::int64_t kPrimitive[] = {1, 0, 3, 13, 91, 500, 4155, 33190, 313474, 3176532};
  // The torus itself counts as a symmetry and holonomy torus at n=1; the
  // reference rows for n >= 2 are the reduced-census category counts.
  static const std::int64_t kSymm[] = {1, 0, 0, 0, 0, 0, 0, 1, 0, 0};
  static const std::int64_t kHol[] = {1, 0, 3, 10, 40, 254, 1620, 13364, 119892, 1212334};
  static const std::int64_t kNonvis[] = {0, 0, 0, 0, 0, 36, 90, 348, 693, 7491};

  CheckReporter rep;
  sts::CensusOptions options;
  options.workers = workers;
  options.allow_large = allow_large;
  if (allow_large) options.max_n = 10;
  max_n = std::min(max_n, 10);
  for (int n = 1; n <= max_n; ++n) {
    auto records = sts::census(n, options);
    sts::CensusSummary s = sts::summarize(records);
    auto detail = [&](std::int64_t got, std::int64_t want) {
      return "n=" + std::to_string(n) + " got=" + std::to_string(got) +
             " want=" + std::to_string(want);
    };
    rep.expect(s.total == kTotal[n - 1], "census total", detail(s.total, kTotal[n - 1]));
    rep.expect(s.reduced == kReduced[n - 1], "census reduced",
               detail(s.reduced, kReduced[n - 1]));
    rep.expect(s.primitive == kPrimitive[n - 1], "census primitive",
               detail(s.primitive, kPrimitive[n - 1]));
    rep.expect(s.symmetry == kSymm[n - 1], "symmetry tori",
               detail(s.symmetry, kSymm[n - 1]));
    rep.expect(s.holonomy == kHol[n - 1], "holonomy tori",
               detail(s.holonomy, kHol[n - 1]));
    rep.expect(s.nonvisibility == kNonvis[n - 1], "non-visibility surfaces",
               detail(s.nonvisibility, kNonvis[n - 1]));
  }
  return rep.failures == 0 ? 0 : kExitVerifyFailure;
}

int verify_thresholds(int max_n, int workers) {
  CheckReporter rep;
  auto t2 = sts::thresholds(sts::Stratum{2});
  rep.expect(t2.min_squares == 3 && t2.guaranteed_vis_max == 5 && t2.first_nonvis == 6,
             "H(2) thresholds (3,5,6)");
  auto t11 = sts::thresholds(sts::Stratum{1, 1});
  rep.expect(t11.min_squares == 4 && t11.guaranteed_vis_max == 7 && t11.first_nonvis == 8,
             "H(1,1) thresholds (4,7,8)");

  const int h2_max = std::max(6, std::min(max_n, 12));
  auto rows2 = sts::empirical_nonvis_search(sts::Stratum{2}, h2_max, workers);
  int largest2 = 0;
  for (const auto& row : rows2)
    if (row.visibility > 0) largest2 = row.n;
  rep.expect(largest2 == 5, "largest H(2) visibility torus at n=5, none up to n=" +
                                std::to_string(h2_max));

  const int h11_max = std::max(8, std::min(max_n, 10));
  auto rows11 = sts::empirical_nonvis_search(sts::Stratum{1, 1}, h11_max, workers);
  int largest11 = 0;
  for (const auto& row : rows11)
    if (row.visibility > 0) largest11 = row.n;
  rep.expect(largest11 == 9, "largest H(1,1) visibility torus at n=9, none up to n=" +
                                 std::to_string(h11_max));
  return rep.failures == 0 ? 0 : kExitVerifyFailure;
}

int run_stats(const std::string& stratum_text, const std::string& range,
              const std::string& out_path, int workers) {
  if (parse_stratum_arg(stratum_text) != sts::Stratum{2})
    throw UsageError("stats supports stratum 2 only");
  auto sep = range.find("..");
  if (sep == std::string::npos) throw UsageError("range must look like 10..55");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, sep));
    hi = std::stoi(range.substr(sep + 2));
  } catch (const std::exception&) {
    throw UsageError("range must look like 10..55");
  }
  if (lo < 3 || hi < lo) throw UsageError("need 3 <= lo <= hi");

  auto rows = sts::unit_saddle_stats(lo, hi, workers);
  std::ostringstream csv;
  csv << "n,total,reduced,unit_saddle,proportion,reciprocal\n";
  std::vector<double> xs, ys;
  for (const auto& row : rows) {
    double prop = row.proportion();
    csv << row.n << ',' << row.total << ',' << row.reduced << ','
        << row.unit_reduced << ',' << prop << ','
        << (prop > 0 ? 1.0 / prop : 0.0) << "\n";
    if (prop > 0) {
      xs.push_back(row.n);
      ys.push_back(1.0 / prop);
    }
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    out << csv.str();
  } else {
    std::cout << csv.str();
  }
  if (xs.size() >= 2) {
    sts::LinearFit fit = sts::linear_fit(xs, ys);
    std::cerr << "reciprocal fit: slope=" << fit.slope
              << " intercept=" << fit.intercept << " r2=" << fit.r_squared << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square-tiled surface census and classification"};
  app.require_subcommand(1);

  int n = 0, workers = 0, max_n = -1;
  bool allow_large = false, with_orbit = false;
  std::string stratum_text, filter, out_path, input, suite, range;
  std::string stats_stratum = "2";

  auto* enumerate = app.add_subcommand("enumerate", "enumerate the n-square census");
  enumerate->add_option("n", n, "number of squares")->required();
  enumerate->add_option("--stratum", stratum_text, "restrict to a stratum, e.g. 2 or 1,1");
  enumerate->add_option("--filter", filter,
                        "comma list of required flags (reduced, primitive, normal, "
                        "holonomy, visibility, nonvisibility, symmetry, characteristic, "
                        "unit-saddle)");
  enumerate->add_option("--out", out_path, "census file path (stdout if omitted)");
  enumerate->add_option("--workers", workers, "worker threads (default: STS_WORKERS or cores)");
  enumerate->add_flag("--allow-large", allow_large, "permit n=10 (memory-heavy)");

  auto* classify = app.add_subcommand("classify", "classify a surface or census file");
  classify->add_option("--in", input, "inline 'sigma|tau' or a census file path")->required();
  classify->add_flag("--orbit", with_orbit, "also report the SL(2,Z) orbit size");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "formulas | census | thresholds")->required();
  verify->add_option("--max-n", max_n, "suite-dependent size limit");
  verify->add_option("--workers", workers, "worker threads");
  verify->add_flag("--allow-large", allow_large, "permit census sizes up to n=10");

  auto* stats = app.add_subcommand("stats", "unit-saddle statistics in H(2)");
  stats->add_option("--stratum", stats_stratum, "must be 2");
  stats->add_option("--n-range", range, "inclusive range, e.g. 10..55")->required();
  stats->add_option("--out", out_path, "CSV path (stdout if omitted)");
  stats->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (enumerate->parsed())
      return run_enumerate(n, stratum_text, filter, out_path, workers, allow_large);
    if (classify->parsed()) return run_classify(input, with_orbit);
    if (verify->parsed()) {
      if (suite == "formulas") return verify_formulas(max_n < 0 ? 40 : max_n);
      if (suite == "census")
        return verify_census(max_n < 0 ? 8 : max_n, workers, allow_large);
      if (suite == "thresholds") return verify_thresholds(max_n < 0 ? 12 : max_n, workers);
      throw UsageError("unknown suite '" + suite + "'");
    }
    if (stats->parsed()) return run_stats(stats_stratum, range, out_path, workers);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sts::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
