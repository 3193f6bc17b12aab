#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sts/holonomy.hpp"
#include "sts/origami.hpp"
#include "sts/topology.hpp"

namespace sts {

struct CensusRecord {
  CanonicalKey key;
  Stratum stratum;
  bool reduced = false;
  bool primitive = false;
  bool normal = false;
  bool holonomy_torus = false;
  bool visibility = false;
  bool symmetry_torus = false;
  bool characteristic = false;
  bool unit_saddle = false;
  std::optional<std::uint64_t> orbit_size;  // populated for reduced records

  Origami origami() const { return origami_from_key(key); }
};

struct CensusOptions {
  int max_n = 9;            // raise together with allow_large for n = 10
  bool allow_large = false;
  int workers = 0;          // 0: STS_WORKERS env or hardware concurrency
  bool classify = true;     // false: keys and strata only
};

// Exactly one record per relabeling class of connected n-square origami,
// sorted by canonical key. Generation walks one sigma per cycle type against
// all tau (every class meets every representative of its sigma cycle type),
// deduplicating by canonical key; the output is identical for any worker
// count. n = 10 needs allow_large (several million classes, gigabyte-scale
// memory).
std::vector<CensusRecord> census(int n, const CensusOptions& options = {});
std::vector<CensusRecord> census(int n, const CensusOptions& options,
                                 const std::function<bool(const CensusRecord&)>& filter);

// Census restricted to one stratum. Empty iff n < 2g-2+s.
std::vector<CensusRecord> census_stratum(int n, const Stratum& alpha,
                                         const CensusOptions& options = {});

// Generation only: sorted canonical keys of all relabeling classes.
std::vector<CanonicalKey> census_keys(int n, const CensusOptions& options = {});

struct CensusSummary {
  std::int64_t total = 0, reduced = 0, primitive = 0, normal = 0;
  std::int64_t holonomy = 0, visibility = 0, nonvisibility = 0;
  std::int64_t symmetry = 0, characteristic = 0, unit_saddle = 0;
};
// Tallies over the records; holonomy/visibility/nonvisibility/symmetry are
// counted among reduced records, matching how the categories are defined.
CensusSummary summarize(const std::vector<CensusRecord>& records);

// Classify a standalone list of relabeling classes (all with the same square
// count) exactly the way census() classifies its own output. Keys must be
// closed under the SL(2,Z) action on their reduced members.
std::vector<CensusRecord> classify_keys(std::vector<CanonicalKey> keys, int workers = 0);

}  // namespace sts
