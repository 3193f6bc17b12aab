#include "sts/census.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "sts/parallel.hpp"
#include "sts/sl2z.hpp"

namespace sts {

namespace {

void descend(int remaining, int max_part, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    descend(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  descend(n, n, cur, out);
  return out;
}

std::vector<Label> sigma_for_partition(const std::vector<int>& parts, int n) {
  std::vector<Label> img(n);
  int base = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i)
      img[base + i] = static_cast<Label>(base + (i + 1) % len);
    base += len;
  }
  return img;
}

bool connected_pair(const std::vector<Label>& s, const std::vector<Label>& t,
                    std::vector<Label>& stack, std::vector<bool>& seen) {
  const int n = static_cast<int>(s.size());
  std::fill(seen.begin(), seen.end(), false);
  stack.clear();
  stack.push_back(0);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    for (Label w : {s[v], t[v]}) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

using KeySet = std::unordered_set<CanonicalKey, CanonicalKeyHash>;

// All relabeling classes whose sigma has the given cycle type: fix the type
// representative and sweep tau, sharded by the image of square 0.
void keys_for_partition(const std::vector<int>& parts, int n, int workers,
                        KeySet& into) {
  std::vector<Label> sigma = sigma_for_partition(parts, n);
  std::vector<KeySet> shard_sets(n);
  parallel_for_index(static_cast<std::size_t>(n), workers, [&](std::size_t shard) {
    std::vector<Label> tau(n);
    tau[0] = static_cast<Label>(shard);
    std::vector<Label> rest;
    for (int v = 0; v < n; ++v)
      if (v != static_cast<int>(shard)) rest.push_back(static_cast<Label>(v));
    std::vector<Label> stack;
    std::vector<bool> seen(n);
    KeySet& local = shard_sets[shard];
    do {
      std::copy(rest.begin(), rest.end(), tau.begin() + 1);
      if (connected_pair(sigma, tau, stack, seen))
        local.insert(canonical_key_raw(sigma, tau));
    } while (std::next_permutation(rest.begin(), rest.end()));
  });
  for (auto& shard : shard_sets)
    for (auto& key : shard) into.insert(std::move(key));
}

Classification record_flags(const CensusRecord& r) {
  Classification c;
  c.stratum = r.stratum;
  c.reduced = r.reduced;
  c.primitive = r.primitive;
  c.normal = r.normal;
  c.holonomy_torus = r.holonomy_torus;
  c.visibility = r.visibility;
  c.symmetry_torus = r.symmetry_torus;
  c.characteristic = r.characteristic;
  c.unit_saddle = r.unit_saddle;
  return c;
}

}  // namespace

std::vector<CanonicalKey> census_keys(int n, const CensusOptions& options) {
  const int hard_max = options.allow_large ? std::max(options.max_n, 10) : options.max_n;
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > hard_max)
    throw std::invalid_argument(
        "n exceeds the enumeration cap (raise max_n / allow_large)");

  const int workers = worker_count(options.workers);
  std::vector<CanonicalKey> keys;
  for (const auto& parts : partitions(n)) {
    // Cross-type duplicates are impossible: relabeling preserves the sigma
    // cycle type, so deduplication is per partition.
    KeySet set;
    keys_for_partition(parts, n, workers, set);
    keys.reserve(keys.size() + set.size());
    for (auto& key : set) keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<CensusRecord> classify_keys(std::vector<CanonicalKey> keys, int workers) {
  workers = worker_count(workers);
  std::vector<CensusRecord> records(keys.size());
  parallel_for_index(keys.size(), workers, [&](std::size_t i) {
    Origami o = origami_from_key(keys[i]);
    CensusRecord r;
    r.key = std::move(keys[i]);
    r.stratum = stratum(o);
    r.reduced = is_reduced(o);
    r.primitive = is_primitive(o);
    r.normal = is_normal(o);
    r.holonomy_torus = is_holonomy_torus(o);
    r.unit_saddle = r.stratum.empty() ? o.squares() == 1 : has_unit_saddle(o);
    records[i] = std::move(r);
  });

  // Orbit pass over the reduced records: each SL(2,Z) orbit is found once,
  // and visibility / symmetry / orbit size are per-orbit facts.
  std::unordered_map<CanonicalKey, std::size_t, CanonicalKeyHash> index_of;
  index_of.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) index_of.emplace(records[i].key, i);

  std::vector<bool> done(records.size(), false);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (done[i] || !records[i].reduced) continue;
    std::vector<std::size_t> members;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    std::deque<CanonicalKey> frontier;
    seen.insert(records[i].key);
    frontier.push_back(records[i].key);
    bool all_unit = true;
    const bool genus_one = records[i].stratum.empty();
    while (!frontier.empty()) {
      CanonicalKey key = std::move(frontier.front());
      frontier.pop_front();
      auto it = index_of.find(key);
      if (it == index_of.end())
        throw std::logic_error("SL(2,Z) orbit escaped the classified key set");
      members.push_back(it->second);
      Origami cur = origami_from_key(key);
      if (!genus_one && !has_horizontal_unit_saddle(cur)) all_unit = false;
      for (const Origami& next : {act_T(cur), act_S(cur)}) {
        CanonicalKey nk = canonical_key(next);
        if (seen.insert(nk).second) frontier.push_back(std::move(nk));
      }
    }
    const std::uint64_t size = members.size();
    for (std::size_t idx : members) {
      CensusRecord& r = records[idx];
      r.orbit_size = size;
      r.symmetry_torus = size == 1;
      r.visibility = genus_one ? origami_from_key(r.key).squares() == 1 : all_unit;
      done[idx] = true;
    }
  }

  parallel_for_index(records.size(), workers, [&](std::size_t i) {
    records[i].characteristic = records[i].normal && records[i].symmetry_torus;
    check_flag_implications(record_flags(records[i]), records[i].key.squares());
  });
  return records;
}

std::vector<CensusRecord> census(int n, const CensusOptions& options) {
  std::vector<CanonicalKey> keys = census_keys(n, options);
  if (!options.classify) {
    std::vector<CensusRecord> records(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      records[i].stratum = stratum(origami_from_key(keys[i]));
      records[i].key = std::move(keys[i]);
    }
    return records;
  }
  return classify_keys(std::move(keys), options.workers);
}

std::vector<CensusRecord> census(int n, const CensusOptions& options,
                                 const std::function<bool(const CensusRecord&)>& filter) {
  std::vector<CensusRecord> all = census(n, options);
  std::vector<CensusRecord> out;
  for (auto& r : all)
    if (filter(r)) out.push_back(std::move(r));
  return out;
}

std::vector<CensusRecord> census_stratum(int n, const Stratum& alpha,
                                         const CensusOptions& options) {
  if (!alpha.valid()) throw std::invalid_argument("invalid stratum");
  if (n < std::max(alpha.min_squares(), 1)) return {};
  return census(n, options,
                [&](const CensusRecord& r) { return r.stratum == alpha; });
}

CensusSummary summarize(const std::vector<CensusRecord>& records) {
  CensusSummary s;
  s.total = static_cast<std::int64_t>(records.size());
  for (const auto& r : records) {
    s.reduced += r.reduced;
    s.primitive += r.primitive;
    s.normal += r.normal;
    if (r.reduced) {
      s.holonomy += r.holonomy_torus;
      s.visibility += r.visibility;
      s.nonvisibility += !r.visibility;
      s.symmetry += r.symmetry_torus;
      s.unit_saddle += r.unit_saddle;
    }
    s.characteristic += r.characteristic;
  }
  return s;
}

}  // namespace sts
