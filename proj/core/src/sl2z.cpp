#include "sts/sl2z.hpp"

#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "sts/topology.hpp"

namespace sts {

Origami act_T(const Origami& o) {
  // tau' = tau sigma^-1, computed as tau'[sigma[i]] = tau[i].
  const auto& s = o.sigma().images();
  const auto& t = o.tau().images();
  std::vector<Label> img(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) img[s[i]] = t[i];
  return Origami(o.sigma(), Perm(std::move(img)));
}

Origami act_T_inv(const Origami& o) { return Origami(o.sigma(), o.tau() * o.sigma()); }

Origami act_T_pow(const Origami& o, int m) {
  const auto& s = o.sigma().images();
  const auto& t = o.tau().images();
  const int n = o.squares();
  // sigma^m as an index map, then tau' = tau sigma^-m via tau'[sigma^m[i]] = tau[i].
  std::vector<Label> pw(n);
  for (int i = 0; i < n; ++i) pw[i] = static_cast<Label>(i);
  const bool fwd = m >= 0;
  std::vector<Label> sinv;
  if (!fwd) {
    sinv.resize(n);
    for (int i = 0; i < n; ++i) sinv[s[i]] = static_cast<Label>(i);
  }
  for (int step = 0; step < std::abs(m); ++step)
    for (int i = 0; i < n; ++i) pw[i] = fwd ? s[pw[i]] : sinv[pw[i]];
  std::vector<Label> img(n);
  for (int i = 0; i < n; ++i) img[pw[i]] = t[i];
  return Origami(o.sigma(), Perm(std::move(img)));
}

Origami act_S(const Origami& o) { return Origami(o.tau().inverse(), o.sigma()); }

Origami act_S_inv(const Origami& o) { return Origami(o.tau(), o.sigma().inverse()); }

Origami apply_word(const Origami& o, const std::vector<Gen>& word) {
  Origami cur = o;
  for (Gen g : word) {
    switch (g) {
      case Gen::T: cur = act_T(cur); break;
      case Gen::TInv: cur = act_T_inv(cur); break;
      case Gen::S: cur = act_S(cur); break;
    }
  }
  return cur;
}

std::vector<Gen> word_sending_to_horizontal(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("zero vector");
  std::vector<Gen> word;
  auto push_T_pow = [&](std::int64_t m) {
    for (std::int64_t i = 0; i < std::llabs(m); ++i)
      word.push_back(m > 0 ? Gen::T : Gen::TInv);
  };
  // Euclidean reduction: T^m replaces p by p + m q, S replaces (p,q) by (-q,p).
  while (q != 0) {
    if (p != 0) {
      std::int64_t m = -(p / q);
      push_T_pow(m);
      p += m * q;
    }
    if (q != 0) {
      word.push_back(Gen::S);
      std::int64_t np = -q, nq = p;
      p = np;
      q = nq;
    }
  }
  if (p != 1 && p != -1)
    throw std::invalid_argument("vector is not primitive");
  if (p == -1) {  // S^2 = -I
    word.push_back(Gen::S);
    word.push_back(Gen::S);
  }
  return word;
}

OrbitCapExceeded::OrbitCapExceeded(std::uint64_t cap)
    : std::runtime_error("SL(2,Z) orbit exceeds cap of " + std::to_string(cap) +
                         " classes; partial result discarded") {}

OrbitSummary orbit(const Origami& o, std::uint64_t cap) {
  OrbitSummary out;
  std::deque<CanonicalKey> frontier;
  CanonicalKey start = canonical_key(o);
  out.representatives.insert(start);
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    Origami cur = origami_from_key(frontier.front());
    frontier.pop_front();
    for (const Origami& next : {act_T(cur), act_S(cur)}) {
      CanonicalKey key = canonical_key(next);
      if (out.representatives.insert(key).second) {
        if (out.representatives.size() > cap) throw OrbitCapExceeded(cap);
        frontier.push_back(std::move(key));
      }
    }
  }
  out.size = out.representatives.size();
  return out;
}

std::uint64_t veech_index(const Origami& o) {
  if (!is_reduced(o))
    throw std::invalid_argument("veech_index is defined for reduced origamis only");
  return orbit(o).size;
}

bool is_symmetry_torus(const Origami& o) {
  if (!is_reduced(o)) return false;
  // Early exit: any distinct neighbor settles it.
  CanonicalKey self = canonical_key(o);
  return canonical_key(act_T(o)) == self && canonical_key(act_S(o)) == self;
}

bool is_characteristic(const Origami& o) {
  bool normal = is_normal(o);
  bool primary = normal && is_symmetry_torus(o);

  // Cross-check on reduced surfaces, where "normal symmetry torus" is
  // equivalent to invariance of the pointed cover under every automorphism
  // of the free group. (A non-reduced normal cover can be fixed by all
  // three Nielsen moves without being a symmetry torus: the Klein
  // four-group cover (12)(34), (13)(24) sits over a verbal subgroup.)
  if (normal && is_reduced(o)) {
    CanonicalKey self = canonical_key(o);
    const Origami swapped(o.tau(), o.sigma());
    const Origami inverted(o.sigma().inverse(), o.tau());
    const Origami multiplied(o.sigma() * o.tau(), o.tau());
    bool nielsen = canonical_key(swapped) == self &&
                   canonical_key(inverted) == self &&
                   canonical_key(multiplied) == self;
    if (primary != nielsen)
      throw std::logic_error("characteristic checks disagree");
  }
  return primary;
}

}  // namespace sts
