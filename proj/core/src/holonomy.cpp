#include "sts/holonomy.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace sts {

std::int64_t SaddleInventory::total() const {
  std::int64_t t = 0;
  for (const auto& [len, c] : lengths) t += c;
  return t;
}

namespace {

std::vector<bool> singular_corners(const Origami& o) {
  Perm c = o.commutator();
  std::vector<bool> sing(o.squares());
  bool any = false;
  for (int i = 0; i < o.squares(); ++i) {
    sing[i] = c(static_cast<Label>(i)) != i;
    any = any || sing[i];
  }
  if (!any) throw std::invalid_argument("no cone points: saddles are undefined in genus 1");
  return sing;
}

}  // namespace

SaddleInventory horizontal_saddles(const Origami& o, int max_length) {
  std::vector<bool> sing = singular_corners(o);
  const auto& s = o.sigma().images();
  SaddleInventory inv;
  for (int i = 0; i < o.squares(); ++i) {
    if (!sing[i]) continue;
    Label j = s[i];
    for (int len = 1; len <= max_length; ++len, j = s[j]) {
      if (sing[j]) {
        ++inv.lengths[len];
        break;
      }
    }
  }
  return inv;
}

bool has_horizontal_unit_saddle(const Origami& o) {
  Perm c = o.commutator();
  const auto& s = o.sigma().images();
  for (int i = 0; i < o.squares(); ++i)
    if (c(static_cast<Label>(i)) != i && c(s[i]) != s[i]) return true;
  return false;
}

bool has_unit_saddle(const Origami& o) {
  if (stratum(o).empty()) return o.squares() == 1;
  return has_horizontal_unit_saddle(o) || has_horizontal_unit_saddle(act_S(o));
}

bool hol_contains(const Origami& o, HolonomyVector v) {
  if (v.a == 0 && v.b == 0) throw std::invalid_argument("zero holonomy vector");
  std::int64_t k = std::gcd(std::llabs(v.a), std::llabs(v.b));
  if (stratum(o).empty()) {
    if (o.squares() != 1)
      throw std::invalid_argument("Hol is undefined for genus-1 covers beyond the unit torus");
    return k == 1;  // Hol(T) = RP
  }
  Origami moved = apply_word(o, word_sending_to_horizontal(v.a / k, v.b / k));
  return horizontal_saddles(moved, static_cast<int>(k)).count(static_cast<int>(k)) > 0;
}

HolonomyBall hol_ball(const Origami& o, double r, double radius_cap) {
  if (r < 1) throw std::invalid_argument("radius must be >= 1");
  HolonomyBall ball;
  const std::int64_t rmax = static_cast<std::int64_t>(std::floor(r));
  const double r2 = r * r;

  const bool torus = stratum(o).empty();
  if (torus && o.squares() != 1)
    throw std::invalid_argument("Hol is undefined for genus-1 covers beyond the unit torus");
  if (!torus && r > radius_cap)
    throw std::invalid_argument("radius exceeds the saddle-tracing cap");

  // Primitive directions in the half plane q > 0, plus (1, 0); signs added
  // at insertion since Hol is symmetric under negation.
  for (std::int64_t q = 0; q <= rmax; ++q) {
    for (std::int64_t p = (q == 0 ? 1 : -rmax); p <= rmax; ++p) {
      if (q == 0 && p != 1) continue;
      double norm2 = double(p) * p + double(q) * q;
      if (norm2 > r2 || std::gcd(std::llabs(p), q) != 1) continue;
      int kmax = static_cast<int>(std::floor(std::sqrt(r2 / norm2)));
      if (kmax < 1) continue;
      if (torus) {
        ball.vectors.insert({p, q});
        ball.vectors.insert({-p, -q});
        ball.saddle_count += 2;
        continue;
      }
      Origami moved = apply_word(o, word_sending_to_horizontal(p, q));
      SaddleInventory inv = horizontal_saddles(moved, kmax);
      for (const auto& [len, count] : inv.lengths) {
        ball.vectors.insert({len * p, len * q});
        ball.vectors.insert({-len * p, -len * q});
        ball.saddle_count += 2 * count;
      }
    }
  }
  return ball;
}

bool is_visibility(const Origami& o) {
  if (!is_reduced(o))
    throw std::invalid_argument("visibility is defined for reduced origamis only");
  if (stratum(o).empty()) return true;  // the 1-square torus

  // Orbit scan with early exit: the first orbit element without a unit
  // horizontal saddle witnesses a missing primitive vector.
  std::set<CanonicalKey> seen;
  std::deque<CanonicalKey> frontier;
  CanonicalKey start = canonical_key(o);
  seen.insert(start);
  frontier.push_back(std::move(start));
  while (!frontier.empty()) {
    Origami cur = origami_from_key(frontier.front());
    frontier.pop_front();
    if (!has_horizontal_unit_saddle(cur)) return false;
    for (const Origami& next : {act_T(cur), act_S(cur)}) {
      CanonicalKey key = canonical_key(next);
      if (seen.insert(key).second) frontier.push_back(std::move(key));
    }
  }
  return true;
}

Classification classify(const Origami& o, bool with_orbit) {
  Classification c;
  c.stratum = stratum(o);
  c.reduced = is_reduced(o);
  c.primitive = is_primitive(o);
  c.normal = is_normal(o);

  const bool genus_one = c.stratum.empty();
  const int n = o.squares();
  c.holonomy_torus = is_holonomy_torus(o);
  c.unit_saddle = genus_one ? n == 1 : has_unit_saddle(o);

  if (c.reduced) {
    OrbitSummary orb = orbit(o);
    c.orbit_size = orb.size;
    c.symmetry_torus = orb.size == 1;
    if (genus_one) {
      c.visibility = n == 1;
    } else {
      c.visibility = true;
      for (const CanonicalKey& key : orb.representatives) {
        if (!has_horizontal_unit_saddle(origami_from_key(key))) {
          c.visibility = false;
          break;
        }
      }
    }
  }
  c.characteristic = c.normal && c.symmetry_torus;
  if (!with_orbit) c.orbit_size.reset();

  check_flag_implications(c, n);
  return c;
}

void check_flag_implications(const Classification& c, int n) {
  auto fail = [](const char* what) {
    throw std::logic_error(std::string("flag implication violated: ") + what);
  };
  if (c.characteristic && !(c.normal && c.symmetry_torus)) fail("C => N and S");
  if (c.normal && c.symmetry_torus && !c.characteristic) fail("N and S => C");
  if (c.characteristic && !(c.holonomy_torus && c.visibility)) fail("C => H and V");
  if (c.holonomy_torus && !c.visibility) fail("H => V");
  if (c.holonomy_torus && !c.unit_saddle) fail("H => U");
  if (c.visibility && !c.unit_saddle) fail("V => U");
  if (c.primitive && n > 1 && !c.reduced) fail("P => R");
  if (c.visibility && !c.reduced) fail("V => R");
  if (c.symmetry_torus && !c.reduced) fail("S => R");
  if (c.normal && !c.stratum.empty() && !c.holonomy_torus) fail("N => H in genus >= 2");
}

}  // namespace sts
