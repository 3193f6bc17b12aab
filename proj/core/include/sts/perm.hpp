#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sts {

// Square labels are stored 0-based internally. All text I/O (cycle strings,
// one-line image lists, census files) is 1-based; only parse/print code
// translates.
using Label = std::uint8_t;

inline constexpr int kMaxSquares = 255;

// A permutation of {0,...,n-1} in one-line image form: images()[i] is the
// image of i.
//
// Composition convention, used everywhere in this library: (a * b) applies
// b first, then a, i.e. (a * b)(i) = a(b(i)). Every word written in the
// code (commutators, shear rewritings, SL(2,Z) words) reads right-to-left
// under this rule.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Label> images);

  static Perm identity(int n);
  // Cycle entries are 1-based, matching the usual written notation.
  // Labels not mentioned are fixed. Example: from_cycles(6, {{1,2,3,4},{5,6}}).
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(img_.size()); }
  Label operator()(Label i) const { return img_[i]; }
  const std::vector<Label>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;

  // Lengths of all cycles (fixed points included), sorted descending.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<Label>> cycles() const;

  // a * b applies b first: (a*b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<Label> img_;
};

// g p g^{-1}: the relabeling of p by g (square i becomes square g(i)).
Perm conjugated(const Perm& p, const Perm& g);

// 1-based one-line rendering, e.g. "2,3,4,1,6,5".
std::string to_one_line(const Perm& p);
// 1-based cycle rendering with fixed points as singletons, e.g. "(1,2)(3)".
std::string to_cycle_string(const Perm& p);

}  // namespace sts
