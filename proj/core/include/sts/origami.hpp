#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "sts/perm.hpp"

namespace sts {

// A square-tiled surface with n unit squares: sigma sends each square to its
// right neighbor, tau to its upper neighbor. The surface is connected iff the
// group generated by (sigma, tau) acts transitively on the squares.
class Origami {
 public:
  Origami(Perm sigma, Perm tau);

  const Perm& sigma() const { return sigma_; }
  const Perm& tau() const { return tau_; }
  int squares() const { return sigma_.size(); }

  // sigma tau sigma^-1 tau^-1 (right factor applied first). Its cycles index
  // the surface vertices: the cycle through square i collects exactly the
  // squares whose bottom-left corner is the same point of the surface, and a
  // cycle of length k marks a cone point of angle 2*pi*k.
  Perm commutator() const;

  bool connected() const;

  friend bool operator==(const Origami&, const Origami&) = default;

 private:
  Perm sigma_, tau_;
};

bool is_connected(const Perm& sigma, const Perm& tau);

// Flat encoding (n, sigma images, tau images) of the canonical form of an
// origami under simultaneous relabeling of squares. Two origamis have equal
// keys iff one is a relabeling of the other.
//
// Canonical form: for every base square b, relabel squares in breadth-first
// discovery order from b (sigma-edge explored before tau-edge at each
// dequeued square) and keep the lexicographically least of the n encodings.
struct CanonicalKey {
  std::vector<Label> bytes;  // [n, sigma'(0..n-1), tau'(0..n-1)], 0-based

  int squares() const { return bytes.empty() ? 0 : int(bytes[0]); }
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes <=> b.bytes;
  }
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    return std::hash<std::string_view>{}(std::string_view(
        reinterpret_cast<const char*>(k.bytes.data()), k.bytes.size()));
  }
};

// Requires a connected origami (throws std::invalid_argument otherwise).
CanonicalKey canonical_key(const Origami& o);
// Raw-vector variant used by enumeration loops; no connectivity check.
CanonicalKey canonical_key_raw(const std::vector<Label>& sigma,
                               const std::vector<Label>& tau);

Origami origami_from_key(const CanonicalKey& key);
Origami canonical_form(const Origami& o);

// The simultaneous conjugation (g sigma g^-1, g tau g^-1): square i renamed
// to g(i).
Origami relabeled(const Origami& o, const Perm& g);

}  // namespace sts
