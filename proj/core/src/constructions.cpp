#include "sts/constructions.hpp"

#include <numeric>
#include <stdexcept>

namespace sts {

namespace {

struct CylinderSpec {
  int width = 0, height = 0, twist = 0;
  std::vector<int> top;     // saddle ids left to right along the top boundary
  std::vector<int> bottom;  // saddle ids along the bottom boundary
};

// Realize a horizontal cylinder diagram as a permutation pair. Each saddle
// id must appear exactly once among the tops and once among the bottoms;
// boundary lengths must match the widths.
Origami build_from_cylinders(const std::vector<CylinderSpec>& cyls,
                             const std::vector<int>& saddle_len) {
  const int num_saddles = static_cast<int>(saddle_len.size());
  std::vector<int> base(cyls.size() + 1, 0);
  for (std::size_t c = 0; c < cyls.size(); ++c) {
    if (cyls[c].width < 1 || cyls[c].height < 1 ||
        cyls[c].twist < 0 || cyls[c].twist >= cyls[c].width)
      throw std::invalid_argument("cylinder parameters out of range");
    base[c + 1] = base[c] + cyls[c].width * cyls[c].height;
  }
  const int n = base.back();
  if (n > kMaxSquares) throw std::invalid_argument("too many squares");

  // For each saddle: which cylinder's bottom it lies on, and at what offset.
  std::vector<int> bot_cyl(num_saddles, -1), bot_off(num_saddles, -1);
  for (std::size_t c = 0; c < cyls.size(); ++c) {
    int off = 0;
    for (int sid : cyls[c].bottom) {
      if (bot_cyl[sid] != -1) throw std::invalid_argument("saddle repeated on bottoms");
      bot_cyl[sid] = static_cast<int>(c);
      bot_off[sid] = off;
      off += saddle_len[sid];
    }
    if (off != cyls[c].width) throw std::invalid_argument("bottom boundary length mismatch");
  }

  std::vector<Label> s(n), t(n);
  for (std::size_t c = 0; c < cyls.size(); ++c) {
    const auto& cyl = cyls[c];
    const int w = cyl.width, h = cyl.height;
    auto square = [&](int row, int col) { return base[c] + row * w + col; };
    for (int row = 0; row < h; ++row)
      for (int col = 0; col < w; ++col)
        s[square(row, col)] = static_cast<Label>(square(row, (col + 1) % w));
    for (int row = 0; row + 1 < h; ++row)
      for (int col = 0; col < w; ++col)
        t[square(row, col)] = static_cast<Label>(square(row + 1, col));

    // Top boundary: rotate by the twist, locate the saddle under each unit
    // edge, and glue to the matching bottom.
    int check = 0;
    for (int sid : cyl.top) check += saddle_len[sid];
    if (check != w) throw std::invalid_argument("top boundary length mismatch");
    for (int col = 0; col < w; ++col) {
      int u = (col - cyl.twist) % w;
      if (u < 0) u += w;
      int sid = -1, within = 0;
      for (int cand : cyl.top) {
        if (u < saddle_len[cand]) {
          sid = cand;
          within = u;
          break;
        }
        u -= saddle_len[cand];
      }
      if (bot_cyl[sid] < 0) throw std::invalid_argument("saddle missing from bottoms");
      t[square(h - 1, col)] = static_cast<Label>(
          base[bot_cyl[sid]] + bot_off[sid] + within);
    }
  }
  return Origami(Perm(std::move(s)), Perm(std::move(t)));
}

void expect_stratum(const Origami& o, const Stratum& want, const char* what) {
  if (stratum(o) != want)
    throw std::logic_error(std::string(what) + ": constructed surface left its stratum");
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Origami build_h2(const H2OneCylinder& v) {
  require(v.k >= 1 && v.l >= 1 && v.m >= 1 && v.p >= 1, "lengths must be positive");
  const int w = v.k + v.l + v.m;
  require(v.shear >= 0 && v.shear < w, "shear out of range");
  enum { K, L, M };
  Origami o = build_from_cylinders(
      {{w, v.p, v.shear, {K, M, L}, {K, L, M}}}, {v.k, v.l, v.m});
  expect_stratum(o, Stratum{2}, "build_h2 one-cylinder");
  return o;
}

Origami build_h2(const H2TwoCylinder& v) {
  require(v.p >= 1 && v.q >= 1 && v.l >= 1 && v.k > v.l, "need k > l >= 1, p,q >= 1");
  require(v.shear_k >= 0 && v.shear_k < v.k, "shear_k out of range");
  require(v.shear_l >= 0 && v.shear_l < v.l, "shear_l out of range");
  // F: free saddle of the big cylinder; Y: shared interior saddle; Z: top of
  // the small cylinder, landing on the big cylinder's bottom.
  enum { F, Y, Z };
  Origami o = build_from_cylinders(
      {{v.k, v.p, v.shear_k, {Y, F}, {Z, F}},
       {v.l, v.q, v.shear_l, {Z}, {Y}}},
      {v.k - v.l, v.l, v.l});
  expect_stratum(o, Stratum{2}, "build_h2 two-cylinder");
  return o;
}

Origami build_h11(const H11TypeA& v) {
  require(v.p >= 1 && v.j >= 1 && v.k >= 1 && v.l >= 1 && v.m >= 1, "lengths must be positive");
  const int w = v.j + v.k + v.l + v.m;
  require(v.shear >= 0 && v.shear < w, "shear out of range");
  enum { J, K, L, M };
  Origami o = build_from_cylinders(
      {{w, v.p, v.shear, {J, M, L, K}, {J, K, L, M}}}, {v.j, v.k, v.l, v.m});
  expect_stratum(o, Stratum{1, 1}, "build_h11 type A");
  return o;
}

Origami build_h11(const H11TypeB& v) {
  require(v.p >= 1 && v.q >= 1 && v.k >= 1 && v.l >= 1 && v.m >= 1, "lengths must be positive");
  const int w = v.k + v.l + v.m;
  require(v.shear_big >= 0 && v.shear_big < w, "shear_big out of range");
  require(v.shear_small >= 0 && v.shear_small < v.m, "shear_small out of range");
  // SH: interior saddle under the small cylinder; M2: small cylinder's top.
  enum { K, L, SH, M2 };
  Origami o = build_from_cylinders(
      {{w, v.p, v.shear_big, {SH, K, L}, {M2, L, K}},
       {v.m, v.q, v.shear_small, {M2}, {SH}}},
      {v.k, v.l, v.m, v.m});
  expect_stratum(o, Stratum{1, 1}, "build_h11 type B");
  return o;
}

Origami build_h11(const H11TypeC& v) {
  require(v.p >= 1 && v.q >= 1 && v.k >= 1 && v.l >= 1 && v.m >= 1, "lengths must be positive");
  require(v.shear_bottom >= 0 && v.shear_bottom < v.k + v.l, "shear_bottom out of range");
  require(v.shear_top >= 0 && v.shear_top < v.l + v.m, "shear_top out of range");
  // LB: interior saddle between the cylinders; LA: the other length-l saddle.
  enum { K, M, LA, LB };
  Origami o = build_from_cylinders(
      {{v.k + v.l, v.p, v.shear_bottom, {LB, K}, {LA, K}},
       {v.l + v.m, v.q, v.shear_top, {M, LA}, {M, LB}}},
      {v.k, v.m, v.l, v.l});
  expect_stratum(o, Stratum{1, 1}, "build_h11 type C");
  return o;
}

Origami build_h11(const H11TypeD& v) {
  require(v.p >= 1 && v.q >= 1 && v.r >= 1 && v.k >= 1 && v.l >= 1, "lengths must be positive");
  require(v.shear_bottom >= 0 && v.shear_bottom < v.k, "shear_bottom out of range");
  require(v.shear_middle >= 0 && v.shear_middle < v.k + v.l, "shear_middle out of range");
  require(v.shear_top >= 0 && v.shear_top < v.l, "shear_top out of range");
  // KB/LB: interior saddles below/above the middle cylinder; KA/LA their
  // boundary partners.
  enum { KA, KB, LA, LB };
  Origami o = build_from_cylinders(
      {{v.k, v.p, v.shear_bottom, {KB}, {KA}},
       {v.k + v.l, v.q, v.shear_middle, {LB, KA}, {LA, KB}},
       {v.l, v.r, v.shear_top, {LA}, {LB}}},
      {v.k, v.k, v.l, v.l});
  expect_stratum(o, Stratum{1, 1}, "build_h11 type D");
  return o;
}

Origami one_cylinder(const Stratum& alpha, int n) {
  if (!alpha.valid()) throw std::invalid_argument("invalid stratum");
  const int min_n = alpha.min_squares();
  if (n < std::max(min_n, 1) || n > kMaxSquares)
    throw std::invalid_argument("square count out of range for this stratum");

  // Gluing blocks in 0-based offsets, each led by a fixed square so that
  // consecutive blocks do not merge their vertex cycles. Even order a:
  // fixed square, then a/2 transpositions of adjacent squares. Odd pair
  // (2p-1, 2q-1): fixed square, p-1 transpositions, the bridge (x, x+2)
  // with x+1 fixed, then q-1 transpositions.
  std::vector<std::vector<std::pair<int, int>>> blocks;
  std::vector<int> block_len;
  std::vector<int> odd;
  for (int a : alpha.alpha) {
    if (a % 2 == 0) {
      std::vector<std::pair<int, int>> tr;
      for (int i = 1; i < a; i += 2) tr.emplace_back(i, i + 1);
      blocks.push_back(std::move(tr));
      block_len.push_back(a + 1);
    } else {
      odd.push_back(a);
    }
  }
  for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
    int p = (odd[i] + 1) / 2, q = (odd[i + 1] + 1) / 2;
    std::vector<std::pair<int, int>> tr;
    for (int j = 1; j + 1 <= 2 * p - 2; j += 2) tr.emplace_back(j, j + 1);
    tr.emplace_back(2 * p - 1, 2 * p + 1);
    for (int j = 2 * p + 2; j + 1 <= 2 * p + 2 * q - 1; j += 2) tr.emplace_back(j, j + 1);
    blocks.push_back(std::move(tr));
    block_len.push_back(2 * p + 2 * q);
  }

  std::vector<Label> t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<Label>(i);
  int offset = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto [x, y] : blocks[b]) {
      t[offset + x] = static_cast<Label>(offset + y);
      t[offset + y] = static_cast<Label>(offset + x);
    }
    offset += block_len[b];
  }
  // spacer squares fill the tail up to n

  std::vector<Label> s(n);
  for (int i = 0; i < n; ++i) s[i] = static_cast<Label>((i + 1) % n);
  Origami o(Perm(std::move(s)), Perm(std::move(t)));
  expect_stratum(o, alpha, "one_cylinder");
  return o;
}

Origami split_square_nonvisibility(const Stratum& alpha) {
  if (!alpha.valid() || alpha.empty())
    throw std::invalid_argument("split square construction needs genus >= 2");
  const int m = alpha.min_squares();
  Origami minimal = one_cylinder(alpha, m);

  int fixed = -1;
  for (int i = 0; i < m; ++i) {
    if (minimal.tau()(static_cast<Label>(i)) == i) {
      fixed = i;
      break;
    }
  }
  if (fixed < 0) throw std::logic_error("minimal one-cylinder surface has no self-glued square");

  // Widen the self-glued square into 2g-1+s self-glued squares.
  const int inserted = m;      // (2g-1+s) - 1 new squares
  const int n = 2 * m;         // 4g-4+2s
  auto renamed = [&](int i) { return i <= fixed ? i : i + inserted; };
  std::vector<Label> t(n);
  for (int i = 0; i < n; ++i) t[i] = static_cast<Label>(i);
  for (int i = 0; i < m; ++i)
    t[renamed(i)] = static_cast<Label>(renamed(minimal.tau()(static_cast<Label>(i))));
  std::vector<Label> s(n);
  for (int i = 0; i < n; ++i) s[i] = static_cast<Label>((i + 1) % n);
  Origami o(Perm(std::move(s)), Perm(std::move(t)));
  expect_stratum(o, alpha, "split_square_nonvisibility");
  return o;
}

std::vector<H2OneCylinder> all_h2_one_cylinder(int n) {
  std::vector<H2OneCylinder> out;
  for (int r = 3; r <= n; ++r) {
    if (n % r != 0) continue;
    int p = n / r;
    for (int k = 1; k <= r - 2; ++k)
      for (int l = 1; l <= r - k - 1; ++l) {
        int m = r - k - l;
        for (int a = 0; a < r; ++a) out.push_back({k, l, m, p, a});
      }
  }
  return out;
}

std::vector<H2TwoCylinder> all_h2_two_cylinder(int n) {
  std::vector<H2TwoCylinder> out;
  for (int k = 2; k < n; ++k)
    for (int l = 1; l < k; ++l)
      for (int p = 1; p * k < n; ++p) {
        int rem = n - p * k;
        if (rem % l != 0) continue;
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < l; ++b) out.push_back({p, rem / l, k, l, a, b});
      }
  return out;
}

std::vector<H11TypeA> all_h11_type_a(int n) {
  std::vector<H11TypeA> out;
  for (int w = 4; w <= n; ++w) {
    if (n % w != 0) continue;
    int p = n / w;
    for (int j = 1; j <= w - 3; ++j)
      for (int k = 1; k <= w - j - 2; ++k)
        for (int l = 1; l <= w - j - k - 1; ++l) {
          int m = w - j - k - l;
          for (int a = 0; a < w; ++a) out.push_back({p, j, k, l, m, a});
        }
  }
  return out;
}

std::vector<H11TypeB> all_h11_type_b(int n) {
  std::vector<H11TypeB> out;
  for (int k = 1; k < n; ++k)
    for (int l = 1; k + l < n; ++l)
      for (int m = 1; k + l + m < n; ++m) {
        int w = k + l + m;
        for (int p = 1; p * w < n; ++p) {
          int rem = n - p * w;
          if (rem % m != 0) continue;
          int q = rem / m;
          for (int a = 0; a < w; ++a)
            for (int b = 0; b < m; ++b) out.push_back({p, q, k, l, m, a, b});
        }
      }
  return out;
}

std::vector<H11TypeC> all_h11_type_c(int n) {
  std::vector<H11TypeC> out;
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l)
      for (int m = 1; m < n; ++m) {
        int wb = k + l, wt = l + m;
        for (int p = 1; p * wb < n; ++p) {
          int rem = n - p * wb;
          if (rem % wt != 0) continue;
          int q = rem / wt;
          for (int a = 0; a < wb; ++a)
            for (int b = 0; b < wt; ++b) out.push_back({p, q, k, l, m, a, b});
        }
      }
  return out;
}

std::vector<H11TypeD> all_h11_type_d(int n) {
  std::vector<H11TypeD> out;
  for (int k = 1; k < n; ++k)
    for (int l = 1; l < n; ++l) {
      int wm = k + l;
      for (int p = 1; p * k < n; ++p)
        for (int q = 1; p * k + q * wm < n; ++q) {
          int rem = n - p * k - q * wm;
          if (rem % l != 0) continue;
          int r = rem / l;
          for (int a = 0; a < k; ++a)
            for (int b = 0; b < wm; ++b)
              for (int g = 0; g < l; ++g) out.push_back({p, q, r, k, l, a, b, g});
        }
    }
  return out;
}

std::set<CanonicalKey> h2_one_cylinder_keys(int n) {
  std::set<CanonicalKey> keys;
  for (const auto& v : all_h2_one_cylinder(n)) keys.insert(canonical_key(build_h2(v)));
  return keys;
}

std::set<CanonicalKey> h2_family_keys(int n) {
  std::set<CanonicalKey> keys = h2_one_cylinder_keys(n);
  for (const auto& v : all_h2_two_cylinder(n)) keys.insert(canonical_key(build_h2(v)));
  return keys;
}

std::set<CanonicalKey> h11_family_keys(int n) {
  std::set<CanonicalKey> keys;
  for (const auto& v : all_h11_type_a(n)) keys.insert(canonical_key(build_h11(v)));
  for (const auto& v : all_h11_type_b(n)) keys.insert(canonical_key(build_h11(v)));
  for (const auto& v : all_h11_type_c(n)) keys.insert(canonical_key(build_h11(v)));
  for (const auto& v : all_h11_type_d(n)) keys.insert(canonical_key(build_h11(v)));
  return keys;
}

Origami unit_torus() { return Origami(Perm::identity(1), Perm::identity(1)); }

Origami genus_two_six_square() {
  return Origami(Perm::from_cycles(6, {{1, 2, 3, 4}, {5, 6}}),
                 Perm::from_cycles(6, {{1, 5}, {2, 6}, {3, 4}}));
}

Origami ew_surface() {
  return Origami(Perm::from_cycles(8, {{1, 2, 3, 4}, {5, 7, 6, 8}}),
                 Perm::from_cycles(8, {{1, 5, 3, 6}, {2, 8, 4, 7}}));
}

Origami ornithorynque() {
  return Origami(
      Perm::from_cycles(12, {{1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12}}),
      Perm::from_cycles(12, {{1, 7, 3, 11, 5, 9}, {2, 12, 6, 8, 4, 10}}));
}

Origami swiss_cross() {
  return Origami(Perm::from_cycles(5, {{1, 2, 3}}),
                 Perm::from_cycles(5, {{1, 4, 5}}));
}

Origami four_square_holonomy_torus() {
  return Origami(Perm::from_cycles(4, {{1, 2}, {3, 4}}),
                 Perm::from_cycles(4, {{1, 4}}));
}

Origami l_shaped(int n) {
  if (n < 3) throw std::invalid_argument("l_shaped needs n >= 3");
  std::vector<int> row(n - 1);
  std::iota(row.begin(), row.end(), 1);
  return Origami(Perm::from_cycles(n, {row}), Perm::from_cycles(n, {{1, n}}));
}

}  // namespace sts
