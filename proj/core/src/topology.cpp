#include "sts/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace sts {

Stratum::Stratum(std::initializer_list<int> a) : alpha(a) {
  std::sort(alpha.begin(), alpha.end(), std::greater<int>());
}

Stratum::Stratum(std::vector<int> a) : alpha(std::move(a)) {
  std::sort(alpha.begin(), alpha.end(), std::greater<int>());
}

int Stratum::total_order() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

bool Stratum::valid() const {
  for (int a : alpha)
    if (a < 1) return false;
  return total_order() % 2 == 0;
}

std::string Stratum::to_string() const {
  if (alpha.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s;
}

std::optional<Stratum> parse_stratum(const std::string& text) {
  if (text == "-" || text.empty()) return Stratum{};
  std::vector<int> a;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    try {
      std::size_t used = 0;
      int v = std::stoi(text.substr(pos, next - pos), &used);
      if (used != next - pos || v < 1) return std::nullopt;
      a.push_back(v);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    pos = next + 1;
  }
  Stratum s(std::move(a));
  if (!s.valid()) return std::nullopt;
  return s;
}

Stratum stratum(const Origami& o) {
  std::vector<int> alpha;
  for (int len : o.commutator().cycle_type())
    if (len > 1) alpha.push_back(len - 1);
  return Stratum(std::move(alpha));
}

namespace {

// Fold vector (x, y) into the row basis (a, b), (0, d) kept upper triangular.
void lattice_insert(std::int64_t& a, std::int64_t& b, std::int64_t& d,
                    std::int64_t x, std::int64_t y) {
  while (x != 0) {
    if (a == 0) {
      std::swap(a, x);
      std::swap(b, y);
      continue;
    }
    std::int64_t q = x / a;
    x -= q * a;
    y -= q * b;
    if (x != 0) {
      std::swap(a, x);
      std::swap(b, y);
    }
  }
  y = y < 0 ? -y : y;
  d = std::gcd(d, y);
}

}  // namespace

PeriodLattice period_lattice(const Origami& o) {
  const int n = o.squares();
  const auto& s = o.sigma().images();
  const auto& t = o.tau().images();

  // Potentials from a BFS spanning tree over sigma/tau edges; every non-tree
  // edge closes a cycle whose holonomy generates the lattice.
  std::vector<std::int64_t> px(n), py(n);
  std::vector<bool> seen(n, false);
  std::vector<Label> queue{0};
  seen[0] = true;
  px[0] = py[0] = 0;

  std::int64_t a = 0, b = 0, d = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Label v = queue[qi];
    const Label nb[2] = {s[v], t[v]};
    const std::int64_t dx[2] = {1, 0};
    const std::int64_t dy[2] = {0, 1};
    for (int e = 0; e < 2; ++e) {
      Label w = nb[e];
      if (!seen[w]) {
        seen[w] = true;
        px[w] = px[v] + dx[e];
        py[w] = py[v] + dy[e];
        queue.push_back(w);
      } else {
        lattice_insert(a, b, d, px[v] + dx[e] - px[w], py[v] + dy[e] - py[w]);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("period_lattice requires a connected origami");

  // Relative periods: a saddle connection between two cone points displaces
  // by the potential difference of their corners (mod the cycle lattice), so
  // differences between singular corners belong to the lattice as well.
  // Without them a surface with several cone points can look non-reduced.
  Perm c = o.commutator();
  int base_corner = -1;
  for (int i = 0; i < n; ++i) {
    if (c(static_cast<Label>(i)) == i) continue;
    if (base_corner < 0)
      base_corner = i;
    else
      lattice_insert(a, b, d, px[i] - px[base_corner], py[i] - py[base_corner]);
  }

  if (a < 0) {
    a = -a;
    b = -b;
  }
  if (a == 0 || d == 0)
    throw std::logic_error("period lattice unexpectedly degenerate");
  b %= d;
  if (b < 0) b += d;
  return PeriodLattice{a, b, d};
}

bool is_reduced(const Origami& o) { return period_lattice(o).index() == 1; }

namespace {

// Finest block system of <sigma, tau> in which p and q share a block,
// returned as the number of blocks (union-find refinement).
int minimal_block_count(const Origami& o, Label p, Label q) {
  const int n = o.squares();
  std::vector<Label> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = static_cast<Label>(i);
  auto find = [&](Label x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  std::vector<std::pair<Label, Label>> pending{{p, q}};
  int classes = n;
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    Label rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[rx] = ry;
    --classes;
    for (const Perm* g : {&o.sigma(), &o.tau()})
      pending.emplace_back((*g)(x), (*g)(y));
  }
  return classes;
}

}  // namespace

bool is_primitive(const Origami& o) {
  const int n = o.squares();
  if (n == 1) return true;
  // A non-reduced surface covers an intermediate torus even when the block
  // test is blind to it (regular actions of prime degree have no nontrivial
  // blocks), so primitivity is taken within reduced surfaces.
  if (!is_reduced(o)) return false;
  for (int j = 1; j < n; ++j) {
    int blocks = minimal_block_count(o, 0, static_cast<Label>(j));
    if (blocks > 1 && blocks < n) return false;
  }
  return true;
}

MonodromyCapExceeded::MonodromyCapExceeded(std::uint64_t cap)
    : std::runtime_error("monodromy group exceeds " + std::to_string(cap) +
                         " elements; undecided at this size") {}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Label>& v) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(v.data()), v.size()));
  }
};

// Closure of {sigma, tau} under composition; stops once the element count
// exceeds `stop_after` and reports how many were found by then.
std::uint64_t closure_count(const Origami& o, std::uint64_t stop_after) {
  const int n = o.squares();
  std::unordered_set<std::vector<Label>, VecHash> elems;
  std::vector<std::vector<Label>> frontier;
  std::vector<Label> id(n);
  for (int i = 0; i < n; ++i) id[i] = static_cast<Label>(i);
  elems.insert(id);
  frontier.push_back(id);
  const std::vector<Label>* gens[2] = {&o.sigma().images(), &o.tau().images()};
  while (!frontier.empty()) {
    std::vector<std::vector<Label>> next;
    for (const auto& g : frontier) {
      for (const auto* gen : gens) {
        std::vector<Label> prod(n);
        for (int i = 0; i < n; ++i) prod[i] = (*gen)[g[i]];
        if (elems.insert(prod).second) {
          if (elems.size() > stop_after) return elems.size();
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return elems.size();
}

}  // namespace

std::uint64_t monodromy_order(const Origami& o, std::uint64_t cap) {
  std::uint64_t count = closure_count(o, cap);
  if (count > cap) throw MonodromyCapExceeded(cap);
  return count;
}

bool is_normal(const Origami& o) {
  // Transitive, so |G| >= n; regular iff |G| == n. Anything past n elements
  // already decides the answer.
  return closure_count(o, static_cast<std::uint64_t>(o.squares())) ==
         static_cast<std::uint64_t>(o.squares());
}

bool is_holonomy_torus(const Origami& o) {
  Perm c = o.commutator();
  if (c.is_identity()) return o.squares() == 1;
  for (int i = 0; i < o.squares(); ++i)
    if (c(static_cast<Label>(i)) == i) return false;
  return true;
}

int horizontal_cylinder_count(const Origami& o) {
  const int n = o.squares();
  const auto& s = o.sigma().images();
  const auto& t = o.tau().images();

  std::vector<int> row(n, -1);
  int rows = 0;
  for (int i = 0; i < n; ++i) {
    if (row[i] >= 0) continue;
    for (int j = i; row[j] < 0; j = s[j]) row[j] = rows;
    ++rows;
  }

  std::vector<int> parent(rows);
  for (int r = 0; r < rows; ++r) parent[r] = r;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  // A row and its tau-image belong to one cylinder when tau translates the
  // row rigidly (commutes with sigma along it).
  std::vector<bool> done(rows, false);
  for (int i = 0; i < n; ++i) {
    if (done[row[i]]) continue;
    done[row[i]] = true;
    bool rigid = true;
    int j = i;
    do {
      if (t[s[j]] != s[t[j]]) {
        rigid = false;
        break;
      }
      j = s[j];
    } while (j != i);
    if (rigid) {
      int a = find(row[i]), b = find(row[t[i]]);
      if (a != b) parent[a] = b;
    }
  }

  int cylinders = 0;
  for (int r = 0; r < rows; ++r)
    if (find(r) == r) ++cylinders;
  return cylinders;
}

}  // namespace sts
