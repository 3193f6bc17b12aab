#include "sts/origami.hpp"

#include <stdexcept>

namespace sts {

Origami::Origami(Perm sigma, Perm tau)
    : sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (sigma_.size() != tau_.size())
    throw std::invalid_argument("sigma and tau act on different square counts");
  if (sigma_.size() == 0) throw std::invalid_argument("empty origami");
}

Perm Origami::commutator() const {
  const auto& s = sigma_.images();
  const auto& t = tau_.images();
  const int n = squares();
  std::vector<Label> sinv(n), tinv(n);
  for (int i = 0; i < n; ++i) {
    sinv[s[i]] = static_cast<Label>(i);
    tinv[t[i]] = static_cast<Label>(i);
  }
  std::vector<Label> img(n);
  for (int i = 0; i < n; ++i) img[i] = s[t[sinv[tinv[i]]]];
  return Perm(std::move(img));
}

bool Origami::connected() const { return is_connected(sigma_, tau_); }

bool is_connected(const Perm& sigma, const Perm& tau) {
  const int n = sigma.size();
  if (n != tau.size()) throw std::invalid_argument("size mismatch");
  if (n == 0) return false;
  std::vector<Label> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    Label v = stack.back();
    stack.pop_back();
    for (Label w : {sigma(v), tau(v)}) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

namespace {

// BFS relabeling from one base; writes the candidate encoding (2n labels)
// into `cand`. Returns false if the surface is disconnected.
bool bfs_encoding(const std::vector<Label>& s, const std::vector<Label>& t,
                  Label base, std::vector<Label>& order, std::vector<Label>& pos,
                  std::vector<Label>& cand) {
  const int n = static_cast<int>(s.size());
  std::fill(pos.begin(), pos.end(), Label{255});
  pos[base] = 0;
  order[0] = base;
  int cnt = 1;
  for (int qi = 0; qi < cnt; ++qi) {
    Label v = order[qi];
    for (Label w : {s[v], t[v]}) {
      if (pos[w] == 255) {
        pos[w] = static_cast<Label>(cnt);
        order[cnt++] = w;
      }
    }
  }
  if (cnt != n) return false;
  for (int i = 0; i < n; ++i) {
    cand[i] = pos[s[order[i]]];
    cand[n + i] = pos[t[order[i]]];
  }
  return true;
}

}  // namespace

CanonicalKey canonical_key_raw(const std::vector<Label>& sigma,
                               const std::vector<Label>& tau) {
  const int n = static_cast<int>(sigma.size());
  std::vector<Label> order(n), pos(n), cand(2 * n), best;
  for (int b = 0; b < n; ++b) {
    if (!bfs_encoding(sigma, tau, static_cast<Label>(b), order, pos, cand))
      throw std::invalid_argument("canonical_key requires a connected origami");
    if (best.empty() || cand < best) best = cand;
  }
  CanonicalKey key;
  key.bytes.reserve(2 * n + 1);
  key.bytes.push_back(static_cast<Label>(n));
  key.bytes.insert(key.bytes.end(), best.begin(), best.end());
  return key;
}

CanonicalKey canonical_key(const Origami& o) {
  return canonical_key_raw(o.sigma().images(), o.tau().images());
}

Origami origami_from_key(const CanonicalKey& key) {
  const int n = key.squares();
  if (n <= 0 || static_cast<int>(key.bytes.size()) != 2 * n + 1)
    throw std::invalid_argument("malformed canonical key");
  std::vector<Label> s(key.bytes.begin() + 1, key.bytes.begin() + 1 + n);
  std::vector<Label> t(key.bytes.begin() + 1 + n, key.bytes.end());
  return Origami(Perm(std::move(s)), Perm(std::move(t)));
}

Origami canonical_form(const Origami& o) {
  return origami_from_key(canonical_key(o));
}

Origami relabeled(const Origami& o, const Perm& g) {
  return Origami(conjugated(o.sigma(), g), conjugated(o.tau(), g));
}

}  // namespace sts
