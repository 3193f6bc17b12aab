#include "sts/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace sts {

Perm::Perm(std::vector<Label> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  if (n > kMaxSquares) throw std::invalid_argument("permutation too large");
  std::vector<bool> seen(n, false);
  for (Label v : img_) {
    if (v >= n || seen[v]) throw std::invalid_argument("images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<Label> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<Label>(i);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 0 || n > kMaxSquares) throw std::invalid_argument("bad size");
  std::vector<Label> img(n);
  for (int i = 0; i < n; ++i) img[i] = static_cast<Label>(i);
  std::vector<bool> used(n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j] - 1;
      int to = cyc[(j + 1) % cyc.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("cycle entry out of range");
      if (used[from]) throw std::invalid_argument("label repeated across cycles");
      used[from] = true;
      img[from] = static_cast<Label>(to);
    }
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Label> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<Label>(i);
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

std::vector<std::vector<Label>> Perm::cycles() const {
  std::vector<std::vector<Label>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<Label> cyc;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(static_cast<Label>(j));
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in composition");
  std::vector<Label> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm conjugated(const Perm& p, const Perm& g) {
  if (p.size() != g.size()) throw std::invalid_argument("size mismatch in conjugation");
  std::vector<Label> img(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    img[g(static_cast<Label>(i))] = g(p(static_cast<Label>(i)));
  return Perm(std::move(img));
}

std::string to_one_line(const Perm& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(int(p(static_cast<Label>(i))) + 1);
  }
  return s;
}

std::string to_cycle_string(const Perm& p) {
  std::string s;
  for (const auto& cyc : p.cycles()) {
    s += '(';
    for (std::size_t j = 0; j < cyc.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(int(cyc[j]) + 1);
    }
    s += ')';
  }
  return s;
}

}  // namespace sts
