// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace f4ct {

namespace {

std::vector<long> gen_matrix(const RootSystem& rs, int i) {
  int n = rs.rank();
  std::vector<long> m(n * n, 0);
  for (int r = 0; r < n; ++r) m[r * n + r] = 1;
  // s_i(lambda) = lambda - lambda_i * alpha_i: column i of the Cartan matrix
  for (int r = 0; r < n; ++r) m[r * n + i] -= rs.cartan(r, i);
  return m;
}

std::vector<long> matmul(const std::vector<long>& a, const std::vector<long>& b, int n) {
  std::vector<long> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long v = a[i * n + k];
      if (!v) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += v * b[k * n + j];
    }
  return c;
}

}  // namespace

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.rank();
  std::vector<std::vector<long>> gens(n);
  for (int i = 0; i < n; ++i) gens[i] = gen_matrix(rs, i);

  std::map<std::vector<long>, WeylElt> index;
  std::vector<long> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  index[id] = 0;
  words_.push_back({});
  action_.push_back(id);

  std::vector<WeylElt> level{0};
  while (!level.empty()) {
    std::vector<WeylElt> next;
    for (WeylElt e : level) {
      for (int s = 0; s < n; ++s) {
        auto m = matmul(action_[e], gens[s], n);
        auto it = index.find(m);
        if (it != index.end()) continue;
        WeylElt idx = static_cast<WeylElt>(words_.size());
        index.emplace(std::move(m), idx);
        auto w = words_[e];
        w.push_back(static_cast<uint8_t>(s));
        words_.push_back(std::move(w));
        action_.push_back(matmul(action_[e], gens[s], n));
        next.push_back(idx);
      }
    }
    level = std::move(next);
  }
  const int N = size();
  if (N >= 65535) throw std::runtime_error("Weyl group too large for 16-bit indices");

  rmul_.assign(static_cast<size_t>(N) * n, 0);
  lmul_.assign(static_cast<size_t>(N) * n, 0);
  for (int e = 0; e < N; ++e) {
    for (int s = 0; s < n; ++s) {
      rmul_[e * n + s] = index.at(matmul(action_[e], gens[s], n));
      lmul_[e * n + s] = index.at(matmul(gens[s], action_[e], n));
    }
  }
  inverse_.assign(N, 0);
  for (int e = 0; e < N; ++e) {
    WeylElt inv = 0;
    const auto& w = words_[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = rmul_[inv * n + *it];
    // verify inverse: e * inv = identity
    WeylElt check = static_cast<WeylElt>(e);
    for (auto c : words_[inv]) check = rmul_[check * n + c];
    assert(check == 0);
    inverse_[e] = inv;
  }
  longest_ = 0;
  for (int e = 0; e < N; ++e)
    if (length(static_cast<WeylElt>(e)) > length(longest_)) longest_ = static_cast<WeylElt>(e);
  // length = |inversion set|
  assert(length(longest_) == rs.num_positive_roots());
}

Weight WeylGroup::act(WeylElt e, const Weight& lambda) const {
  const int n = rank();
  Weight out(n, Rat(0));
  const auto& m = action_[e];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i * n + j] != 0) out[i] += Rat(m[i * n + j]) * lambda[j];
  return out;
}

std::vector<long> WeylGroup::act_root(WeylElt e, const std::vector<long>& root) const {
  auto v = root;
  const auto& w = words_[e];
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = rs_->reflect_root(*it, v);
  return v;
}

WeylElt WeylGroup::mul(WeylElt a, WeylElt b) const {
  WeylElt out = a;
  for (auto c : words_[b]) out = rmul_[out * rank() + c];
  return out;
}

WeylElt WeylGroup::inverse(WeylElt e) const { return inverse_[e]; }

WeylElt WeylGroup::from_word_1based(const std::vector<int>& w) const {
  WeylElt out = 0;
  for (int c : w) {
    if (c < 1 || c > rank()) throw std::invalid_argument("generator index out of range");
    out = rmul_[out * rank() + (c - 1)];
  }
  return out;
}

std::vector<int> WeylGroup::inversion_set(WeylElt e) const {
  std::vector<int> out;
  const auto& pos = rs_->positive_roots();
  for (size_t k = 0; k < pos.size(); ++k) {
    auto v = act_root(e, pos[k]);
    bool neg = std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; });
    if (neg) out.push_back(static_cast<int>(k));
  }
  assert(static_cast<int>(out.size()) == length(e));
  return out;
}

std::vector<WeylElt> WeylGroup::min_coset_reps(const std::vector<int>& theta) const {
  std::vector<WeylElt> out;
  const int n = rank();
  for (int e = 0; e < size(); ++e) {
    bool minimal = true;
    for (int j : theta) {
      std::vector<long> alpha(n, 0);
      alpha[j] = 1;
      auto v = act_root(static_cast<WeylElt>(e), alpha);
      if (std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; })) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(static_cast<WeylElt>(e));
  }
  return out;  // BFS index order = (length, lex word)
}

WeylElt WeylGroup::coset_rep(WeylElt e, const std::vector<int>& theta) const {
  const int n = rank();
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int j : theta) {
      std::vector<long> alpha(n, 0);
      alpha[j] = 1;
      auto v = act_root(e, alpha);
      if (std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; })) {
        e = rmul_[e * n + j];
        reduced = true;
        break;
      }
    }
  }
  return e;
}

std::vector<WeylElt> WeylGroup::min_double_coset_reps(const std::vector<int>& theta_l,
                                                      const std::vector<int>& theta_m) const {
  std::vector<WeylElt> out;
  const int n = rank();
  for (int e = 0; e < size(); ++e) {
    bool minimal = true;
    for (int j : theta_m) {
      std::vector<long> alpha(n, 0);
      alpha[j] = 1;
      auto v = act_root(static_cast<WeylElt>(e), alpha);
      if (std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; })) minimal = false;
    }
    if (!minimal) continue;
    WeylElt inv = inverse_[e];
    for (int j : theta_l) {
      std::vector<long> alpha(n, 0);
      alpha[j] = 1;
      auto v = act_root(inv, alpha);
      if (std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; })) minimal = false;
    }
    if (minimal) out.push_back(static_cast<WeylElt>(e));
  }
  return out;
}

std::vector<WeylElt> WeylGroup::stabilizer(const Weight& lambda) const {
  std::vector<WeylElt> out;
  for (int e = 0; e < size(); ++e)
    if (act(static_cast<WeylElt>(e), lambda) == lambda) out.push_back(static_cast<WeylElt>(e));
  return out;
}

std::vector<WeylElt> WeylGroup::subgroup(const std::vector<int>& theta) const {
  std::vector<bool> seen(size(), false);
  std::vector<WeylElt> out{0}, frontier{0};
  seen[0] = true;
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (WeylElt e : frontier)
      for (int s : theta) {
        WeylElt f = rmul_[e * rank() + s];
        if (!seen[f]) {
          seen[f] = true;
          out.push_back(f);
          next.push_back(f);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<uint8_t> WeylGroup::random_reduced_word(WeylElt e, std::mt19937& rng) const {
  std::vector<uint8_t> out;
  const int n = rank();
  while (e != 0) {
    // descents of e: letters s with l(e s) < l(e)
    std::vector<int> descents;
    for (int s = 0; s < n; ++s)
      if (length(rmul_[e * n + s]) < length(e)) descents.push_back(s);
    assert(!descents.empty());
    int s = descents[std::uniform_int_distribution<int>(0, static_cast<int>(descents.size()) - 1)(rng)];
    out.push_back(static_cast<uint8_t>(s));
    e = rmul_[e * n + s];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string WeylGroup::word_str(const std::vector<uint8_t>& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (auto c : w) os << "w_" << (static_cast<int>(c) + 1);
  return os.str();
}

std::string WeylGroup::word_str(WeylElt e) const { return word_str(words_[e]); }

}  // namespace f4ct
