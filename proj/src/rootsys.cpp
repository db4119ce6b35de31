// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace f4ct {

bool operator_eq(const Weight& a, const Weight& b) { return a == b; }

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(w[i]);
  }
  os << "]";
  return os.str();
}

RootSystem::RootSystem(std::vector<std::vector<long>> cartan, size_t closure_bound)
    : rank_(static_cast<int>(cartan.size())), cartan_(std::move(cartan)) {
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(cartan_[i].size()) != rank_)
      throw std::invalid_argument("Cartan matrix not square");
    if (cartan_[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < rank_; ++j)
      if (i != j && cartan_[i][j] > 0) throw std::invalid_argument("positive off-diagonal");
  }
  // closure of simple roots under simple reflections
  std::set<std::vector<long>> roots;
  std::vector<std::vector<long>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<long> e(rank_, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long>> next;
    for (const auto& v : frontier) {
      for (int i = 0; i < rank_; ++i) {
        auto w = reflect_root(i, v);
        bool positive = std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
        if (!positive) continue;
        if (roots.insert(w).second) next.push_back(w);
      }
    }
    if (roots.size() > closure_bound) throw std::runtime_error("not finite type");
    frontier = std::move(next);
  }
  pos_.assign(roots.begin(), roots.end());
  std::sort(pos_.begin(), pos_.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    return std::tie(ha, a) < std::tie(hb, b);
  });

  // root lengths from the symmetrized Cartan matrix: choose d_i > 0 with
  // d_i a_ij = d_j a_ji; normalize the smallest to 1
  std::vector<Rat> d(rank_, Rat(0));
  d[0] = Rat(1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        if (cartan_[i][j] == 0 || d[i] == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(cartan_[i][j]) / Rat(cartan_[j][i]);
        changed = true;
      }
  }
  for (auto& x : d)
    if (x == 0) x = Rat(1);  // disconnected component normalization
  // (beta, beta) for beta = sum c_i alpha_i with (alpha_i, alpha_j) = d_i a_ij
  auto len2 = [&](const std::vector<long>& c) {
    Rat s(0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (c[i] && c[j]) s += Rat(c[i]) * Rat(c[j]) * d[i] * Rat(cartan_[i][j]);
    return s;  // equals 2(beta,beta) in the d-normalization
  };
  coroots_.resize(pos_.size());
  for (size_t k = 0; k < pos_.size(); ++k) {
    Rat L = len2(pos_[k]);
    coroots_[k].resize(rank_);
    for (int j = 0; j < rank_; ++j)
      coroots_[k][j] = Rat(pos_[k][j]) * d[j] * Rat(2) / L;
  }

  // inverse Cartan: columns are fundamental weights in simple-root coords
  {
    int n = rank_;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rat(cartan_[i][j]);
      a[i][n + i] = Rat(1);
    }
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (a[r][c] != 0) {
          piv = r;
          break;
        }
      assert(piv >= 0);
      std::swap(a[piv], a[c]);
      Rat inv = Rat(1) / a[c][c];
      for (int j = 0; j < 2 * n; ++j) a[c][j] *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rat f = a[r][c];
        for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
    }
    inv_cartan_col_.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv_cartan_col_[j][i] = a[i][n + j];
  }

  // dual-basis sanity: <fw_i, alpha_j^vee> = delta_ij
  for (int i = 0; i < rank_; ++i) {
    Weight fw(rank_, Rat(0));
    fw[i] = Rat(1);
    for (int j = 0; j < rank_; ++j) {
      std::vector<long> e(rank_, 0);
      e[j] = 1;
      Rat p = pairing(fw, root_index(e));
      assert(p == ((i == j) ? Rat(1) : Rat(0)));
      (void)p;
    }
  }
}

RootSystem RootSystem::f4() {
  // columns pinned by the thesis's Weyl action table:
  // alpha_1 = 2w1-w2, alpha_2 = -w1+2w2-2w3, alpha_3 = -w2+2w3-w4,
  // alpha_4 = -w3+2w4
  return RootSystem({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
}

RootSystem RootSystem::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  std::vector<std::vector<long>> cartan;
  for (const auto& row : j.at("cartan")) {
    std::vector<long> r;
    for (const auto& x : row) r.push_back(x.get<long>());
    cartan.push_back(std::move(r));
  }
  return RootSystem(std::move(cartan));
}

std::vector<Rat> RootSystem::to_simple_root_coords(const Weight& lambda) const {
  std::vector<Rat> out(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out[j] += lambda[i] * inv_cartan_col_[i][j];
  return out;
}

Weight RootSystem::root_to_weight(const std::vector<long>& root) const {
  Weight w(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w[i] += Rat(cartan_[i][j] * root[j]);
  return w;
}

Rat RootSystem::pairing(const Weight& lambda, int k) const {
  Rat s(0);
  for (int j = 0; j < rank_; ++j)
    if (coroots_[k][j] != 0) s += lambda[j] * coroots_[k][j];
  return s;
}

int RootSystem::root_index(const std::vector<long>& root) const {
  for (size_t k = 0; k < pos_.size(); ++k)
    if (pos_[k] == root) return static_cast<int>(k);
  return -1;
}

Weight RootSystem::reflect_weight(int i, const Weight& lambda) const {
  Weight out = lambda;
  const Rat& c = lambda[i];
  if (c == 0) return out;
  for (int r = 0; r < rank_; ++r) out[r] -= c * Rat(cartan_[r][i]);
  return out;
}

std::vector<long> RootSystem::reflect_root(int i, const std::vector<long>& root) const {
  long p = 0;
  for (int j = 0; j < rank_; ++j) p += cartan_[i][j] * root[j];
  auto out = root;
  out[i] -= p;
  return out;
}

Weight RootSystem::rho() const { return Weight(rank_, Rat(1)); }

RootSystem::RhoPair RootSystem::rho_for_theta(const std::vector<int>& theta) const {
  std::vector<bool> in_theta(rank_, false);
  for (int j : theta) in_theta[j] = true;
  RhoPair out;
  out.rho_m.assign(rank_, Rat(0));
  for (size_t k = 0; k < pos_.size(); ++k) {
    bool inside = true;
    for (int j = 0; j < rank_; ++j)
      if (pos_[k][j] != 0 && !in_theta[j]) inside = false;
    if (inside) continue;  // root of the Levi
    Weight w = root_to_weight(pos_[k]);
    for (int j = 0; j < rank_; ++j) out.rho_m[j] += w[j] / 2;
  }
  out.rho_t_m.assign(rank_, Rat(1));
  for (int j = 0; j < rank_; ++j) out.rho_t_m[j] -= out.rho_m[j];
  return out;
}

RootSystem::RhoPair RootSystem::rho_vectors(int i_omitted) const {
  RhoPair out = rho_for_theta(levi_generators(i_omitted));
  for (int j = 0; j < rank_; ++j)
    assert(j == i_omitted - 1 || out.rho_m[j] == 0);  // proportional to fw_i
  return out;
}

std::vector<int> RootSystem::levi_generators(int i_omitted) const {
  std::vector<int> out;
  for (int j = 0; j < rank_; ++j)
    if (j != i_omitted - 1) out.push_back(j);
  return out;
}

}  // namespace f4ct
