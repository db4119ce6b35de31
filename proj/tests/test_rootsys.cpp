// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "f4ct/rootsys.hpp"

using namespace f4ct;

namespace {
Weight fw(int i) {
  Weight w(4, Rat(0));
  w[i] = Rat(1);
  return w;
}
}  // namespace

TEST_CASE("closure counts for small types") {
  RootSystem a1a1({{2, 0}, {0, 2}});
  CHECK(a1a1.num_positive_roots() == 2);
  RootSystem c3({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(c3.num_positive_roots() == 9);
  CHECK(RootSystem::f4().num_positive_roots() == 24);
  CHECK_THROWS_AS(RootSystem({{2, -3}, {-3, 2}}, 64), std::runtime_error);  // not finite type
}

TEST_CASE("pairings: fundamental weights dual to simple coroots") {
  RootSystem rs = RootSystem::f4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::vector<long> alpha(4, 0);
      alpha[j] = 1;
      CHECK(rs.pairing(fw(i), rs.root_index(alpha)) == (i == j ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("rho pairing with a coroot is its height") {
  RootSystem rs = RootSystem::f4();
  Weight rho = rs.rho();
  for (int k = 0; k < rs.num_positive_roots(); ++k) {
    Rat h(0);
    for (const Rat& c : rs.coroot(k)) h += c;
    CHECK(rs.pairing(rho, k) == h);
  }
  // highest root of F4 in simple-root coordinates
  std::vector<long> theta{2, 3, 4, 2};
  CHECK(rs.root_index(theta) >= 0);
  CHECK(rs.pairing(rho, rs.root_index(theta)) == Rat(8));
}

TEST_CASE("rho vectors of the maximal parabolics") {
  RootSystem rs = RootSystem::f4();
  // forced by chi_{P4,5/2} = [-1,-1,-1,7]
  auto r4 = rs.rho_vectors(4);
  CHECK(r4.rho_m[3] == Rat(11, 2));
  auto r1 = rs.rho_vectors(1);
  CHECK(r1.rho_m[0] == Rat(4));
  auto r2 = rs.rho_vectors(2);
  CHECK(r2.rho_m[1] == Rat(5, 2));
  auto r3 = rs.rho_vectors(3);
  CHECK(r3.rho_m[2] == Rat(7, 2));
  // rho_T = rho_M + rho_T^M for all four maximal parabolics
  for (int i = 1; i <= 4; ++i) {
    auto r = rs.rho_vectors(i);
    for (int j = 0; j < 4; ++j) CHECK(r.rho_m[j] + r.rho_t_m[j] == Rat(1));
  }
  // degenerate cases: theta = all simple roots (M = G) and theta = {} (M = T)
  auto rg = rs.rho_for_theta({0, 1, 2, 3});
  for (int j = 0; j < 4; ++j) CHECK(rg.rho_m[j] == Rat(0));
  auto rt = rs.rho_for_theta({});
  for (int j = 0; j < 4; ++j) CHECK(rt.rho_m[j] == Rat(1));  // rho_M = rho_T
}

TEST_CASE("weyl action table lines") {
  RootSystem rs = RootSystem::f4();
  // w_i(fw_i) = fw_i - alpha_i reproduces the printed table
  Weight w1 = rs.reflect_weight(0, fw(0));
  CHECK(w1 == Weight{Rat(-1), Rat(1), Rat(0), Rat(0)});
  Weight w2 = rs.reflect_weight(1, fw(1));
  CHECK(w2 == Weight{Rat(1), Rat(-1), Rat(2), Rat(0)});
  Weight w3 = rs.reflect_weight(2, fw(2));
  CHECK(w3 == Weight{Rat(0), Rat(1), Rat(-1), Rat(1)});
  Weight w4 = rs.reflect_weight(3, fw(3));
  CHECK(w4 == Weight{Rat(0), Rat(0), Rat(1), Rat(-1)});
  // w_j fixes fw_i for i != j
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) CHECK(rs.reflect_weight(j, fw(i)) == fw(i));
}

TEST_CASE("simple-root coordinates") {
  RootSystem rs = RootSystem::f4();
  auto c1 = rs.to_simple_root_coords(fw(0));
  CHECK(c1 == std::vector<Rat>{Rat(2), Rat(3), Rat(4), Rat(2)});
  auto c4 = rs.to_simple_root_coords(fw(3));
  CHECK(c4 == std::vector<Rat>{Rat(1), Rat(2), Rat(3), Rat(2)});
  // alpha_1 in fw coordinates round-trips to (1,0,0,0)
  Weight a1 = rs.root_to_weight({1, 0, 0, 0});
  CHECK(rs.to_simple_root_coords(a1) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)});
  // -sum of fundamental weights has strictly negative root coordinates
  Weight neg(4, Rat(-1));
  for (const Rat& c : rs.to_simple_root_coords(neg)) CHECK(c < 0);
}

TEST_CASE("simple reflections permute the other positive roots") {
  RootSystem rs = RootSystem::f4();
  for (int i = 0; i < 4; ++i) {
    std::vector<long> alpha(4, 0);
    alpha[i] = 1;
    int negated = 0;
    for (const auto& root : rs.positive_roots()) {
      auto im = rs.reflect_root(i, root);
      bool pos = true, neg = true;
      for (long x : im) {
        if (x < 0) pos = false;
        if (x > 0) neg = false;
      }
      if (neg) {
        ++negated;
        for (int j = 0; j < 4; ++j) CHECK(im[j] == -alpha[j]);
      } else {
        CHECK(pos);  // permutes the rest of the positive roots
      }
    }
    CHECK(negated == 1);
  }
}
