// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include <set>

#include "f4ct/chars.hpp"
#include "f4ct/weyl.hpp"

using namespace f4ct;

namespace {
const RootSystem& f4() {
  static RootSystem rs = RootSystem::f4();
  return rs;
}
const WeylGroup& wf4() {
  static WeylGroup w(f4());
  return w;
}
}  // namespace

TEST_CASE("group orders") {
  RootSystem a1(std::vector<std::vector<long>>{{2}});
  CHECK(WeylGroup(a1).size() == 2);
  RootSystem c3({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(WeylGroup(c3).size() == 48);
  CHECK(wf4().size() == 1152);
  CHECK(wf4().length(wf4().longest()) == 24);
}

TEST_CASE("weight action examples") {
  const WeylGroup& w = wf4();
  Weight fw1{Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK(w.act(w.gen(0), fw1) == Weight{Rat(-1), Rat(1), Rat(0), Rat(0)});
  Weight lam{Rat(3), Rat(-2), Rat(5, 2), Rat(0)};
  CHECK(w.act(0, lam) == lam);  // identity
  // u . chi_{P3,1/2} = [0,0,-1,0]
  WeylElt u = w.from_word_1based({3, 4, 2, 3, 1, 2, 3, 4, 3, 1, 2, 3});
  Weight chi3 = inducing_character(f4(), 3).at(Rat(1, 2));
  CHECK(w.act(u, chi3) == Weight{Rat(0), Rat(0), Rat(-1), Rat(0)});
}

TEST_CASE("inversion sets") {
  const WeylGroup& w = wf4();
  auto inv4 = w.inversion_set(w.gen(3));
  REQUIRE(inv4.size() == 1);
  CHECK(f4().positive_roots()[inv4[0]] == std::vector<long>{0, 0, 0, 1});
  CHECK(w.inversion_set(w.longest()).size() == 24);
  // |R(w)| = length on a sample
  WeylElt e = w.from_word_1based({2, 3, 4});
  CHECK(w.inversion_set(e).size() == 3);
}

TEST_CASE("coset representatives") {
  const WeylGroup& w = wf4();
  CHECK(w.min_coset_reps({}).size() == 1152);
  CHECK(w.min_coset_reps(f4().levi_generators(4)).size() == 24);
  CHECK(w.min_coset_reps(f4().levi_generators(3)).size() == 96);
  CHECK(w.min_coset_reps(f4().levi_generators(2)).size() == 96);
  CHECK(w.min_coset_reps(f4().levi_generators(1)).size() == 24);
  // each coset has exactly one representative, of minimal length
  auto theta = f4().levi_generators(4);
  auto reps = w.min_coset_reps(theta);
  std::vector<int> seen(w.size(), 0);
  for (int e = 0; e < w.size(); ++e) {
    WeylElt r = w.coset_rep(static_cast<WeylElt>(e), theta);
    CHECK(std::find(reps.begin(), reps.end(), r) != reps.end());
    CHECK(w.length(r) <= w.length(static_cast<WeylElt>(e)));
    seen[r] += 1;
  }
  for (WeylElt r : reps) CHECK(seen[r] == 48);  // |W_M| = |W(B3)| = 48
}

TEST_CASE("double coset representatives partition") {
  const WeylGroup& w = wf4();
  auto tl = f4().levi_generators(4), tm = f4().levi_generators(4);
  auto reps = w.min_double_coset_reps(tl, tm);
  // sizes of the double cosets sum to |W|
  long total = 0;
  for (WeylElt r : reps) {
    std::set<WeylElt> coset;
    for (WeylElt a : w.subgroup(tl))
      for (WeylElt b : w.subgroup(tm)) coset.insert(w.mul(w.mul(a, r), b));
    total += static_cast<long>(coset.size());
  }
  CHECK(total == w.size());
}

TEST_CASE("stabilizers") {
  const WeylGroup& w = wf4();
  // generic weight
  Weight generic{Rat(1), Rat(2), Rat(4), Rat(8)};
  CHECK(w.stabilizer(generic).size() == 1);
  // lambda_{a.d} for P4 at 5/2 has stabilizer of order 2
  Weight lam_ad{Rat(-1), Rat(0), Rat(-1), Rat(-1)};
  CHECK(w.stabilizer(lam_ad).size() == 2);
  // chi_{P2,5/2} has trivial stabilizer
  Weight chi2 = inducing_character(f4(), 2).at(Rat(5, 2));
  CHECK(w.stabilizer(chi2).size() == 1);
}

TEST_CASE("deletion-exchange: every reduced word gives the same element") {
  const WeylGroup& w = wf4();
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> pick(0, w.size() - 1);
  for (int t = 0; t < 50; ++t) {
    WeylElt e = static_cast<WeylElt>(pick(rng));
    auto alt = w.random_reduced_word(e, rng);
    CHECK(alt.size() == w.word(e).size());
    std::vector<int> word1;
    for (uint8_t c : alt) word1.push_back(c + 1);
    CHECK(w.from_word_1based(word1) == e);
  }
}

TEST_CASE("action preserves pairings with coroots") {
  const WeylGroup& w = wf4();
  const RootSystem& rs = f4();
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> pick(0, w.size() - 1);
  std::uniform_int_distribution<int> rpick(0, rs.num_positive_roots() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int t = 0; t < 100; ++t) {
    WeylElt e = static_cast<WeylElt>(pick(rng));
    int k = rpick(rng);
    Weight lam{Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng)), Rat(coeff(rng))};
    auto im = w.act_root(e, rs.positive_roots()[k]);
    bool neg = std::all_of(im.begin(), im.end(), [](long x) { return x <= 0; });
    Rat sign(1);
    if (neg) {
      for (auto& x : im) x = -x;
      sign = Rat(-1);
    }
    int k2 = rs.root_index(im);
    REQUIRE(k2 >= 0);
    CHECK(rs.pairing(w.act(e, lam), k2) * sign == rs.pairing(lam, k));
  }
}
