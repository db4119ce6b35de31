// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "f4ct/chars.hpp"

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
Weight wt(std::initializer_list<long> v) {
  Weight out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}
}  // namespace

TEST_CASE("inducing characters at the reducibility points") {
  CHECK(inducing_character(f4(), 4).at(Rat(5, 2)) == wt({-1, -1, -1, 7}));
  CHECK(inducing_character(f4(), 1).at(Rat(1)) == wt({4, -1, -1, -1}));
  CHECK(inducing_character(f4(), 3).at(Rat(1, 2)) == wt({-1, -1, 3, -1}));
}

TEST_CASE("geometric lemma exponent multisets") {
  const WeylGroup& w = wf4();
  auto p4 = geometric_lemma_exponents(w, 4, Rat(5, 2));
  CHECK(p4.at(wt({-1, 0, -1, -1})) == 2);
  CHECK(p4.at(wt({-1, -1, -1, 7})) == 1);
  int mass4 = 0;
  for (const auto& [e, m] : p4) mass4 += m;
  CHECK(mass4 == 24);

  auto p1 = geometric_lemma_exponents(w, 1, Rat(1));
  CHECK(p1.at(wt({-1, 0, -1, 0})) == 4);
  int mass1 = 0;
  for (const auto& [e, m] : p1) mass1 += m;
  CHECK(mass1 == 24);

  auto p3 = geometric_lemma_exponents(w, 3, Rat(1, 2));
  CHECK(p3.at(wt({0, 0, -1, 0})) == 12);
  int mass3 = 0;
  for (const auto& [e, m] : p3) mass3 += m;
  CHECK(mass3 == 96);
}

TEST_CASE("square integrability") {
  CHECK(square_integrable(f4(), wt({-1, -1, -1, -1})));
  CHECK_FALSE(square_integrable(f4(), wt({1, 0, 0, 0})));
  // the C2-class weight of P4
  CHECK(square_integrable(f4(), wt({-1, -1, -1, 2})));
  CHECK(square_integrable(f4(), wt({-1, -1, 1, -2})));
  // the antidominant exponents are square integrable
  CHECK(square_integrable(f4(), wt({-1, 0, -1, -1})));
  // boundary: chi_{P4,5/2} has alpha_1 coefficient exactly zero
  CHECK_FALSE(square_integrable(f4(), wt({-1, -1, -1, 7})));
  CHECK_FALSE(square_integrable(f4(), Weight(4, Rat(0))));
}

TEST_CASE("antidominant representatives") {
  const WeylGroup& w = wf4();
  auto [ad4, w4] = antidominant_rep(w, inducing_character(f4(), 4).at(Rat(5, 2)));
  CHECK(ad4 == wt({-1, 0, -1, -1}));
  CHECK(w.act(w4, inducing_character(f4(), 4).at(Rat(5, 2))) == ad4);
  auto [ad1, w1] = antidominant_rep(w, inducing_character(f4(), 1).at(Rat(1)));
  CHECK(ad1 == wt({-1, 0, -1, 0}));
  // already antidominant input is a fixed point with the identity
  auto [ad_again, e] = antidominant_rep(w, ad4);
  CHECK(ad_again == ad4);
  CHECK(e == WeylElt(0));
}

TEST_CASE("equivalence classes") {
  const WeylGroup& w = wf4();
  auto p2 = equivalence_classes(w, 2, Rat(5, 2));
  CHECK(p2.size() == 96);
  for (const auto& c : p2) CHECK(c.members.size() == 1);

  auto p4 = equivalence_classes(w, 4, Rat(5, 2));
  int found = 0;
  for (const auto& c : p4)
    if (c.exponent == wt({-1, -1, -1, 2})) {
      CHECK(c.members.size() == 2);
      ++found;
    }
  CHECK(found == 1);

  auto p3 = equivalence_classes(w, 3, Rat(1, 2));
  for (const auto& c : p3)
    if (c.exponent == wt({-1, -1, 1, 1})) {
      REQUIRE(c.members.size() == 3);
      CHECK(c.members[0] == w.from_word_1based({1, 2, 3, 4, 1, 2, 3}));
      CHECK(c.members[1] == w.from_word_1based({1, 2, 3, 4, 3, 2, 3, 1, 2, 3}));
      CHECK(c.members[2] == w.from_word_1based({3, 2, 3, 1, 2, 3, 4, 3, 2, 3, 1, 2, 3}));
    }

  // mass conservation and constant evaluated weight per class
  size_t total = 0;
  Weight chi = inducing_character(f4(), 4).at(Rat(5, 2));
  for (const auto& c : p4) {
    total += c.members.size();
    for (WeylElt m : c.members) CHECK(w.act(m, chi) == c.exponent);
  }
  CHECK(total == 24);
}

TEST_CASE("orbit multiplicity equals stabilizer order for full principal series") {
  const WeylGroup& w = wf4();
  // the full orbit multiset {x . lambda : x in W} has mult = |Stab| at
  // every orbit point
  Weight lam = wt({-1, 0, -1, -1});
  std::map<Weight, int> orbit;
  for (int e = 0; e < w.size(); ++e) orbit[w.act(static_cast<WeylElt>(e), lam)] += 1;
  for (const auto& [mu, mult] : orbit) CHECK(mult == (int)w.stabilizer(mu).size());
  CHECK(orbit.at(lam) == 2);
}
