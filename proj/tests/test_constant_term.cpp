// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "f4ct/constant_term.hpp"

using namespace f4ct;

TEST_CASE("arthur multiplicity formula") {
  // S4, two-dimensional character: conjugacy classes
  // (1, e), (6, transpositions), (3, double transpositions), (8, 3-cycles),
  // (6, 4-cycles) with traces (2, 0, 2, -1, 0)
  std::vector<std::pair<long, Rat>> s4_2dim = {
      {1, Rat(2)}, {6, Rat(0)}, {3, Rat(2)}, {8, Rat(-1)}, {6, Rat(0)}};
  CHECK(arthur_multiplicity(s4_2dim, 1, 24) == Rat(0));
  CHECK(arthur_multiplicity(s4_2dim, 2, 24) == Rat(1));
  CHECK(arthur_multiplicity(s4_2dim, 3, 24) == Rat(1));
  // Z2 sign pattern: 1 iff |S| even
  std::vector<std::pair<long, Rat>> z2_sign = {{1, Rat(1)}, {1, Rat(-1)}};
  for (int s = 0; s <= 6; ++s)
    CHECK(arthur_multiplicity(z2_sign, s, 2) == ((s % 2 == 0) ? Rat(1) : Rat(0)));
  // trivial character normalizes to 1 for every |S|
  std::vector<std::pair<long, Rat>> s4_triv = {
      {1, Rat(1)}, {6, Rat(1)}, {3, Rat(1)}, {8, Rat(1)}, {6, Rat(1)}};
  for (int s = 0; s <= 5; ++s) CHECK(arthur_multiplicity(s4_triv, s, 24) == Rat(1));
}

TEST_CASE("predicate naming") {
  std::array<bool, 7> even{};
  for (int k = 0; k < 7; k += 2) even[k] = true;
  CHECK(Predicate::from_support(even).name == "even");
  std::array<bool, 7> notone{};
  for (int k = 0; k < 7; ++k) notone[k] = (k != 1);
  CHECK(Predicate::from_support(notone).name == "!=1");
  std::array<bool, 7> all{};
  all.fill(true);
  CHECK(Predicate::from_support(all).name == "all");
  std::array<bool, 7> none{};
  CHECK(Predicate::from_support(none).name == "none");
}

TEST_CASE("effective orders of cheap P4 classes") {
  static RootSystem rs = RootSystem::f4();
  static WeylGroup w(rs);
  ConstantTermAnalysis an(w, 4, Rat(5, 2), 1);
  // the order-2 spherical class collapses to an effective simple pole and
  // the C0 classes stay at order zero
  for (const auto& cls : an.classes()) {
    ZetaProduct p = gk_product(w, 4, cls.shortest);
    int ord = order_at(p, cls.z0);
    int eff = an.effective_class_order(cls);
    if (ord == 2) CHECK(eff == 1);
    if (ord == 0) CHECK(eff == 0);
    if (ord == 1) CHECK(eff == 1);
    CHECK(eff <= ord);
  }
  CHECK(an.eisenstein_order() == 1);
}
