// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_CHARS_HPP
#define F4CT_CHARS_HPP

#include <map>
#include <vector>

#include "f4ct/weyl.hpp"

namespace f4ct {

// Affine family of weights: base + z * slope, the z-dependence of inducing
// characters and their Weyl translates.
struct AffineWeight {
  Weight base;   // value at z = 0
  Weight slope;  // coefficient of z

  Weight at(const Rat& z) const {
    Weight out = base;
    for (size_t i = 0; i < out.size(); ++i) out[i] += z * slope[i];
    return out;
  }
};

// chi_{P_i, z} = z * fw_i - rho_T^{M_i}
AffineWeight inducing_character(const RootSystem& rs, int parabolic);

// Weight -> multiplicity; total mass |W(P_i, G)|.
using ExponentMultiset = std::map<Weight, int>;

// {w . chi_{P_i, z0} : w in W^{T,M}} with multiplicities
ExponentMultiset geometric_lemma_exponents(const WeylGroup& w, int parabolic, const Rat& z0);

// Langlands criterion: all simple-root coordinates strictly negative.
bool square_integrable(const RootSystem& rs, const Weight& lambda);

// the unique orbit member with all pairings <= 0, and a shortest w with
// w . lambda antidominant
std::pair<Weight, WeylElt> antidominant_rep(const WeylGroup& w, const Weight& lambda);

// Equivalence class of W(P,G) under u1 chi = u2 chi at z0.
struct EquivClass {
  Rat z0;
  Weight exponent;                  // common value u . chi_{P,z0}
  std::vector<WeylElt> members;     // sorted by (length, word)
  WeylElt shortest = 0;
  bool shortest_unique = true;
};

// Partition of W(P_i, G); classes sorted by their shortest member.
std::vector<EquivClass> equivalence_classes(const WeylGroup& w, int parabolic, const Rat& z0);

}  // namespace f4ct

#endif  // F4CT_CHARS_HPP
