// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/chars.hpp"

#include <algorithm>
#include <cassert>

namespace f4ct {

AffineWeight inducing_character(const RootSystem& rs, int parabolic) {
  auto rhos = rs.rho_vectors(parabolic);
  AffineWeight out;
  out.base.assign(rs.rank(), Rat(0));
  for (int j = 0; j < rs.rank(); ++j) out.base[j] = -rhos.rho_t_m[j];
  out.slope.assign(rs.rank(), Rat(0));
  out.slope[parabolic - 1] = Rat(1);
  return out;
}

ExponentMultiset geometric_lemma_exponents(const WeylGroup& w, int parabolic, const Rat& z0) {
  const auto& rs = w.roots();
  Weight chi = inducing_character(rs, parabolic).at(z0);
  auto reps = w.min_coset_reps(rs.levi_generators(parabolic));
  ExponentMultiset out;
  for (WeylElt u : reps) out[w.act(u, chi)] += 1;
  return out;
}

bool square_integrable(const RootSystem& rs, const Weight& lambda) {
  auto coords = rs.to_simple_root_coords(lambda);
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c < 0; });
}

std::pair<Weight, WeylElt> antidominant_rep(const WeylGroup& w, const Weight& lambda) {
  // descend: while some pairing is positive, reflect it away; the number of
  // positive pairings cannot increase forever (finite orbit)
  Weight cur = lambda;
  std::vector<uint8_t> word;  // letters applied, outermost first
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < w.rank(); ++i) {
      if (cur[i] > 0) {
        cur = w.roots().reflect_weight(i, cur);
        word.push_back(static_cast<uint8_t>(i));
        changed = true;
        break;
      }
    }
  }
  // cur = s_{ik} ... s_{i1} (lambda); assemble that product left to right
  WeylElt e = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = w.right_mul_gen(e, *it);
  // shortest achieving element within the stabilizer coset
  WeylElt best = e;
  for (WeylElt s : w.stabilizer(cur)) {
    WeylElt cand = w.mul(s, e);
    if (w.length(cand) < w.length(best) ||
        (w.length(cand) == w.length(best) && w.word(cand) < w.word(best)))
      best = cand;
  }
  assert(w.act(best, lambda) == cur);
  return {cur, best};
}

std::vector<EquivClass> equivalence_classes(const WeylGroup& w, int parabolic, const Rat& z0) {
  const auto& rs = w.roots();
  Weight chi = inducing_character(rs, parabolic).at(z0);
  auto reps = w.min_coset_reps(rs.levi_generators(parabolic));
  std::map<Weight, EquivClass> by_exp;
  for (WeylElt u : reps) {
    Weight e = w.act(u, chi);
    auto& cls = by_exp[e];
    if (cls.members.empty()) {
      cls.z0 = z0;
      cls.exponent = e;
    }
    cls.members.push_back(u);
  }
  std::vector<EquivClass> out;
  for (auto& [e, cls] : by_exp) {
    // members come in BFS index order = (length, lex word)
    cls.shortest = cls.members.front();
    cls.shortest_unique =
        cls.members.size() < 2 || w.length(cls.members[1]) > w.length(cls.members[0]);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const EquivClass& a, const EquivClass& b) { return a.shortest < b.shortest; });
  return out;
}

}  // namespace f4ct
