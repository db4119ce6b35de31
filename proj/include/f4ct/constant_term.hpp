// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_CONSTANT_TERM_HPP
#define F4CT_CONSTANT_TERM_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "f4ct/hecke.hpp"
#include "f4ct/zeta.hpp"

namespace f4ct {

enum class ClassLabel { Csph, Ceven, Cno, C0, C0a, Unclassified };

std::string label_str(ClassLabel l);

// Support pattern of the membership predicate nu(|S|) on |S| = 0..6, plus a
// readable name when it matches a standard shape.
struct Predicate {
  std::array<bool, 7> support{};
  std::string name;  // "even", "!=1", "all", "none", "other"

  static Predicate from_support(const std::array<bool, 7>& s);
};

struct ClassReport {
  EquivClass cls;
  int c_order = 0;
  int effective_order = 0;  // -valuation of sum_w C_w(z) (triv n_w(z))
  int rank_shortest = -1;
  ClassLabel label = ClassLabel::Unclassified;
  std::vector<Rat> ratios;        // leading C-coefficients vs shortest
  std::vector<Rat> scalars;       // per-member stabilizer scalars (diagonal)
  std::optional<Predicate> predicate;
  bool special = false;           // the non-diagonal P3 class
  bool predicate_mechanical = true;
  bool square_int_exponent = false;
  std::string diagnostics;
};

struct SpectrumReport {
  int parabolic = 0;
  Rat z0;
  int e_order = 0;
  bool square_integrable = false;
  Predicate sigma_predicate;
  bool conflict = false;  // conflicting predicates at max order (reported, not merged)
  std::vector<std::string> conflict_names;
  bool trivial_rep = false;
  Weight trivial_exponent;
  std::vector<ClassReport> classes;
};

// Shared per-(parabolic, z0) analysis state with cached ranks and series.
class ConstantTermAnalysis {
 public:
  ConstantTermAnalysis(const WeylGroup& w, int parabolic, const Rat& z0, int threads = 0);

  const IntertwinerContext& ctx() const { return ctx_; }
  const std::vector<EquivClass>& classes() const { return classes_; }

  // certified image rank of one coset representative (cached)
  int rank_of(WeylElt w) const;
  const RankResult& rank_result(WeylElt w) const;
  // dim of the spherical constituent = rank of the antidominant-image word
  int spherical_dim() const;
  // dim pi_1 + dim pi_2 = smallest rank above spherical_dim
  int c2_dim() const;
  // compute ranks of all coset representatives (parallel)
  void compute_all_ranks() const;

  // exact order of sum over the class of C_w(z) (triv n_w(z)) as a symbolic
  // Laurent series in z - z0; the vanishing of the leading combinations is
  // certified inside the arithmetic
  int effective_class_order(const EquivClass& cls) const;

  ClassReport classify_class(const EquivClass& cls) const;
  int eisenstein_order() const;
  // classify_all = false skips ranks/labels for classes below the leading
  // order (they cannot contribute to the image)
  SpectrumReport spectrum_report(bool classify_all = true) const;

 private:
  const WeylGroup* w_;
  IntertwinerContext ctx_;
  std::vector<EquivClass> classes_;
  int threads_;
  mutable std::map<WeylElt, RankResult> rank_cache_;
  mutable std::optional<int> sph_dim_, c2_dim_;
  mutable std::map<WeylElt, int> eff_cache_;
};

// m(eta) = (1/|group|) sum over classes size * trace^sizeS
Rat arthur_multiplicity(const std::vector<std::pair<long, Rat>>& character_table, int sizeS,
                        long group_order);

}  // namespace f4ct

#endif  // F4CT_CONSTANT_TERM_HPP
