// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_HECKE_HPP
#define F4CT_HECKE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "f4ct/chars.hpp"
#include "f4ct/laurentu.hpp"
#include "f4ct/linalg.hpp"
#include "f4ct/ratfunc2.hpp"
#include "f4ct/weyl.hpp"

namespace f4ct {

// Element of the finite Hecke algebra H_0(q) in the T_w basis, coefficients
// in a ring C. No zero coefficients stored.
template <class C>
using HeckeRow = std::map<WeylElt, C>;

// Affine pairing a*z + b evaluated on the deformation line: q^(az+b) becomes
// q^b0 t^a with t = q^(z - z0) and b0 = a z0 + b required integral.
struct PairingForm {
  long slope = 0;  // a
  long value = 0;  // b0 = a z0 + b
};

// Line base + (z - z0) * slope in weight space.
struct WeightLine {
  Weight base;
  Weight slope;
};

// Operations of H_0(q) bound to a fixed Weyl group.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(const WeylGroup& w) : w_(&w) {}
  const WeylGroup& weyl() const { return *w_; }

  // x *= (ce T_e + cs T_s), the generic right multiplication step
  template <class C>
  void rmul_factor(HeckeRow<C>& x, int s, const C& ce, const C& cs, const C& qc,
                   const C& qm1c) const;
  // x := T_u * x
  template <class C>
  HeckeRow<C> lmul_elt(WeylElt u, const HeckeRow<C>& x, const C& qc, const C& qm1c) const;
  // full product a * b
  template <class C>
  HeckeRow<C> mul(const HeckeRow<C>& a, const HeckeRow<C>& b, const C& qc, const C& qm1c) const;

  // H_0 multiplication over the exact bivariate field (spec op h0_mul)
  HeckeRow<RatFunc2> h0_mul(const HeckeRow<RatFunc2>& a, const HeckeRow<RatFunc2>& b) const;

  // triv = sum of T_x over the parabolic subgroup W_M
  template <class C>
  HeckeRow<C> triv_row(const std::vector<int>& theta, const C& one) const;

  // n_{w_alpha} on a line: ((q-1) T_e + (q^b0 t^a - 1) T_s) / (q^(b0+1) t^a - 1)
  HeckeRow<RatFunc2> n_simple(int s, const PairingForm& f) const;

 private:
  const WeylGroup* w_;
};

// Laurent-series image of triv * n_w along a weight line, entries truncated
// in u = t - 1. valuation() >= 0 certifies holomorphy at z0.
//
// The true operator is row / scale: the stored coefficients are polynomials
// and the single q-polynomial `scale` carries the factor denominators. Rank,
// row-space and kernel computations may use the scaled coefficients
// directly; coeff() divides out the scale.
struct HeckeOpSeries {
  std::vector<uint8_t> word;
  std::map<WeylElt, LaurentU> row;
  Poly1 scale = Poly1(Rat(1));
  int order = 2;

  int valuation() const;
  // true coefficient rows of u^k (divides by scale entry-wise)
  HeckeRow<QFunc> coeff(int k) const;
  // scale * (coefficient row of u^k): polynomial entries
  HeckeRow<QFunc> coeff_scaled(int k) const;
};

// Context for one (parabolic, z0) pair.
class IntertwinerContext {
 public:
  IntertwinerContext(const WeylGroup& w, int parabolic, const Rat& z0);

  const WeylGroup& weyl() const { return *w_; }
  const HeckeAlgebra& hecke() const { return h_; }
  int parabolic() const { return parabolic_; }
  const Rat& z0() const { return z0_; }
  const std::vector<int>& levi() const { return levi_; }
  const std::vector<WeylElt>& coset_reps() const { return reps_; }
  const WeightLine& chi_line() const { return line_; }

  // pairing of the line with positive root #k (throws if a z0 + b not integral)
  PairingForm pairing_form(const WeightLine& line, int root_index) const;

  // triv * n_w(z) on an arbitrary line through z0; word is 1-based letters.
  HeckeOpSeries series_on_line(const WeightLine& line, const std::vector<int>& word_1based,
                               int order) const;
  // spec op: w given by its canonical reduced word on the chi_{P,z} line
  HeckeOpSeries intertwiner_series(WeylElt w, int order) const;

  // matrix whose rows are T_u * (row) for u over the coset reps
  QMat module_matrix(const HeckeRow<QFunc>& row) const;

  // certified rank of the operator at u = 0 (spec op image_rank)
  RankResult image_rank(WeylElt w) const;
  // rank of sum of coeff_j * Op(word_j) at u = 0
  RankResult combination_image_rank(const std::vector<Rat>& coeffs,
                                    const std::vector<std::vector<int>>& words_1based) const;

  // kernel dimensions of the listed operators (rank-nullity, certified)
  std::vector<int> kernel_chain(const std::vector<std::vector<int>>& words_1based) const;
  // exact basis of ker(Op(w)) in coset-rep coordinates
  std::vector<std::vector<QFunc>> kernel_basis(WeylElt w) const;

  // row-space equality certified at q in {2,3,5} plus stacked-rank equality
  bool image_space_equal(WeylElt w1, WeylElt w2) const;

  // unique rational a with rank(a Op(u_short) - Op(u_long)) in {0, target};
  // candidates first, exact symbolic fallback after (see design notes)
  Rat stabilizer_scalar(WeylElt u_short, WeylElt u_long, int target_rank) const;

  // (1, -1/2, -1/2, 1/6, -1/6) first-derivative combination annihilates the
  // span of kernel_vectors (coordinates over coset reps)
  bool derivative_identity_check(const std::vector<std::vector<int>>& words_1based,
                                 const std::vector<Rat>& coeffs,
                                 const std::vector<std::vector<QFunc>>& kernel_vectors) const;

 private:
  const WeylGroup* w_;
  HeckeAlgebra h_;
  int parabolic_;
  Rat z0_;
  std::vector<int> levi_;
  std::vector<WeylElt> reps_;
  WeightLine line_;
  mutable std::mutex cache_mutex_;
  mutable std::map<WeylElt, HeckeOpSeries> series_cache_;
};

struct ZamperaResult {
  Rat a1;
  bool minpoly_ok = false;
  std::pair<int, int> eigen_dims{0, 0};  // (dim V_1, dim V_{-a1})
  bool eigen_dims_certified = false;
};

// Appendix-A split: u = s_alpha w s_alpha restricted to the line chi + z m;
// verifies (E - 1)(E + a1) = 0 on the whole H_0 module.
ZamperaResult zampera_split(const WeylGroup& wg, int alpha_1based, const std::vector<int>& w_word,
                            const Weight& chi, const Weight& slope);

}  // namespace f4ct

#endif  // F4CT_HECKE_HPP
