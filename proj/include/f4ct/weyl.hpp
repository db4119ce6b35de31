// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_WEYL_HPP
#define F4CT_WEYL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "f4ct/rootsys.hpp"

namespace f4ct {

using WeylElt = uint16_t;  // canonical index; 0 is the identity

// Finite Weyl group generated from a root system. Elements are deduplicated
// by their exact action matrix on fundamental-weight coordinates; each
// carries the lexicographically-least reduced word among length-minimal ones.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }
  int size() const { return static_cast<int>(words_.size()); }
  int rank() const { return rs_->rank(); }

  const std::vector<uint8_t>& word(WeylElt e) const { return words_[e]; }
  int length(WeylElt e) const { return static_cast<int>(words_[e].size()); }
  WeylElt longest() const { return longest_; }

  // w acting on a weight (exact matrix-vector product)
  Weight act(WeylElt e, const Weight& lambda) const;
  // w acting on a positive root, result in simple-root coordinates
  std::vector<long> act_root(WeylElt e, const std::vector<long>& root) const;

  WeylElt mul(WeylElt a, WeylElt b) const;
  WeylElt inverse(WeylElt e) const;
  WeylElt gen(int i) const { return rmul_[0 * rank() + i]; }
  WeylElt right_mul_gen(WeylElt e, int i) const { return rmul_[e * rank() + i]; }
  WeylElt left_mul_gen(int i, WeylElt e) const { return lmul_[e * rank() + i]; }
  // product of simple reflections by 1-based indices (need not be reduced)
  WeylElt from_word_1based(const std::vector<int>& w) const;

  // indices into rs.positive_roots() of {beta > 0 : w beta < 0}
  std::vector<int> inversion_set(WeylElt e) const;

  // shortest representatives of W / W_M; theta holds 0-based simple indices
  // of M. Sorted by (length, word).
  std::vector<WeylElt> min_coset_reps(const std::vector<int>& theta) const;
  // shortest representative of e W_M
  WeylElt coset_rep(WeylElt e, const std::vector<int>& theta) const;
  // shortest representatives of W_L \ W / W_M
  std::vector<WeylElt> min_double_coset_reps(const std::vector<int>& theta_l,
                                             const std::vector<int>& theta_m) const;

  // pointwise stabilizer of a weight
  std::vector<WeylElt> stabilizer(const Weight& lambda) const;

  // elements of the standard parabolic subgroup W_M, theta = 0-based simple
  // indices of M
  std::vector<WeylElt> subgroup(const std::vector<int>& theta) const;

  // a uniformly grown alternative reduced word for e
  std::vector<uint8_t> random_reduced_word(WeylElt e, std::mt19937& rng) const;

  // "w_1w_2w_3" rendering (1-based); identity prints "1"
  std::string word_str(WeylElt e) const;
  static std::string word_str(const std::vector<uint8_t>& w);

 private:
  const RootSystem* rs_;
  std::vector<std::vector<uint8_t>> words_;
  std::vector<std::vector<long>> action_;  // row-major rank x rank
  std::vector<WeylElt> rmul_, lmul_, inverse_;
  WeylElt longest_ = 0;
};

}  // namespace f4ct

#endif  // F4CT_WEYL_HPP
