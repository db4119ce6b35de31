// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_ROOTSYS_HPP
#define F4CT_ROOTSYS_HPP

#include <string>
#include <vector>

#include "f4ct/rat.hpp"

namespace f4ct {

// Weight in fundamental-weight coordinates: entry i is <lambda, alpha_i^vee>.
using Weight = std::vector<Rat>;

bool operator_eq(const Weight& a, const Weight& b);
std::string weight_str(const Weight& w);

// Root system built from a Cartan matrix cartan[i][j] = <alpha_j, alpha_i^vee>
// by closing the simple roots under simple reflections. Positive roots are
// stored in simple-root coordinates.
class RootSystem {
 public:
  explicit RootSystem(std::vector<std::vector<long>> cartan, size_t closure_bound = 4096);

  static RootSystem f4();  // thesis labeling: 1 - 2 => 3 - 4
  // Cartan matrix from a JSON config {"cartan": [[...]], "labels": [...]}.
  static RootSystem from_json_file(const std::string& path);

  int rank() const { return rank_; }
  long cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<long>>& positive_roots() const { return pos_; }
  int num_positive_roots() const { return static_cast<int>(pos_.size()); }

  // fundamental weight i (0-based) in simple-root coordinates
  const std::vector<Rat>& fundamental_in_roots(int i) const { return inv_cartan_col_[i]; }
  // lambda rewritten in simple-root coordinates
  std::vector<Rat> to_simple_root_coords(const Weight& lambda) const;
  // root (simple-root coords) rewritten in fundamental-weight coords
  Weight root_to_weight(const std::vector<long>& root) const;

  // coroot of positive root #k expanded in simple coroots; <fw_i, beta^vee>
  // is entry i
  const std::vector<Rat>& coroot(int k) const { return coroots_[k]; }
  // <lambda, beta^vee> for positive root #k
  Rat pairing(const Weight& lambda, int k) const;
  // index of a positive root given simple-root coordinates, -1 if absent
  int root_index(const std::vector<long>& root) const;

  // simple reflection s_i acting on fundamental-weight coordinates
  Weight reflect_weight(int i, const Weight& lambda) const;
  // s_i acting on simple-root coordinates of a root
  std::vector<long> reflect_root(int i, const std::vector<long>& root) const;

  Weight rho() const;  // sum of fundamental weights

  // rho_M and rho_T^M for the maximal parabolic omitting simple root i
  // (1-based), with rho_M proportional to fw_i (asserted).
  struct RhoPair {
    Weight rho_m;
    Weight rho_t_m;
  };
  RhoPair rho_vectors(int i_omitted) const;
  // general Levi: theta holds the 0-based simple indices of M
  RhoPair rho_for_theta(const std::vector<int>& theta) const;

  // simple-root indices of the Levi of P_i (all but i-1)
  std::vector<int> levi_generators(int i_omitted) const;

 private:
  int rank_;
  std::vector<std::vector<long>> cartan_;
  std::vector<std::vector<long>> pos_;
  std::vector<std::vector<Rat>> coroots_;
  std::vector<std::vector<Rat>> inv_cartan_col_;  // column i = fw_i in root coords
};

// Maximal parabolic index (1-based omitted simple root).
struct ParabolicIndex {
  int i = 1;
};

}  // namespace f4ct

#endif  // F4CT_ROOTSYS_HPP
