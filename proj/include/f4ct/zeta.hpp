// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_ZETA_HPP
#define F4CT_ZETA_HPP

#include <string>
#include <vector>

#include "f4ct/chars.hpp"
#include "f4ct/symexpr.hpp"
#include "f4ct/weyl.hpp"

namespace f4ct {

// a*z + b, the argument of one completed-zeta factor
struct AffineForm {
  long a = 0;
  Rat b;
  friend bool operator==(const AffineForm& x, const AffineForm& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const AffineForm& x, const AffineForm& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  }
};

// Signed multiset of affine forms: prod zeta(num) / prod zeta(den), stored
// reduced (no form occurs on both sides).
struct ZetaProduct {
  std::vector<AffineForm> num;  // sorted
  std::vector<AffineForm> den;  // sorted

  void reduce();
  bool empty() const { return num.empty() && den.empty(); }
  // thesis display form, e.g. "z(2z)z(z-3/2)^2/(z(2z+1)z(z+5/2)z(z+11/2))"
  std::string str() const;
};

// C_w(z) = prod over R(w) of zeta(<chi_{P_i,z}, beta^vee>)/zeta(... + 1)
ZetaProduct gk_product(const WeylGroup& wg, int parabolic, WeylElt w);

// pole order at z0 (positive = pole): every form must evaluate to an integer
// there; zeta vanishes at no integer outside {0,1}, so only arguments
// hitting {0,1} contribute.
int order_at(const ZetaProduct& p, const Rat& z0);

// Laurent data of the product at z0 over the formal symbols rho, k1..kD,
// and regular-point Taylor symbols normalized by the functional equation.
ZSeries leading_laurent(const ZetaProduct& p, const Rat& z0, int depth);

// Laurent expansion of a single zeta(az + b) factor around z0.
ZSeries zeta_factor_series(const AffineForm& f, const Rat& z0, int depth);

// leading coefficient of each member's C_w relative to the shortest member;
// throws with the residual symbols when a quotient is not rational.
std::vector<Rat> class_coefficient_ratios(const WeylGroup& wg, int parabolic,
                                          const EquivClass& cls, int depth);

}  // namespace f4ct

#endif  // F4CT_ZETA_HPP
