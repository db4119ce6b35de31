// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_LAURENTU_HPP
#define F4CT_LAURENTU_HPP

#include <string>
#include <vector>

#include "f4ct/qfunc.hpp"
#include "f4ct/ratfunc2.hpp"

namespace f4ct {

// Truncated Laurent series in u = t - 1 whose coefficients are rational
// functions in q. Stores coefficients for u^val .. u^(prec-1); the
// coefficient at val is nonzero unless the series is identically zero to
// the stored precision. All arithmetic respects the common truncation.
class LaurentU {
 public:
  LaurentU() : val_(0), prec_(0) {}
  // zero series known to precision u^prec
  static LaurentU zero(int prec);
  static LaurentU constant(QFunc c, int prec);
  LaurentU(int val, std::vector<QFunc> coef, int prec);

  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool is_zero() const { return coef_.empty(); }
  // coefficient of u^k
  QFunc coeff(int k) const;
  const QFunc& leading() const { return coef_.front(); }

  LaurentU operator-() const;
  friend LaurentU operator+(const LaurentU& a, const LaurentU& b);
  friend LaurentU operator-(const LaurentU& a, const LaurentU& b);
  friend LaurentU operator*(const LaurentU& a, const LaurentU& b);
  LaurentU scaled(const QFunc& c) const;
  // multiplicative inverse (leading coefficient must be nonzero)
  LaurentU inverse() const;
  LaurentU truncated(int prec) const;

  friend bool operator==(const LaurentU& a, const LaurentU& b) {
    return a.val_ == b.val_ && a.prec_ == b.prec_ && a.coef_ == b.coef_;
  }

  std::string str() const;

 private:
  void normalize();
  int val_;
  std::vector<QFunc> coef_;  // coef_[i] multiplies u^(val_ + i)
  int prec_;                 // coefficients of u^k for k >= prec_ are unknown
};

// Expansion of a bivariate rational function at t = 1 + u: order terms are
// produced and the valuation (pole order at t = 1 as negative valuation)
// is exact. Precondition: den != 0 after factoring out its (t-1)-power.
LaurentU laurent_expand(const RatFunc2& f, int order);

// Same, for num/den given as polynomials (row-common-denominator fast path).
LaurentU laurent_expand_poly(const Poly2& num, const Poly2& den, int order);

// Substitute t = 1 + u into a Laurent-in-t polynomial, truncating at u^order
// (exact when order exceeds the t-degree spread).
LaurentU poly2_in_u(const Poly2& p, int order);

}  // namespace f4ct

#endif  // F4CT_LAURENTU_HPP
