// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_RATFUNC2_HPP
#define F4CT_RATFUNC2_HPP

#include <string>

#include "f4ct/poly2.hpp"

namespace f4ct {

// Reduced fraction of Poly2. Reduction cancels content, common monomial
// factors and common polynomial factors (full gcd on t-free inputs, binomial
// factor cancellation otherwise; thesis denominators are products of
// q^m t^a - 1 binomials). Canonical sign: the denominator's (t,q)-lex leading
// coefficient is positive; zero is 0/1.
class RatFunc2 {
 public:
  RatFunc2() : num_(), den_(Rat(1)) {}
  explicit RatFunc2(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit RatFunc2(Poly2 p) : num_(std::move(p)), den_(Rat(1)) {}
  RatFunc2(Poly2 num, Poly2 den);

  static RatFunc2 q() { return RatFunc2(Poly2::q()); }
  static RatFunc2 t() { return RatFunc2(Poly2::t()); }
  // q^b t^a - 1, with negative b handled by clearing: (t^a - q^-b)/q^-b.
  static RatFunc2 qpow_tpow_minus_one(long b, long a);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool t_free() const { return num_.t_free() && den_.t_free(); }

  Rat eval(const Rat& qv, const Rat& tv) const;  // den must not vanish there

  RatFunc2 operator-() const;
  RatFunc2& operator+=(const RatFunc2& o);
  RatFunc2& operator-=(const RatFunc2& o);
  RatFunc2& operator*=(const RatFunc2& o);
  RatFunc2& operator/=(const RatFunc2& o);
  friend RatFunc2 operator+(RatFunc2 a, const RatFunc2& b) { return a += b; }
  friend RatFunc2 operator-(RatFunc2 a, const RatFunc2& b) { return a -= b; }
  friend RatFunc2 operator*(RatFunc2 a, const RatFunc2& b) { return a *= b; }
  friend RatFunc2 operator/(RatFunc2 a, const RatFunc2& b) { return a /= b; }
  friend bool operator==(const RatFunc2& a, const RatFunc2& b) {
    return (a.num_ * b.den_) == (b.num_ * a.den_);
  }

  std::string str() const;

 private:
  void reduce();
  Poly2 num_, den_;
};

}  // namespace f4ct

#endif  // F4CT_RATFUNC2_HPP
