// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_QFUNC_HPP
#define F4CT_QFUNC_HPP

#include <string>

#include "f4ct/poly1.hpp"

namespace f4ct {

// Reduced fraction of univariate polynomials in q: the t-degree-zero
// specialization of RatFunc2, kept separate because the linear algebra
// works exclusively here and wants cheap full gcd reduction.
// Invariants: gcd(num, den) = 1, den monic, zero is 0/1.
class QFunc {
 public:
  QFunc() : num_(), den_(Rat(1)) {}
  explicit QFunc(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
  explicit QFunc(Poly1 p) : num_(std::move(p)), den_(Rat(1)) {}
  QFunc(Poly1 num, Poly1 den);

  static QFunc q() { return QFunc(Poly1::x()); }

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  Rat eval(const Rat& qv) const;

  QFunc operator-() const;
  QFunc& operator+=(const QFunc& o);
  QFunc& operator-=(const QFunc& o);
  QFunc& operator*=(const QFunc& o);
  QFunc& operator/=(const QFunc& o);
  friend QFunc operator+(QFunc a, const QFunc& b) { return a += b; }
  friend QFunc operator-(QFunc a, const QFunc& b) { return a -= b; }
  friend QFunc operator*(QFunc a, const QFunc& b) { return a *= b; }
  friend QFunc operator/(QFunc a, const QFunc& b) { return a /= b; }
  friend bool operator==(const QFunc& a, const QFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QFunc& a, const QFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  void reduce();
  Poly1 num_, den_;
};

}  // namespace f4ct

#endif  // F4CT_QFUNC_HPP
