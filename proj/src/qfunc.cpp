// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/qfunc.hpp"

#include <stdexcept>

namespace f4ct {

QFunc::QFunc(Poly1 num, Poly1 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("QFunc: zero denominator");
  reduce();
}

Rat QFunc::eval(const Rat& qv) const {
  Rat d = den_.eval(qv);
  if (d == 0) throw std::domain_error("QFunc::eval: denominator vanishes");
  return num_.eval(qv) / d;
}

QFunc QFunc::operator-() const {
  QFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

QFunc& QFunc::operator+=(const QFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  // cross-reduce through the denominator gcd to keep degrees low
  Poly1 g = Poly1::gcd(den_, o.den_);
  if (g.degree() > 0) {
    Poly1 da = *Poly1::divexact(den_, g);
    Poly1 db = *Poly1::divexact(o.den_, g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

QFunc& QFunc::operator-=(const QFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
    reduce();
    return *this;
  }
  Poly1 g = Poly1::gcd(den_, o.den_);
  if (g.degree() > 0) {
    Poly1 da = *Poly1::divexact(den_, g);
    Poly1 db = *Poly1::divexact(o.den_, g);
    num_ = num_ * db - o.num_ * da;
    den_ = den_ * db;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  reduce();
  return *this;
}

QFunc& QFunc::operator*=(const QFunc& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Poly1();
    den_ = Poly1(Rat(1));
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    // both denominators are monic constants, i.e. 1
    num_ = num_ * o.num_;
    return *this;
  }
  // cross-reduce before multiplying to keep degrees down
  Poly1 g1 = o.den_.is_constant() ? Poly1(Rat(1)) : Poly1::gcd(num_, o.den_);
  Poly1 g2 = den_.is_constant() ? Poly1(Rat(1)) : Poly1::gcd(o.num_, den_);
  Poly1 n1 = g1.degree() > 0 ? *Poly1::divexact(num_, g1) : num_;
  Poly1 d2 = g1.degree() > 0 ? *Poly1::divexact(o.den_, g1) : o.den_;
  Poly1 n2 = g2.degree() > 0 ? *Poly1::divexact(o.num_, g2) : o.num_;
  Poly1 d1 = g2.degree() > 0 ? *Poly1::divexact(den_, g2) : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (num_.is_zero()) {
    den_ = Poly1(Rat(1));
    return *this;
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ *= Rat(1) / lead;
    den_ *= Rat(1) / lead;
  }
  return *this;
}

QFunc& QFunc::operator/=(const QFunc& o) {
  if (o.is_zero()) throw std::domain_error("QFunc: division by zero");
  return *this *= QFunc(o.den_, o.num_);
}

void QFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly1(Rat(1));
    return;
  }
  if (den_.is_constant()) {
    Rat lead = den_.leading();
    if (lead != 1) {
      num_ *= Rat(1) / lead;
      den_ = Poly1(Rat(1));
    }
    return;
  }
  Poly1 g = Poly1::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = *Poly1::divexact(num_, g);
    den_ = *Poly1::divexact(den_, g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    num_ *= Rat(1) / lead;
    den_ *= Rat(1) / lead;
  }
}

std::string QFunc::str() const {
  if (den_.is_constant()) return num_.str("q");
  return "(" + num_.str("q") + ")/(" + den_.str("q") + ")";
}

}  // namespace f4ct
