// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/laurentu.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace f4ct {

LaurentU LaurentU::zero(int prec) {
  LaurentU s;
  s.val_ = prec;
  s.prec_ = prec;
  return s;
}

LaurentU LaurentU::constant(QFunc c, int prec) {
  LaurentU s;
  s.prec_ = prec;
  s.val_ = 0;
  s.coef_.push_back(std::move(c));
  s.normalize();
  return s;
}

LaurentU::LaurentU(int val, std::vector<QFunc> coef, int prec)
    : val_(val), coef_(std::move(coef)), prec_(prec) {
  normalize();
}

void LaurentU::normalize() {
  if (val_ + static_cast<int>(coef_.size()) > prec_)
    coef_.resize(std::max(0, prec_ - val_));
  while (!coef_.empty() && coef_.front().is_zero()) {
    coef_.erase(coef_.begin());
    ++val_;
  }
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
  if (coef_.empty()) val_ = prec_;
}

QFunc LaurentU::coeff(int k) const {
  if (k < val_ || k >= val_ + static_cast<int>(coef_.size())) return QFunc();
  return coef_[k - val_];
}

LaurentU LaurentU::operator-() const {
  LaurentU r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

LaurentU operator+(const LaurentU& a, const LaurentU& b) {
  LaurentU r;
  r.prec_ = std::min(a.prec_, b.prec_);
  r.val_ = std::min(a.val_, b.val_);
  if (a.is_zero() && b.is_zero()) {
    r.val_ = r.prec_;
    return r;
  }
  r.val_ = std::min(a.is_zero() ? b.val_ : a.val_, b.is_zero() ? a.val_ : b.val_);
  int hi = r.prec_;
  r.coef_.assign(std::max(0, hi - r.val_), QFunc());
  for (int k = r.val_; k < hi; ++k) r.coef_[k - r.val_] = a.coeff(k) + b.coeff(k);
  r.normalize();
  return r;
}

LaurentU operator-(const LaurentU& a, const LaurentU& b) { return a + (-b); }

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
  // truncation: prec of product limited by each factor's relative precision
  int prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  LaurentU r;
  r.prec_ = prec;
  if (a.is_zero() || b.is_zero()) {
    r.val_ = prec;
    return r;
  }
  r.val_ = a.val_ + b.val_;
  r.coef_.assign(std::max(0, prec - r.val_), QFunc());
  for (size_t i = 0; i < a.coef_.size(); ++i) {
    if (a.coef_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coef_.size(); ++j) {
      int k = static_cast<int>(i + j);
      if (r.val_ + k >= prec) break;
      if (b.coef_[j].is_zero()) continue;
      r.coef_[k] += a.coef_[i] * b.coef_[j];
    }
  }
  r.normalize();
  return r;
}

LaurentU LaurentU::scaled(const QFunc& c) const {
  if (c.is_zero()) return zero(prec_);
  LaurentU r = *this;
  for (auto& x : r.coef_) x *= c;
  r.normalize();
  return r;
}

LaurentU LaurentU::inverse() const {
  if (is_zero()) throw std::domain_error("LaurentU::inverse of zero series");
  // (u^v (c0 + c1 u + ...))^-1 = u^-v c0^-1 (1 - (c1/c0) u + ...)
  int n = prec_ - val_;  // relative precision of the unit part
  std::vector<QFunc> inv(n);
  QFunc c0inv = QFunc(Rat(1)) / coef_[0];
  inv[0] = c0inv;
  for (int k = 1; k < n; ++k) {
    QFunc s;
    for (int j = 1; j <= k; ++j) {
      QFunc cj = (j < static_cast<int>(coef_.size())) ? coef_[j] : QFunc();
      if (!cj.is_zero() && !inv[k - j].is_zero()) s += cj * inv[k - j];
    }
    inv[k] = -(c0inv * s);
  }
  return LaurentU(-val_, std::move(inv), -val_ + n);
}

LaurentU LaurentU::truncated(int prec) const {
  LaurentU r = *this;
  r.prec_ = std::min(prec, prec_);
  r.normalize();
  return r;
}

std::string LaurentU::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(u^" << prec_ << ")";
    return os.str();
  }
  for (size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i].is_zero()) continue;
    if (i) os << " + ";
    os << "(" << coef_[i].str() << ")*u^" << (val_ + static_cast<int>(i));
  }
  os << " + O(u^" << prec_ << ")";
  return os.str();
}

LaurentU poly2_in_u(const Poly2& p, int order) {
  // t^k = (1+u)^k expanded exactly for k >= 0 and as a truncated series for
  // k < 0; collect coefficients of u^0..u^(order-1) as polynomials in q.
  std::map<int, std::map<int, Rat>> by_u;  // u-deg -> q-deg -> coeff
  for (const auto& [key, c] : p.terms()) {
    auto [dq, dt] = key;
    if (dt >= 0) {
      Rat binom(1);
      for (int j = 0; j <= dt && j < order; ++j) {
        by_u[j][dq] += c * binom;
        binom *= Rat(dt - j);
        binom /= Rat(j + 1);
      }
    } else {
      // (1+u)^dt, dt < 0: coefficients C(dt, j) = (-1)^j C(-dt+j-1, j)
      Rat binom(1);
      for (int j = 0; j < order; ++j) {
        by_u[j][dq] += c * binom;
        binom *= Rat(dt - j);
        binom /= Rat(j + 1);
      }
    }
  }
  std::vector<QFunc> coef(order);
  for (auto& [ud, terms] : by_u) {
    for (auto it = terms.begin(); it != terms.end();)
      it = (it->second == 0) ? terms.erase(it) : std::next(it);
    if (terms.empty()) continue;
    int deg = terms.rbegin()->first;
    std::vector<Rat> c(deg + 1, Rat(0));
    for (const auto& [d, v] : terms) c[d] = v;
    coef[ud] = QFunc(Poly1(std::move(c)));
  }
  return LaurentU(0, std::move(coef), order);
}

LaurentU laurent_expand_poly(const Poly2& num, const Poly2& den, int order) {
  if (num.is_zero()) return LaurentU::zero(order);
  if (den.is_zero()) throw std::domain_error("laurent_expand: zero denominator");
  // The true valuation of num/den is v(num) - v(den); expand both with
  // enough guard terms that the requested precision survives the division.
  int span_n = num.max_t_deg() - num.min_t_deg();
  int span_d = den.max_t_deg() - den.min_t_deg();
  int guard = span_n + span_d + order + 2;
  LaurentU n = poly2_in_u(num, guard);
  LaurentU d = poly2_in_u(den, guard);
  if (d.is_zero())
    throw std::domain_error("laurent_expand: denominator identically zero at t=1");
  if (n.is_zero()) return LaurentU::zero(order);
  LaurentU res = n * d.inverse();
  return res.truncated(res.valuation() + order);
}

LaurentU laurent_expand(const RatFunc2& f, int order) {
  return laurent_expand_poly(f.num(), f.den(), order);
}

}  // namespace f4ct
