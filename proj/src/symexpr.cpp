// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/symexpr.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace f4ct {

SymTable& SymTable::instance() {
  static SymTable t;
  return t;
}

int SymTable::intern(const std::string& name) {
  auto it = ids_.find(name);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(names_.size());
  names_.push_back(name);
  ids_[name] = id;
  return id;
}

SymExpr SymExpr::symbol(const std::string& name, int exp, QFunc coeff) {
  SymExpr e;
  if (coeff.is_zero()) return e;
  SymMono m;
  if (exp != 0) m.push_back({SymTable::instance().intern(name), exp});
  e.terms_[std::move(m)] = std::move(coeff);
  return e;
}

SymExpr SymExpr::monomial(SymMono m, QFunc coeff) {
  SymExpr e;
  if (coeff.is_zero()) return e;
  std::sort(m.begin(), m.end());
  e.terms_[std::move(m)] = std::move(coeff);
  return e;
}

SymExpr SymExpr::operator-() const {
  SymExpr r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

SymExpr& SymExpr::operator+=(const SymExpr& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& o) { return *this += -o; }

namespace {

SymMono mono_mul(const SymMono& a, const SymMono& b) {
  SymMono out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      int e = a[i].second + b[j].second;
      if (e != 0) out.push_back({a[i].first, e});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
  SymExpr r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      QFunc c = ca * cb;
      if (c.is_zero()) continue;
      SymMono m = mono_mul(ma, mb);
      auto [it, fresh] = r.terms_.emplace(std::move(m), std::move(c));
      if (!fresh) {
        it->second += ca * cb;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

SymExpr SymExpr::scaled(const QFunc& c) const {
  SymExpr r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) {
    QFunc x = v * c;
    if (!x.is_zero()) r.terms_[m] = std::move(x);
  }
  return r;
}

SymExpr SymExpr::monomial_inverse() const {
  if (terms_.size() != 1) throw std::domain_error("SymExpr: inverse of non-monomial");
  const auto& [m, c] = *terms_.begin();
  SymMono inv = m;
  for (auto& [id, e] : inv) e = -e;
  SymExpr r;
  r.terms_[std::move(inv)] = QFunc(Rat(1)) / c;
  return r;
}

bool SymExpr::proportional(const SymExpr& p, const SymExpr& q, Rat& ratio) {
  if (p.is_zero() || q.is_zero()) {
    ratio = Rat(0);
    return q.is_zero();
  }
  if (p.terms_.size() != q.terms_.size()) return false;
  auto ip = p.terms_.begin();
  auto iq = q.terms_.begin();
  bool first = true;
  Rat r;
  for (; ip != p.terms_.end(); ++ip, ++iq) {
    if (ip->first != iq->first) return false;
    // both coefficients must be rational multiples of each other
    QFunc quot = iq->second / ip->second;
    if (!quot.is_constant()) return false;
    Rat rr = quot.eval(Rat(0));
    if (first) {
      r = rr;
      first = false;
    } else if (r != rr) {
      return false;
    }
  }
  ratio = r;
  return true;
}

std::string SymExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (const auto& [id, e] : m) {
      os << "*" << SymTable::instance().name(id);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

ZSeries ZSeries::zero(int prec) {
  ZSeries s;
  s.val_ = prec;
  s.prec_ = prec;
  return s;
}

ZSeries ZSeries::constant(SymExpr c, int prec) {
  ZSeries s;
  s.prec_ = prec;
  s.val_ = 0;
  s.coef_.push_back(std::move(c));
  s.normalize();
  return s;
}

ZSeries::ZSeries(int val, std::vector<SymExpr> coef, int prec)
    : val_(val), coef_(std::move(coef)), prec_(prec) {
  normalize();
}

void ZSeries::normalize() {
  if (val_ + static_cast<int>(coef_.size()) > prec_) coef_.resize(std::max(0, prec_ - val_));
  while (!coef_.empty() && coef_.front().is_zero()) {
    coef_.erase(coef_.begin());
    ++val_;
  }
  while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
  if (coef_.empty()) val_ = prec_;
}

SymExpr ZSeries::coeff(int k) const {
  if (k < val_ || k >= val_ + static_cast<int>(coef_.size())) return SymExpr();
  return coef_[k - val_];
}

ZSeries ZSeries::operator-() const {
  ZSeries r = *this;
  for (auto& c : r.coef_) c = -c;
  return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  ZSeries r;
  r.prec_ = std::min(a.prec_, b.prec_);
  if (a.is_zero() && b.is_zero()) {
    r.val_ = r.prec_;
    return r;
  }
  r.val_ = std::min(a.is_zero() ? b.val_ : a.val_, b.is_zero() ? a.val_ : b.val_);
  r.coef_.assign(std::max(0, r.prec_ - r.val_), SymExpr());
  for (int k = r.val_; k < r.prec_; ++k) r.coef_[k - r.val_] = a.coeff(k) + b.coeff(k);
  r.normalize();
  return r;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  int prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  ZSeries r;
  r.prec_ = prec;
  if (a.is_zero() || b.is_zero()) {
    r.val_ = prec;
    return r;
  }
  r.val_ = a.val_ + b.val_;
  r.coef_.assign(std::max(0, prec - r.val_), SymExpr());
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

ZSeries ZSeries::scaled(const SymExpr& c) const {
  if (c.is_zero()) return zero(prec_);
  ZSeries r = *this;
  for (auto& x : r.coef_) x = x * c;
  r.normalize();
  return r;
}

ZSeries ZSeries::inverse() const {
  if (is_zero()) throw std::domain_error("ZSeries::inverse of zero");
  int n = prec_ - val_;
  std::vector<SymExpr> inv(n);
  SymExpr c0inv = coef_[0].monomial_inverse();
  inv[0] = c0inv;
  for (int k = 1; k < n; ++k) {
    SymExpr s;
    for (int j = 1; j <= k; ++j) {
      SymExpr cj = (j < static_cast<int>(coef_.size())) ? coef_[j] : SymExpr();
      if (!cj.is_zero() && !inv[k - j].is_zero()) s += cj * inv[k - j];
    }
    inv[k] = -(c0inv * s);
  }
  return ZSeries(-val_, std::move(inv), -val_ + n);
}

ZSeries ZSeries::truncated(int prec) const {
  ZSeries r = *this;
  r.prec_ = std::min(prec, prec_);
  r.normalize();
  return r;
}

std::string ZSeries::str() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "O(x^" << prec_ << ")";
    return os.str();
  }
  for (size_t i = 0; i < coef_.size(); ++i) {
    if (coef_[i].is_zero()) continue;
    if (i) os << " + ";
    os << "[" << coef_[i].str() << "]*x^" << (val_ + static_cast<int>(i));
  }
  os << " + O(x^" << prec_ << ")";
  return os.str();
}

}  // namespace f4ct
