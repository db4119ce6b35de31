// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_SYMEXPR_HPP
#define F4CT_SYMEXPR_HPP

#include <map>
#include <string>
#include <vector>

#include "f4ct/qfunc.hpp"

namespace f4ct {

// Interned formal symbols (rho, zeta Laurent coefficients, regular-point
// Taylor symbols, log q). Exponents may be negative: Laurent monomials.
class SymTable {
 public:
  static SymTable& instance();
  int intern(const std::string& name);
  const std::string& name(int id) const { return names_[id]; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
};

// sorted (symbol id, exponent) pairs, exponent != 0
using SymMono = std::vector<std::pair<int, int>>;

// Laurent polynomial in the symbols with coefficients in Q(q).
class SymExpr {
 public:
  SymExpr() = default;
  explicit SymExpr(QFunc c) {
    if (!c.is_zero()) terms_[{}] = std::move(c);
  }
  explicit SymExpr(const Rat& c) : SymExpr(QFunc(c)) {}
  static SymExpr symbol(const std::string& name, int exp = 1, QFunc coeff = QFunc(Rat(1)));
  static SymExpr monomial(SymMono m, QFunc coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<SymMono, QFunc>& terms() const { return terms_; }

  SymExpr operator-() const;
  SymExpr& operator+=(const SymExpr& o);
  SymExpr& operator-=(const SymExpr& o);
  friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
  friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
  friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
  SymExpr& operator*=(const SymExpr& o) { return *this = *this * o; }
  SymExpr scaled(const QFunc& c) const;
  // inverse of a single Laurent monomial
  SymExpr monomial_inverse() const;

  friend bool operator==(const SymExpr& a, const SymExpr& b) { return a.terms_ == b.terms_; }

  // q == r * p for a rational constant r? returns r when proportional
  static bool proportional(const SymExpr& p, const SymExpr& q, Rat& ratio);

  std::string str() const;

 private:
  std::map<SymMono, QFunc> terms_;
};

// Truncated Laurent series in (z - z0) with SymExpr coefficients.
class ZSeries {
 public:
  ZSeries() : val_(0), prec_(0) {}
  static ZSeries zero(int prec);
  static ZSeries constant(SymExpr c, int prec);
  ZSeries(int val, std::vector<SymExpr> coef, int prec);

  int valuation() const { return val_; }
  int precision() const { return prec_; }
  bool is_zero() const { return coef_.empty(); }
  SymExpr coeff(int k) const;
  const SymExpr& leading() const { return coef_.front(); }

  ZSeries operator-() const;
  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  ZSeries scaled(const SymExpr& c) const;
  ZSeries inverse() const;  // leading coefficient must be a monomial
  ZSeries truncated(int prec) const;

  std::string str() const;

 private:
  void normalize();
  int val_;
  std::vector<SymExpr> coef_;
  int prec_;
};

}  // namespace f4ct

#endif  // F4CT_SYMEXPR_HPP
