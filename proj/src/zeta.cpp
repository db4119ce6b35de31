// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/zeta.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace f4ct {

void ZetaProduct::reduce() {
  std::sort(num.begin(), num.end());
  std::sort(den.begin(), den.end());
  std::vector<AffineForm> n2, d2;
  size_t i = 0, j = 0;
  while (i < num.size() && j < den.size()) {
    if (num[i] == den[j]) {
      ++i;
      ++j;
    } else if (num[i] < den[j]) {
      n2.push_back(num[i++]);
    } else {
      d2.push_back(den[j++]);
    }
  }
  while (i < num.size()) n2.push_back(num[i++]);
  while (j < den.size()) d2.push_back(den[j++]);
  num = std::move(n2);
  den = std::move(d2);
}

namespace {

std::string form_str(const AffineForm& f) {
  std::ostringstream os;
  os << "z(";
  if (f.a == 0) {
    os << rat_str(f.b);
  } else {
    if (f.a == -1)
      os << "-z";
    else if (f.a != 1)
      os << f.a << "z";
    else
      os << "z";
    if (f.b > 0) os << "+" << rat_str(f.b);
    if (f.b < 0) os << rat_str(f.b);
  }
  os << ")";
  return os.str();
}

std::string side_str(const std::vector<AffineForm>& side) {
  std::ostringstream os;
  size_t i = 0;
  while (i < side.size()) {
    size_t j = i;
    while (j < side.size() && side[j] == side[i]) ++j;
    os << form_str(side[i]);
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace

std::string ZetaProduct::str() const {
  if (num.empty() && den.empty()) return "1";
  std::string n = num.empty() ? "1" : side_str(num);
  if (den.empty()) return n;
  return n + "/(" + side_str(den) + ")";
}

ZetaProduct gk_product(const WeylGroup& wg, int parabolic, WeylElt w) {
  const auto& rs = wg.roots();
  AffineWeight chi = inducing_character(rs, parabolic);
  ZetaProduct out;
  for (int k : wg.inversion_set(w)) {
    Rat a = rs.pairing(chi.slope, k);
    Rat b = rs.pairing(chi.base, k);
    assert(is_integer(a));
    out.num.push_back(AffineForm{a.get_num().get_si(), b});
    out.den.push_back(AffineForm{a.get_num().get_si(), b + 1});
  }
  out.reduce();
  return out;
}

namespace {

Rat form_value(const AffineForm& f, const Rat& z0) { return Rat(f.a) * z0 + f.b; }

long form_value_int(const AffineForm& f, const Rat& z0) {
  Rat v = form_value(f, z0);
  if (!is_integer(v))
    throw std::runtime_error("zeta form evaluates to non-integer " + rat_str(v) + " at z0");
  return v.get_num().get_si();
}

}  // namespace

int order_at(const ZetaProduct& p, const Rat& z0) {
  int order = 0;
  for (const auto& f : p.num) {
    long v = form_value_int(f, z0);
    if (v == 0 || v == 1) ++order;
  }
  for (const auto& f : p.den) {
    long v = form_value_int(f, z0);
    if (v == 0 || v == 1) --order;
  }
  return order;
}

ZSeries zeta_factor_series(const AffineForm& f, const Rat& z0, int depth) {
  long v = form_value_int(f, z0);
  const Rat a(f.a);
  if (f.a == 0) {
    // constant in z
    if (v == 0 || v == 1) throw std::runtime_error("constant zeta factor at a pole");
    long p = std::max(v, 1 - v);
    return ZSeries::constant(SymExpr::symbol("Z0(" + std::to_string(p) + ")"), depth + 1);
  }
  std::vector<SymExpr> coef;
  int val;
  if (v == 1 || v == 0) {
    // zeta(s) = rho/(s-1) + sum k_{j+1} (s-1)^j; at v = 0 use s -> 1-s
    Rat sign = (v == 1) ? Rat(1) : Rat(-1);
    val = -1;
    coef.push_back(SymExpr::symbol("rho", 1, QFunc(sign / a)));
    for (int j = 0; j <= depth; ++j) {
      Rat scale = rat_pow(a, j) * ((v == 1) ? Rat(1) : rat_pow(Rat(-1), j));
      coef.push_back(SymExpr::symbol("k" + std::to_string(j + 1), 1, QFunc(scale)));
    }
  } else {
    // regular point: Taylor symbols Zj(p), normalized to p = max(v, 1-v)
    // via zeta^{(j)}(v) = (-1)^j zeta^{(j)}(1-v)
    val = 0;
    long p = std::max(v, 1 - v);
    bool flipped = (p != v);
    for (int j = 0; j <= depth; ++j) {
      Rat scale = rat_pow(a, j);
      if (flipped && (j % 2 == 1)) scale = -scale;
      coef.push_back(SymExpr::symbol("Z" + std::to_string(j) + "(" + std::to_string(p) + ")", 1,
                                     QFunc(scale)));
    }
  }
  return ZSeries(val, std::move(coef), val + static_cast<int>(coef.size()));
}

ZSeries leading_laurent(const ZetaProduct& p, const Rat& z0, int depth) {
  // make every factor long enough that the product keeps depth terms
  int guard = depth + static_cast<int>(p.num.size() + p.den.size()) + 2;
  ZSeries out = ZSeries::constant(SymExpr(Rat(1)), guard);
  for (const auto& f : p.num) out = out * zeta_factor_series(f, z0, guard);
  for (const auto& f : p.den) out = out * zeta_factor_series(f, z0, guard).inverse();
  return out.truncated(out.valuation() + depth);
}

std::vector<Rat> class_coefficient_ratios(const WeylGroup& wg, int parabolic,
                                          const EquivClass& cls, int depth) {
  std::vector<Rat> out;
  ZetaProduct pu = gk_product(wg, parabolic, cls.shortest);
  int ord = order_at(pu, cls.z0);
  ZSeries su = leading_laurent(pu, cls.z0, depth);
  assert(-su.valuation() == ord);
  for (WeylElt w : cls.members) {
    ZetaProduct pw = gk_product(wg, parabolic, w);
    if (order_at(pw, cls.z0) != ord)
      throw std::runtime_error("class members with different C-orders at z0");
    ZSeries sw = leading_laurent(pw, cls.z0, depth);
    Rat ratio;
    if (!SymExpr::proportional(su.leading(), sw.leading(), ratio))
      throw std::runtime_error("leading coefficients not rationally proportional: " +
                               su.leading().str() + " vs " + sw.leading().str());
    out.push_back(ratio);
  }
  return out;
}

}  // namespace f4ct
