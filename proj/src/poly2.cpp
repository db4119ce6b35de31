// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/poly2.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace f4ct {

Poly2 Poly2::term(int dq, int dt, Rat c) {
  Poly2 p;
  assert(dq >= 0);
  if (c != 0) p.m_[{dq, dt}] = std::move(c);
  return p;
}

Poly2 Poly2::from_q(const Poly1& p) {
  Poly2 out;
  for (int d = 0; d <= p.degree(); ++d)
    if (p.coeff(d) != 0) out.m_[{d, 0}] = p.coeff(d);
  return out;
}

bool Poly2::is_constant() const {
  return m_.empty() || (m_.size() == 1 && m_.begin()->first == Key{0, 0});
}

bool Poly2::t_free() const {
  for (const auto& [k, c] : m_)
    if (k.second != 0) return false;
  return true;
}

Poly1 Poly1_from_terms(const std::map<int, Rat>& terms) {
  int deg = terms.empty() ? -1 : terms.rbegin()->first;
  std::vector<Rat> c(deg + 1, Rat(0));
  for (const auto& [d, v] : terms) c[d] = v;
  return Poly1(std::move(c));
}

Poly1 Poly2::as_q_poly() const {
  std::map<int, Rat> terms;
  for (const auto& [k, c] : m_) {
    assert(k.second == 0);
    terms[k.first] = c;
  }
  return Poly1_from_terms(terms);
}

Poly1 Poly2::eval_t1() const {
  std::map<int, Rat> terms;
  for (const auto& [k, c] : m_) terms[k.first] += c;
  for (auto it = terms.begin(); it != terms.end();)
    it = (it->second == 0) ? terms.erase(it) : std::next(it);
  return Poly1_from_terms(terms);
}

int Poly2::min_t_deg() const {
  int v = std::numeric_limits<int>::max();
  for (const auto& [k, c] : m_) v = std::min(v, k.second);
  return m_.empty() ? 0 : v;
}

int Poly2::max_t_deg() const {
  int v = std::numeric_limits<int>::min();
  for (const auto& [k, c] : m_) v = std::max(v, k.second);
  return m_.empty() ? 0 : v;
}

int Poly2::max_q_deg() const {
  int v = 0;
  for (const auto& [k, c] : m_) v = std::max(v, k.first);
  return v;
}

Rat Poly2::eval(const Rat& qv, const Rat& tv) const {
  Rat acc(0);
  for (const auto& [k, c] : m_) acc += c * rat_pow(qv, k.first) * rat_pow(tv, k.second);
  return acc;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [k, c] : r.m_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [k, c] : o.m_) insert(k, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [k, c] : o.m_) insert(k, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ka, ca] : a.m_)
    for (const auto& [kb, cb] : b.m_)
      r.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Poly2& Poly2::operator*=(const Rat& s) {
  if (s == 0) {
    m_.clear();
    return *this;
  }
  for (auto& [k, c] : m_) c *= s;
  return *this;
}

Poly2 Poly2::shifted(int dq, int dt) const {
  Poly2 r;
  for (const auto& [k, c] : m_) {
    assert(k.first + dq >= 0);
    r.m_[{k.first + dq, k.second + dt}] = c;
  }
  return r;
}

void Poly2::extract_monomial(int& dq, int& dt, Poly2& rest) const {
  if (m_.empty()) {
    dq = dt = 0;
    rest = Poly2();
    return;
  }
  dq = std::numeric_limits<int>::max();
  dt = std::numeric_limits<int>::max();
  for (const auto& [k, c] : m_) {
    dq = std::min(dq, k.first);
    dt = std::min(dt, k.second);
  }
  rest = shifted(-dq, -dt);
}

Rat Poly2::lex_leading_coeff() const {
  if (m_.empty()) return Rat(0);
  Key best = m_.begin()->first;
  Rat c = m_.begin()->second;
  for (const auto& [k, v] : m_) {
    if (k.second > best.second || (k.second == best.second && k.first > best.first)) {
      best = k;
      c = v;
    }
  }
  return c;
}

std::optional<Poly2> Poly2::divexact(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly2();
  // normalize t-valuations so both are genuine polynomials in (q, t)
  int aq, at, bq, bt;
  Poly2 ra, rb;
  a.extract_monomial(aq, at, ra);
  b.extract_monomial(bq, bt, rb);
  if (aq < bq) return std::nullopt;
  // divide ra by rb in lex order (t major, then q)
  auto lexmax = [](const Poly2& p) {
    Key best{-1, std::numeric_limits<int>::min()};
    for (const auto& [k, c] : p.terms())
      if (k.second > best.second || (k.second == best.second && k.first > best.first)) best = k;
    return best;
  };
  Poly2 rem = ra, quot;
  Key lb = lexmax(rb);
  Rat lc = rb.terms().at(lb);
  while (!rem.is_zero()) {
    Key la = lexmax(rem);
    int dq = la.first - lb.first, dt = la.second - lb.second;
    if (dq < 0 || dt < 0) return std::nullopt;
    Rat f = rem.terms().at(la) / lc;
    Poly2 mono = Poly2::term(dq, dt, f);
    quot += mono;
    rem -= mono * rb;
  }
  return quot.shifted(aq - bq, at - bt);
}

std::string Poly2::str() const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    first = false;
    bool unit = (a == 1) && (k.first != 0 || k.second != 0);
    if (!unit) os << rat_str(a);
    if (k.first != 0) {
      if (!unit) os << "*";
      os << "q";
      if (k.first != 1) os << "^" << k.first;
      unit = false;
    }
    if (k.second != 0) {
      if (!unit) os << "*";
      os << "t";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace f4ct
