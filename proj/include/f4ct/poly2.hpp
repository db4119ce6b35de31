// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_POLY2_HPP
#define F4CT_POLY2_HPP

#include <map>
#include <string>
#include <utility>

#include "f4ct/poly1.hpp"
#include "f4ct/rat.hpp"

namespace f4ct {

// Sparse polynomial in q, Laurent in t: sum of c * q^dq * t^dt with dq >= 0,
// dt in Z. No zero coefficients are stored.
class Poly2 {
 public:
  // key = (q degree, t degree)
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Rat>;

  Poly2() = default;
  explicit Poly2(Rat c) {
    if (c != 0) m_[{0, 0}] = std::move(c);
  }
  static Poly2 term(int dq, int dt, Rat c = Rat(1));
  static Poly2 q() { return term(1, 0); }
  static Poly2 t() { return term(0, 1); }
  // Lift a polynomial in q.
  static Poly2 from_q(const Poly1& p);

  bool is_zero() const { return m_.empty(); }
  const Map& terms() const { return m_; }
  size_t size() const { return m_.size(); }

  bool is_constant() const;
  bool t_free() const;
  // t-free content as a polynomial in q (requires t_free()).
  Poly1 as_q_poly() const;
  // substitute t = 1
  Poly1 eval_t1() const;

  int min_t_deg() const;
  int max_t_deg() const;
  int max_q_deg() const;

  Rat eval(const Rat& qv, const Rat& tv) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2& operator*=(const Poly2& o) { return *this = *this * o; }
  Poly2& operator*=(const Rat& s);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.m_ == b.m_; }

  // multiply by q^dq t^dt (dq may be negative only if every q-degree stays >= 0)
  Poly2 shifted(int dq, int dt) const;

  // Exact division; nullopt when not divisible. Works for t-Laurent inputs.
  static std::optional<Poly2> divexact(const Poly2& a, const Poly2& b);

  // Writes *this as q^dq * t^dt * rest with rest having min degrees 0.
  void extract_monomial(int& dq, int& dt, Poly2& rest) const;

  // Leading term in (t, q)-lexicographic order; used for sign conventions.
  Rat lex_leading_coeff() const;

  std::string str() const;

 private:
  void insert(const Key& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = m_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) m_.erase(it);
    }
  }
  Map m_;
};

}  // namespace f4ct

#endif  // F4CT_POLY2_HPP
