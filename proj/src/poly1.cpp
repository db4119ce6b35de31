// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/poly1.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace f4ct {

Poly1 Poly1::monomial(int deg, Rat c) {
  Poly1 p;
  if (c == 0) return p;
  p.c_.assign(deg + 1, Rat(0));
  p.c_[deg] = std::move(c);
  return p;
}

Rat Poly1::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::operator-() const {
  Poly1 r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1();
  Poly1 r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly1& Poly1::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

void Poly1::divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r) {
  assert(!b.is_zero());
  q = Poly1();
  r = a;
  if (a.degree() < b.degree()) return;
  q.c_.assign(a.degree() - b.degree() + 1, Rat(0));
  const Rat& lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    Rat f = r.leading() / lead;
    q.c_[d] = f;
    // r -= f * x^d * b
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + d] -= f * b.c_[i];
    r.trim();
  }
  q.trim();
}

std::optional<Poly1> Poly1::divexact(const Poly1& a, const Poly1& b) {
  Poly1 q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly1 Poly1::primitive_integer() const {
  if (is_zero()) return *this;
  Int den(1);
  for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  Int content(0);
  std::vector<Int> zc(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    zc[i] = c_[i].get_num() * (den / c_[i].get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), zc[i].get_mpz_t());
  }
  if (zc.back() < 0) content = -content;
  Poly1 out;
  out.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = Rat(zc[i] / content);
  return out;
}

Poly1 Poly1::gcd(const Poly1& a, const Poly1& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_integer();
  if (b.is_zero()) return a.primitive_integer();
  Poly1 f = a.primitive_integer(), g = b.primitive_integer();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Poly1 q, r;
    divmod(f, g, q, r);
    f = std::move(g);
    g = r.is_zero() ? Poly1() : r.primitive_integer();
  }
  // monic gcd
  Poly1 out = f;
  Rat inv = Rat(1) / out.leading();
  out *= inv;
  return out;
}

Poly1 Poly1::derivative() const {
  if (c_.size() <= 1) return Poly1();
  Poly1 d;
  d.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
  d.trim();
  return d;
}

int Poly1::strip_x_power() {
  if (is_zero()) return 0;
  size_t v = 0;
  while (v < c_.size() && c_[v] == 0) ++v;
  c_.erase(c_.begin(), c_.begin() + v);
  return static_cast<int>(v);
}

std::string Poly1::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    const Rat& c = coeff(d);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    Rat a = (!first && c < 0) ? Rat(-c) : c;
    first = false;
    if (d == 0 || a != 1) os << rat_str(a);
    if (d > 0) {
      if (a != 1) os << "*";
      os << var;
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

Poly1 lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  // Newton's divided differences, then expand.
  const size_t n = points.size();
  assert(n > 0);
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly1 result(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    Poly1 lin{-points[i].first, Rat(1)};
    result = result * lin + Poly1(dd[i]);
  }
  return result;
}

std::optional<std::pair<Poly1, Poly1>> rational_reconstruct(
    const std::vector<std::pair<Rat, Rat>>& points, int dnum, int dden) {
  if (static_cast<int>(points.size()) < dnum + dden + 1) return std::nullopt;
  // interpolating polynomial and the point modulus
  Poly1 p = lagrange_interpolate(points);
  Poly1 mod(Rat(1));
  for (const auto& [x, y] : points) mod = mod * Poly1{-x, Rat(1)};
  // extended Euclid on (mod, p) until the remainder degree drops to dnum;
  // the cofactor of p is the denominator
  Poly1 r0 = mod, r1 = p;
  Poly1 t0, t1(Rat(1));
  while (!r1.is_zero() && r1.degree() > dnum) {
    Poly1 q, rem;
    Poly1::divmod(r0, r1, q, rem);
    Poly1 tnext = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(tnext);
  }
  if (t1.is_zero() || t1.degree() > dden) return std::nullopt;
  // the candidate must actually match: gcd-freeness and den nonvanishing at
  // the sample points are checked by re-evaluation
  for (const auto& [x, y] : points) {
    Rat dv = t1.eval(x);
    if (dv == 0) return std::nullopt;
    if (r1.eval(x) != y * dv) return std::nullopt;
  }
  return std::make_pair(r1, t1);
}

namespace {

std::vector<Poly1> sturm_sequence(const Poly1& p) {
  std::vector<Poly1> seq;
  seq.push_back(p.primitive_integer());
  Poly1 d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive_integer());
  while (true) {
    Poly1 q, r;
    Poly1::divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back((-r).primitive_integer());
    if (seq.back().is_constant()) break;
  }
  return seq;
}

int sign_variations(const std::vector<Poly1>& seq, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : seq) {
    Rat v = p.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

int sturm_roots_in(const Poly1& p, const Rat& lo, const Rat& hi) {
  // counts roots in (lo, hi]; square-free part first
  Poly1 sf = p;
  Poly1 g = Poly1::gcd(p, p.derivative());
  if (g.degree() > 0) sf = *Poly1::divexact(p, g);
  auto seq = sturm_sequence(sf);
  int roots = sign_variations(seq, lo) - sign_variations(seq, hi);
  if (sf.eval(lo) == 0) roots += 0;  // (lo, hi] convention already excludes lo
  return roots;
}

std::vector<Int> integer_roots_in(const Poly1& p, const Int& lo, const Int& hi) {
  std::vector<Int> out;
  if (p.is_zero() || lo > hi) return out;
  Poly1 sf = p;
  Poly1 g = Poly1::gcd(p, p.derivative());
  if (g.degree() > 0) sf = *Poly1::divexact(p, g);
  auto seq = sturm_sequence(sf);
  // bisect [a, b] segments holding at least one root
  struct Seg {
    Rat a, b;
    int va, vb;
  };
  Rat a(lo - 1), b(hi);
  std::vector<Seg> stack{{a, b, sign_variations(seq, a), sign_variations(seq, b)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    int nroots = s.va - s.vb;
    if (nroots <= 0) continue;
    if (s.b - s.a <= 1) {
      // unit interval (a, b]: only integer candidate is b (a is excluded)
      Int cand = rat_floor(s.b);
      if (Rat(cand) > s.a && Rat(cand) <= s.b && p.eval(Rat(cand)) == 0 && cand >= lo && cand <= hi)
        out.push_back(cand);
      continue;
    }
    Rat mid = (s.a + s.b) / 2;
    mid = Rat(rat_floor(mid));
    int vm = sign_variations(seq, mid);
    stack.push_back({s.a, mid, s.va, vm});
    stack.push_back({mid, s.b, vm, s.vb});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace f4ct
