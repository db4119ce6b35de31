// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/ratfunc2.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace f4ct {

RatFunc2::RatFunc2(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc2: zero denominator");
  reduce();
}

RatFunc2 RatFunc2::qpow_tpow_minus_one(long b, long a) {
  if (b >= 0) {
    Poly2 n = Poly2::term(static_cast<int>(b), static_cast<int>(a)) - Poly2(Rat(1));
    return RatFunc2(n);
  }
  Poly2 n = Poly2::term(0, static_cast<int>(a)) - Poly2::term(static_cast<int>(-b), 0);
  return RatFunc2(n, Poly2::term(static_cast<int>(-b), 0));
}

bool RatFunc2::is_one() const {
  return num_ == den_;
}

Rat RatFunc2::eval(const Rat& qv, const Rat& tv) const {
  Rat d = den_.eval(qv, tv);
  if (d == 0) throw std::domain_error("RatFunc2::eval: denominator vanishes");
  return num_.eval(qv, tv) / d;
}

RatFunc2 RatFunc2::operator-() const {
  RatFunc2 r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc2& RatFunc2::operator+=(const RatFunc2& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc2& RatFunc2::operator-=(const RatFunc2& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc2& RatFunc2::operator*=(const RatFunc2& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc2& RatFunc2::operator/=(const RatFunc2& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc2: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

namespace {

// Collect candidate binomial-type factors q^dq t^dt - c from a product-like
// polynomial: any two-term polynomial is its own candidate; otherwise probe
// the catalog of low-complexity binomials dividing it.
std::vector<Poly2> binomial_candidates(const Poly2& p) {
  std::vector<Poly2> out;
  if (p.size() == 2) {
    int dq, dt;
    Poly2 rest;
    p.extract_monomial(dq, dt, rest);
    out.push_back(std::move(rest));
    return out;
  }
  int mq = p.max_q_deg();
  int lo_t = p.min_t_deg(), hi_t = p.max_t_deg();
  for (int dq = 0; dq <= mq; ++dq)
    for (int dt = (lo_t < 0 ? lo_t : 0); dt <= (hi_t > 0 ? hi_t : 0); ++dt) {
      if (dq == 0 && dt == 0) continue;
      for (int sign : {1, -1}) {
        Poly2 cand = Poly2::term(dq, std::max(dt, 0)) +
                     Poly2::term(0, std::max(-dt, 0), Rat(sign));
        out.push_back(cand);
      }
    }
  return out;
}

}  // namespace

void RatFunc2::reduce() {
  if (num_.is_zero()) {
    den_ = Poly2(Rat(1));
    return;
  }
  // common monomial
  int nq, nt, dq, dt;
  Poly2 rn, rd;
  num_.extract_monomial(nq, nt, rn);
  den_.extract_monomial(dq, dt, rd);
  int cq = std::min(nq, dq);
  num_ = rn.shifted(nq - cq, 0);
  den_ = rd.shifted(dq - cq, 0);
  // t-valuation cancels fully: both sides now start at t^0 times...
  // keep the net t-shift on the numerator (Laurent allowed there)
  num_ = num_.shifted(0, nt - dt);

  if (num_.t_free() && den_.t_free()) {
    Poly1 a = num_.as_q_poly(), b = den_.as_q_poly();
    Poly1 g = Poly1::gcd(a, b);
    if (g.degree() > 0) {
      a = *Poly1::divexact(a, g);
      b = *Poly1::divexact(b, g);
    }
    num_ = Poly2::from_q(a);
    den_ = Poly2::from_q(b);
  } else if (!den_.is_constant()) {
    // cancel shared binomial factors (and the full denominator if possible)
    bool progress = true;
    while (progress && !den_.is_constant()) {
      progress = false;
      if (auto q = Poly2::divexact(num_, den_)) {
        num_ = *q;
        den_ = Poly2(Rat(1));
        break;
      }
      for (const auto& cand : binomial_candidates(den_)) {
        if (cand.is_constant()) continue;
        auto qd = Poly2::divexact(den_, cand);
        if (!qd) continue;
        auto qn = Poly2::divexact(num_, cand);
        if (!qn) continue;
        num_ = *qn;
        den_ = *qd;
        progress = true;
        break;
      }
    }
  }

  // rational content: make denominator's lex-leading coefficient +1 after
  // clearing integer content
  Rat lead = den_.lex_leading_coeff();
  if (lead != 1) {
    Rat inv = Rat(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

std::string RatFunc2::str() const {
  if (den_.is_constant() && !den_.is_zero() && den_.terms().begin()->second == 1)
    return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace f4ct
