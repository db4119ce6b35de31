// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/hecke.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace f4ct {

namespace {

inline bool coef_zero(const Rat& c) { return c == 0; }
inline bool coef_zero(const QFunc& c) { return c.is_zero(); }
inline bool coef_zero(const RatFunc2& c) { return c.is_zero(); }
inline bool coef_zero(const LaurentU& c) { return c.is_zero(); }

template <class C>
void add_to(HeckeRow<C>& row, WeylElt e, const C& v) {
  if (coef_zero(v)) return;
  auto it = row.find(e);
  if (it == row.end()) {
    row.emplace(e, v);
  } else {
    it->second = it->second + v;
    if (coef_zero(it->second)) row.erase(it);
  }
}

}  // namespace

template <class C>
void HeckeAlgebra::rmul_factor(HeckeRow<C>& x, int s, const C& ce, const C& cs, const C& qc,
                               const C& qm1c) const {
  HeckeRow<C> out;
  for (const auto& [e, v] : x) {
    if (!coef_zero(ce)) add_to(out, e, static_cast<C>(v * ce));
    if (coef_zero(cs)) continue;
    WeylElt es = w_->right_mul_gen(e, s);
    C vcs = v * cs;
    if (w_->length(es) > w_->length(e)) {
      add_to(out, es, vcs);
    } else {
      add_to(out, e, static_cast<C>(vcs * qm1c));
      add_to(out, es, static_cast<C>(vcs * qc));
    }
  }
  x = std::move(out);
}

template <class C>
HeckeRow<C> HeckeAlgebra::lmul_elt(WeylElt u, const HeckeRow<C>& x, const C& qc,
                                   const C& qm1c) const {
  HeckeRow<C> cur = x;
  const auto& word = w_->word(u);
  // T_u = T_{s1} ... T_{sk}: innermost factor applied first
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int s = *it;
    HeckeRow<C> out;
    for (const auto& [e, v] : cur) {
      WeylElt se = w_->left_mul_gen(s, e);
      if (w_->length(se) > w_->length(e)) {
        add_to(out, se, v);
      } else {
        add_to(out, e, static_cast<C>(v * qm1c));
        add_to(out, se, static_cast<C>(v * qc));
      }
    }
    cur = std::move(out);
  }
  return cur;
}

template <class C>
HeckeRow<C> HeckeAlgebra::mul(const HeckeRow<C>& a, const HeckeRow<C>& b, const C& qc,
                              const C& qm1c) const {
  HeckeRow<C> out;
  for (const auto& [e2, c2] : b) {
    HeckeRow<C> tmp = a;
    for (uint8_t s : w_->word(e2)) {
      // tmp *= T_s
      HeckeRow<C> nxt;
      for (const auto& [e, v] : tmp) {
        WeylElt es = w_->right_mul_gen(e, s);
        if (w_->length(es) > w_->length(e)) {
          add_to(nxt, es, v);
        } else {
          add_to(nxt, e, static_cast<C>(v * qm1c));
          add_to(nxt, es, static_cast<C>(v * qc));
        }
      }
      tmp = std::move(nxt);
    }
    for (const auto& [e, v] : tmp) add_to(out, e, static_cast<C>(v * c2));
  }
  return out;
}

HeckeRow<RatFunc2> HeckeAlgebra::h0_mul(const HeckeRow<RatFunc2>& a,
                                        const HeckeRow<RatFunc2>& b) const {
  return mul(a, b, RatFunc2::q(), RatFunc2::q() - RatFunc2(Rat(1)));
}

template <class C>
HeckeRow<C> HeckeAlgebra::triv_row(const std::vector<int>& theta, const C& one) const {
  HeckeRow<C> out;
  for (WeylElt e : w_->subgroup(theta)) out.emplace(e, one);
  return out;
}

HeckeRow<RatFunc2> HeckeAlgebra::n_simple(int s, const PairingForm& f) const {
  RatFunc2 den = RatFunc2::qpow_tpow_minus_one(f.value + 1, f.slope);
  if (den.is_zero())
    throw std::domain_error("n_simple: pairing identically -1 along the line");
  RatFunc2 ce = (RatFunc2::q() - RatFunc2(Rat(1))) / den;
  RatFunc2 cs = RatFunc2::qpow_tpow_minus_one(f.value, f.slope) / den;
  HeckeRow<RatFunc2> out;
  add_to(out, WeylElt(0), ce);
  add_to(out, w_->gen(s), cs);
  return out;
}

// explicit instantiations for the rings in use
template void HeckeAlgebra::rmul_factor<LaurentU>(HeckeRow<LaurentU>&, int, const LaurentU&,
                                                  const LaurentU&, const LaurentU&,
                                                  const LaurentU&) const;
template HeckeRow<QFunc> HeckeAlgebra::lmul_elt<QFunc>(WeylElt, const HeckeRow<QFunc>&,
                                                       const QFunc&, const QFunc&) const;
template HeckeRow<RatFunc2> HeckeAlgebra::lmul_elt<RatFunc2>(WeylElt, const HeckeRow<RatFunc2>&,
                                                             const RatFunc2&,
                                                             const RatFunc2&) const;
template HeckeRow<QFunc> HeckeAlgebra::mul<QFunc>(const HeckeRow<QFunc>&, const HeckeRow<QFunc>&,
                                                  const QFunc&, const QFunc&) const;
template HeckeRow<RatFunc2> HeckeAlgebra::triv_row<RatFunc2>(const std::vector<int>&,
                                                             const RatFunc2&) const;
template HeckeRow<LaurentU> HeckeAlgebra::triv_row<LaurentU>(const std::vector<int>&,
                                                             const LaurentU&) const;
template HeckeRow<QFunc> HeckeAlgebra::triv_row<QFunc>(const std::vector<int>&,
                                                       const QFunc&) const;

int HeckeOpSeries::valuation() const {
  int v = order;
  for (const auto& [e, s] : row)
    if (!s.is_zero()) v = std::min(v, s.valuation());
  return v;
}

HeckeRow<QFunc> HeckeOpSeries::coeff(int k) const {
  HeckeRow<QFunc> out;
  QFunc sinv = QFunc(Poly1(Rat(1)), scale);
  for (const auto& [e, s] : row) {
    QFunc c = s.coeff(k);
    if (c.is_zero()) continue;
    out.emplace(e, c * sinv);
  }
  return out;
}

HeckeRow<QFunc> HeckeOpSeries::coeff_scaled(int k) const {
  HeckeRow<QFunc> out;
  for (const auto& [e, s] : row) {
    QFunc c = s.coeff(k);
    if (!c.is_zero()) out.emplace(e, std::move(c));
  }
  return out;
}

IntertwinerContext::IntertwinerContext(const WeylGroup& w, int parabolic, const Rat& z0)
    : w_(&w), h_(w), parabolic_(parabolic), z0_(z0) {
  if (parabolic < 1 || parabolic > w.rank())
    throw std::invalid_argument("parabolic index out of range");
  levi_ = w.roots().levi_generators(parabolic);
  reps_ = w.min_coset_reps(levi_);
  AffineWeight chi = inducing_character(w.roots(), parabolic);
  line_.base = chi.at(z0);
  line_.slope = chi.slope;
}

PairingForm IntertwinerContext::pairing_form(const WeightLine& line, int root_index) const {
  const auto& rs = w_->roots();
  Rat a = rs.pairing(line.slope, root_index);
  Rat b = rs.pairing(line.base, root_index);
  if (!is_integer(a) || !is_integer(b))
    throw std::runtime_error("pairing form not integral at z0: " + rat_str(a) + "z+" + rat_str(b));
  return PairingForm{a.get_num().get_si(), b.get_num().get_si()};
}

namespace {

// Denominator-cleared data of a single n-factor along the line: with
// m = max(0, -b0) the factor reads
//   ( (q-1) q^m T_e + (q^(b0+m) t^a - q^m) T_s ) / (q^(b0+1+m) t^a - q^m),
// and each piece expands in u = t - 1 with polynomial coefficients.
struct ClearedFactor {
  LaurentU ne, ns, den;
};

ClearedFactor cleared_factor(const PairingForm& f, int prec) {
  long m = std::max(0L, -f.value);
  ClearedFactor out;
  Poly2 ne = Poly2::term(static_cast<int>(m), 0) * (Poly2::q() - Poly2(Rat(1)));
  Poly2 ns = Poly2::term(static_cast<int>(f.value + m), static_cast<int>(f.slope)) -
             Poly2::term(static_cast<int>(m), 0);
  Poly2 dd = Poly2::term(static_cast<int>(f.value + 1 + m), static_cast<int>(f.slope)) -
             Poly2::term(static_cast<int>(m), 0);
  if (dd.is_zero()) throw std::domain_error("intertwiner: pairing identically -1 on the line");
  out.ne = poly2_in_u(ne, prec);
  out.ns = ns.is_zero() ? LaurentU::zero(prec) : poly2_in_u(ns, prec);
  out.den = poly2_in_u(dd, prec);
  return out;
}

}  // namespace

HeckeOpSeries IntertwinerContext::series_on_line(const WeightLine& line,
                                                 const std::vector<int>& word_1based,
                                                 int order) const {
  // pairing forms along the cocycle, innermost letter first
  const auto& rs = w_->roots();
  std::vector<PairingForm> forms;
  {
    Weight base = line.base, slope = line.slope;
    for (auto it = word_1based.rbegin(); it != word_1based.rend(); ++it) {
      int s = *it - 1;
      Rat a = slope[s], b = base[s];
      if (!is_integer(b))
        throw std::runtime_error("series_on_line: pairing value not integral at z0");
      if (!is_integer(a)) throw std::runtime_error("series_on_line: pairing slope not integral");
      forms.push_back(PairingForm{a.get_num().get_si(), b.get_num().get_si()});
      base = rs.reflect_weight(s, base);
      slope = rs.reflect_weight(s, slope);
    }
  }
  int poles = 0;
  for (const auto& f : forms)
    if (f.value + 1 == 0 && f.slope != 0) ++poles;

  for (int guard = order + poles + 2;; guard += 4) {
    LaurentU one = LaurentU::constant(QFunc(Rat(1)), guard);
    LaurentU qc = LaurentU::constant(QFunc::q(), guard);
    LaurentU qm1c = LaurentU::constant(QFunc::q() - QFunc(Rat(1)), guard);
    // polynomial-coefficient fold; the factor denominators are divided out
    // once at the end
    HeckeRow<LaurentU> row = h_.triv_row(levi_, one);
    LaurentU dall = one;
    for (size_t j = 0; j < forms.size(); ++j) {
      ClearedFactor f = cleared_factor(forms[j], guard);
      h_.rmul_factor(row, word_1based[word_1based.size() - 1 - j] - 1, f.ne, f.ns, qc, qm1c);
      dall = dall * f.den;
    }
    // the quotient only needs `order` coefficients past each valuation, so
    // the inverse series can be cut down before the per-entry products;
    // clearing its denominators keeps the fold entirely polynomial, with the
    // cleared factor carried on the result as `scale`
    LaurentU dinv = dall.inverse();
    dinv = dinv.truncated(dinv.valuation() + order + 1);
    Poly1 scale(Rat(1));
    for (int k = dinv.valuation(); k < dinv.precision(); ++k) {
      Poly1 d = dinv.coeff(k).den();
      if (d.is_constant()) continue;
      Poly1 g = Poly1::gcd(scale, d);
      scale = scale * (g.degree() > 0 ? *Poly1::divexact(d, g) : d);
    }
    {
      std::vector<QFunc> cleared;
      for (int k = dinv.valuation(); k < dinv.precision(); ++k) {
        QFunc c = dinv.coeff(k) * QFunc(scale);
        if (!c.den().is_constant())
          throw std::logic_error("series_on_line: inverse clearing failed");
        cleared.push_back(std::move(c));
      }
      dinv = LaurentU(dinv.valuation(), std::move(cleared), dinv.precision());
    }
    int minprec = guard, val = order;
    for (auto& [e, s] : row) {
      s = s * dinv;
      minprec = std::min(minprec, s.precision());
      if (!s.is_zero()) val = std::min(val, s.valuation());
    }
    if (minprec >= val + order) {
      HeckeOpSeries out;
      for (int c : word_1based) out.word.push_back(static_cast<uint8_t>(c - 1));
      out.order = order;
      out.scale = scale;
      for (auto& [e, s] : row) out.row.emplace(e, s.truncated(val + order));
      return out;
    }
    if (guard > order + poles + 40)
      throw std::runtime_error("series_on_line: precision did not stabilize");
  }
}

HeckeOpSeries IntertwinerContext::intertwiner_series(WeylElt w, int order) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = series_cache_.find(w);
    if (it != series_cache_.end() && it->second.order >= order) return it->second;
  }
  std::vector<int> word;
  for (uint8_t c : w_->word(w)) word.push_back(c + 1);
  HeckeOpSeries s = series_on_line(line_, word, order);
  if (s.valuation() < 0)
    throw std::runtime_error("operator not holomorphic: " + w_->word_str(w));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = series_cache_.find(w);
  if (it == series_cache_.end() || it->second.order < order) series_cache_[w] = s;
  return s;
}

QMat IntertwinerContext::module_matrix(const HeckeRow<QFunc>& row) const {
  const int n = w_->size();
  QMat out(reps_.size(), std::vector<QFunc>(n));
  QFunc qc = QFunc::q(), qm1c = qc - QFunc(Rat(1));
  // the common denominator scales every matrix row equally, so ranks, row
  // spaces and kernels are unchanged when the fold runs on the cleared row
  Poly1 lcm(Rat(1));
  for (const auto& [e, v] : row) {
    if (v.den().is_constant()) continue;
    Poly1 g = Poly1::gcd(lcm, v.den());
    lcm = lcm * (g.degree() > 0 ? *Poly1::divexact(v.den(), g) : v.den());
  }
  HeckeRow<QFunc> cleared;
  for (const auto& [e, v] : row) {
    if (v.is_zero()) continue;
    cleared.emplace(e, QFunc(v.num() * *Poly1::divexact(lcm, v.den())));
  }
  for (size_t i = 0; i < reps_.size(); ++i) {
    HeckeRow<QFunc> r = h_.lmul_elt(reps_[i], cleared, qc, qm1c);
    auto& dst = out[i];
    for (auto& [e, v] : r) dst[e] = std::move(v);
  }
  return out;
}

RankResult IntertwinerContext::image_rank(WeylElt w) const {
  HeckeOpSeries s = intertwiner_series(w, 1);
  // true coefficients: the reduced entries stay small, which keeps the
  // certificate polynomials small
  HeckeRow<QFunc> row0 = s.coeff(0);
  QMat m = module_matrix(row0);
  return certified_rank(m);
}

RankResult IntertwinerContext::combination_image_rank(
    const std::vector<Rat>& coeffs, const std::vector<std::vector<int>>& words_1based) const {
  assert(coeffs.size() == words_1based.size());
  HeckeRow<QFunc> combined;
  for (size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    HeckeOpSeries s = series_on_line(line_, words_1based[j], 1);
    if (s.valuation() < 0) throw std::runtime_error("combination: operator not holomorphic");
    for (auto& [e, v] : s.coeff(0)) add_to(combined, e, static_cast<QFunc>(v * QFunc(coeffs[j])));
  }
  QMat m = module_matrix(combined);
  return certified_rank(m);
}

std::vector<int> IntertwinerContext::kernel_chain(
    const std::vector<std::vector<int>>& words_1based) const {
  std::vector<int> dims;
  for (const auto& word : words_1based) {
    WeylElt w = w_->from_word_1based(word);
    RankResult rr = image_rank(w);
    dims.push_back(static_cast<int>(reps_.size()) - rr.rank);
  }
  return dims;
}

std::vector<std::vector<QFunc>> IntertwinerContext::kernel_basis(WeylElt w) const {
  HeckeOpSeries s = intertwiner_series(w, 1);
  QMat m = module_matrix(s.coeff(0));
  RankResult rr = certified_rank(m);
  return left_kernel_from_cert(rr.cert, static_cast<int>(m.size()));
}

bool IntertwinerContext::image_space_equal(WeylElt w1, WeylElt w2) const {
  QMat m1 = module_matrix(intertwiner_series(w1, 1).coeff(0));
  QMat m2 = module_matrix(intertwiner_series(w2, 1).coeff(0));
  for (long q0 : {2L, 3L, 5L}) {
    QMat stacked = m1;
    stacked.insert(stacked.end(), m2.begin(), m2.end());
    int r1 = rank_at(m1, Rat(q0)), r2 = rank_at(m2, Rat(q0)), rs = rank_at(stacked, Rat(q0));
    if (!(r1 == r2 && r2 == rs)) return false;
  }
  RankResult c1 = certified_rank(m1), c2 = certified_rank(m2);
  QMat stacked = m1;
  stacked.insert(stacked.end(), m2.begin(), m2.end());
  RankResult cs = certified_rank(stacked);
  return c1.rank == c2.rank && c2.rank == cs.rank;
}

namespace {

// rational roots of a small polynomial over Q (candidates p/q with p | a0,
// q | lead after clearing to integer coefficients)
std::vector<Rat> rational_roots(const Poly1& p) {
  std::vector<Rat> out;
  if (p.is_zero() || p.is_constant()) return out;
  Poly1 pi = p.primitive_integer();
  pi.strip_x_power();
  if (pi.is_constant()) {
    out.push_back(Rat(0));
    return out;
  }
  if (p.coeff(0) == 0) out.push_back(Rat(0));
  Int a0 = abs(pi.coeff(0).get_num());
  Int an = abs(pi.leading().get_num());
  auto divisors = [](const Int& n) {
    std::vector<Int> ds;
    for (Int d(1); d * d <= n; ++d)
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    return ds;
  };
  if (a0 > 100000 || an > 100000) return out;  // fallback candidates only
  for (const Int& pnum : divisors(a0))
    for (const Int& pden : divisors(an))
      for (int sign : {1, -1}) {
        Rat cand(pnum * sign, pden);
        cand.canonicalize();
        if (pi.eval(cand) == 0 &&
            std::find(out.begin(), out.end(), cand) == out.end())
          out.push_back(cand);
      }
  return out;
}

}  // namespace

Rat IntertwinerContext::stabilizer_scalar(WeylElt u_short, WeylElt u_long, int target_rank) const {
  HeckeRow<QFunc> ru = intertwiner_series(u_short, 1).coeff(0);
  HeckeRow<QFunc> rv = intertwiner_series(u_long, 1).coeff(0);
  auto combined_rank_at2 = [&](const Rat& a) {
    HeckeRow<QFunc> c;
    for (const auto& [e, v] : ru) add_to(c, e, static_cast<QFunc>(v * QFunc(a)));
    for (const auto& [e, v] : rv) add_to(c, e, static_cast<QFunc>(-v));
    QMat m = module_matrix(c);
    return rank_at(m, Rat(2));
  };
  auto certify = [&](const Rat& a) {
    HeckeRow<QFunc> c;
    for (const auto& [e, v] : ru) add_to(c, e, static_cast<QFunc>(v * QFunc(a)));
    for (const auto& [e, v] : rv) add_to(c, e, static_cast<QFunc>(-v));
    QMat m = module_matrix(c);
    RankResult rr = certified_rank(m);
    return rr.rank == 0 || rr.rank == target_rank;
  };
  std::vector<Rat> candidates = {rat(1), rat(-1), rat(2),      rat(-2),     rat(3),
                                 rat(-3), rat(1, 2), rat(-1, 2), rat(1, 3), rat(-1, 3)};
  for (const Rat& a : candidates)
    if (combined_rank_at2(a) <= target_rank && certify(a)) return a;

  // fallback: a as a free variable at q = 2; rank can only drop at roots of
  // the pivot numerators of the echelon form over Q(a)
  QMat mu = module_matrix(ru), mv = module_matrix(rv);
  const int rows = static_cast<int>(mu.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(mu[0].size());
  QMat lin(rows, std::vector<QFunc>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      Rat x = mu[i][j].is_zero() ? Rat(0) : mu[i][j].eval(Rat(2));
      Rat y = mv[i][j].is_zero() ? Rat(0) : mv[i][j].eval(Rat(2));
      if (x == 0 && y == 0) continue;
      lin[i][j] = QFunc(Poly1{-y, x});  // a*x - y as a polynomial in a
    }
  // echelon over Q(a), collecting pivot numerators
  std::vector<Rat> roots;
  {
    QMat a = lin;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
      int piv = -1;
      for (int r = rank; r < rows; ++r)
        if (!a[r][c].is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[piv], a[rank]);
      for (const Rat& rt : rational_roots(a[rank][c].num()))
        if (std::find(roots.begin(), roots.end(), rt) == roots.end()) roots.push_back(rt);
      QFunc inv = QFunc(Rat(1)) / a[rank][c];
      for (int r = rank + 1; r < rows; ++r) {
        if (a[r][c].is_zero()) continue;
        QFunc f = a[r][c] * inv;
        for (int j = c; j < cols; ++j)
          if (!a[rank][j].is_zero()) a[r][j] -= f * a[rank][j];
      }
      ++rank;
    }
  }
  for (const Rat& a : roots)
    if (certify(a)) return a;
  throw std::runtime_error("stabilizer_scalar: not scalar on complement");
}

bool IntertwinerContext::derivative_identity_check(
    const std::vector<std::vector<int>>& words_1based, const std::vector<Rat>& coeffs,
    const std::vector<std::vector<QFunc>>& kernel_vectors) const {
  assert(words_1based.size() == coeffs.size());
  std::vector<HeckeOpSeries> series;
  Poly1 lcm(Rat(1));
  for (const auto& word : words_1based) {
    series.push_back(series_on_line(line_, word, 2));
    if (series.back().valuation() < 0)
      throw std::runtime_error("derivative check: operator not holomorphic");
    Poly1 g = Poly1::gcd(lcm, series.back().scale);
    lcm = lcm * (g.degree() > 0 ? *Poly1::divexact(series.back().scale, g)
                                : series.back().scale);
  }
  HeckeRow<QFunc> combined;
  for (size_t j = 0; j < words_1based.size(); ++j) {
    if (coeffs[j] == 0) continue;
    QFunc factor = QFunc(coeffs[j]) * QFunc(*Poly1::divexact(lcm, series[j].scale));
    for (auto& [e, v] : series[j].coeff_scaled(1))
      add_to(combined, e, static_cast<QFunc>(v * factor));
  }
  if (combined.empty()) return true;
  // lift by each coset representative once
  QFunc qc = QFunc::q(), qm1c = qc - QFunc(Rat(1));
  std::vector<HeckeRow<QFunc>> lifted(reps_.size());
  for (size_t i = 0; i < reps_.size(); ++i) lifted[i] = h_.lmul_elt(reps_[i], combined, qc, qm1c);
  for (const auto& v : kernel_vectors) {
    assert(v.size() == reps_.size());
    HeckeRow<QFunc> acc;
    for (size_t i = 0; i < reps_.size(); ++i) {
      if (v[i].is_zero()) continue;
      for (const auto& [e, c] : lifted[i]) add_to(acc, e, static_cast<QFunc>(c * v[i]));
    }
    if (!acc.empty()) return false;
  }
  return true;
}

namespace {

constexpr uint64_t kP = 2147483629ULL;  // prime below 2^31

uint64_t modpow(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (__uint128_t)r * b % p;
    b = (__uint128_t)b * b % p;
    e >>= 1;
  }
  return r;
}

uint64_t rat_mod(const Rat& x, uint64_t p) {
  Int num = x.get_num() % Int(static_cast<unsigned long>(p));
  Int den = x.get_den() % Int(static_cast<unsigned long>(p));
  uint64_t n = mpz_get_ui(num.get_mpz_t());
  if (x.get_num() < 0 && n) n = p - n;
  uint64_t d = mpz_get_ui(den.get_mpz_t());
  if (d == 0) throw std::runtime_error("modular image undefined");
  return (__uint128_t)n * modpow(d, p - 2, p) % p;
}

int rank_mod_p(std::vector<std::vector<uint64_t>>& m, uint64_t p) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    uint64_t inv = modpow(m[rank][c], p - 2, p);
    for (int r = rank + 1; r < rows; ++r) {
      if (!m[r][c]) continue;
      uint64_t f = (__uint128_t)m[r][c] * inv % p;
      for (int j = c; j < cols; ++j)
        if (m[rank][j]) m[r][j] = (m[r][j] + p - (__uint128_t)f * m[rank][j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

ZamperaResult zampera_split(const WeylGroup& wg, int alpha_1based, const std::vector<int>& w_word,
                            const Weight& chi, const Weight& slope) {
  const auto& rs = wg.roots();
  const int a = alpha_1based - 1;
  ZamperaResult out;
  // preconditions, named individually
  if (!(chi[a] == 1)) throw std::runtime_error("zampera: <chi, alpha^vee> != 1");
  Weight sachi = rs.reflect_weight(a, chi);
  // w must lie in the subgroup generated by simple reflections fixing s_a chi
  std::vector<int> zero_gens;
  for (int j = 0; j < wg.rank(); ++j)
    if (sachi[j] == 0) zero_gens.push_back(j);
  WeylElt w = wg.from_word_1based(w_word);
  {
    auto sub = wg.subgroup(zero_gens);
    if (std::find(sub.begin(), sub.end(), w) == sub.end())
      throw std::runtime_error("zampera: w not in W(s_alpha chi)");
  }
  std::vector<int> u_word;
  u_word.push_back(alpha_1based);
  for (int c : w_word) u_word.push_back(c);
  u_word.push_back(alpha_1based);
  WeylElt u = wg.from_word_1based(u_word);
  if (wg.length(u) != wg.length(w) + 2)
    throw std::runtime_error("zampera: l(s_a w s_a) != l(w) + 2");
  // slope pairings
  Rat ma = slope[a];
  // <m, s_a w^{-1}(alpha^vee)> = <(w s_a)(m), alpha^vee>
  Weight m_im = wg.act(wg.mul(w, wg.gen(a)), slope);
  Rat mb = m_im[a];
  if (ma == 0) throw std::runtime_error("zampera: <m, alpha^vee> = 0");
  if (mb == 0) throw std::runtime_error("zampera: <m, s_a w^{-1} alpha^vee> = 0");
  out.a1 = ma / mb;

  // series of n_u along the line, starting from T_e (full H_0 module)
  HeckeAlgebra h(wg);
  WeightLine line{chi, slope};
  // fold factors exactly as in series_on_line but with T_e start
  std::vector<PairingForm> forms;
  {
    Weight base = line.base, sl = line.slope;
    for (auto it = u_word.rbegin(); it != u_word.rend(); ++it) {
      int s = *it - 1;
      if (!is_integer(base[s]) || !is_integer(sl[s]))
        throw std::runtime_error("zampera: pairing not integral along the line");
      forms.push_back(PairingForm{sl[s].get_num().get_si(), base[s].get_num().get_si()});
      base = rs.reflect_weight(s, base);
      sl = rs.reflect_weight(s, sl);
    }
  }
  int poles = 0;
  for (const auto& f : forms)
    if (f.value + 1 == 0 && f.slope != 0) ++poles;
  int guard = 2 + poles + 2;
  LaurentU qc = LaurentU::constant(QFunc::q(), guard);
  LaurentU qm1c = LaurentU::constant(QFunc::q() - QFunc(Rat(1)), guard);
  HeckeRow<LaurentU> row;
  row.emplace(WeylElt(0), LaurentU::constant(QFunc(Rat(1)), guard));
  LaurentU dall = LaurentU::constant(QFunc(Rat(1)), guard);
  for (size_t j = 0; j < forms.size(); ++j) {
    ClearedFactor f = cleared_factor(forms[j], guard);
    h.rmul_factor(row, u_word[u_word.size() - 1 - j] - 1, f.ne, f.ns, qc, qm1c);
    dall = dall * f.den;
  }
  LaurentU dinv = dall.inverse();
  dinv = dinv.truncated(dinv.valuation() + 2);
  Poly1 scale(Rat(1));
  for (int k = dinv.valuation(); k < dinv.precision(); ++k) {
    Poly1 d = dinv.coeff(k).den();
    if (d.is_constant()) continue;
    Poly1 g = Poly1::gcd(scale, d);
    scale = scale * (g.degree() > 0 ? *Poly1::divexact(d, g) : d);
  }
  {
    std::vector<QFunc> cleared;
    for (int k = dinv.valuation(); k < dinv.precision(); ++k)
      cleared.push_back(dinv.coeff(k) * QFunc(scale));
    dinv = LaurentU(dinv.valuation(), std::move(cleared), dinv.precision());
  }
  int val = 0;
  for (auto& [e, s] : row) {
    s = s * dinv;
    if (!s.is_zero()) val = std::min(val, s.valuation());
  }
  if (val < 0) throw std::runtime_error("zampera: restriction not holomorphic on the line");
  // scaled element: the true operator element is e0 / scale
  HeckeRow<QFunc> e0;
  for (const auto& [e, s] : row) {
    QFunc c = s.coeff(0);
    if (!c.is_zero()) e0.emplace(e, std::move(c));
  }

  // minimal polynomial on the cleared element:
  // (e0/s)^2 = (1-a1)(e0/s) + a1  <=>  e0^2 = (1-a1) s e0 + a1 s^2 T_e
  QFunc qcf = QFunc::q(), qm1f = qcf - QFunc(Rat(1));
  HeckeRow<QFunc> sq = h.mul(e0, e0, qcf, qm1f);
  HeckeRow<QFunc> rhs;
  QFunc sfac = QFunc(scale) * QFunc(Rat(1) - out.a1);
  for (const auto& [e, c] : e0) add_to(rhs, e, static_cast<QFunc>(c * sfac));
  add_to(rhs, WeylElt(0), static_cast<QFunc>(QFunc(scale) * QFunc(scale) * QFunc(out.a1)));
  out.minpoly_ok = (sq == rhs);

  // eigenspace dimensions: rank(E - 1) + rank(E + a1) must total |W|, which
  // certifies both mod-p ranks exactly
  const int n = wg.size();
  Rat scale2 = scale.eval(Rat(2));
  auto build = [&](const Rat& shift) {
    HeckeRow<QFunc> elt;
    for (const auto& [e, c] : e0) elt.emplace(e, QFunc(c.eval(Rat(2)) / scale2));
    add_to(elt, WeylElt(0), QFunc(shift));
    std::vector<uint64_t> base(n, 0);
    for (const auto& [e, c] : elt) {
      if (c.is_zero()) continue;
      base[e] = rat_mod(c.eval(Rat(2)), kP);
    }
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
    for (int x = 0; x < n; ++x) {
      // T_x * elt mod p
      std::vector<uint64_t> cur = base;
      const auto& word = wg.word(static_cast<WeylElt>(x));
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int s = *it;
        std::vector<uint64_t> nxt(n, 0);
        for (int e = 0; e < n; ++e) {
          if (!cur[e]) continue;
          WeylElt se = wg.left_mul_gen(s, static_cast<WeylElt>(e));
          if (wg.length(se) > wg.length(static_cast<WeylElt>(e))) {
            nxt[se] = (nxt[se] + cur[e]) % kP;
          } else {
            nxt[e] = (nxt[e] + cur[e] * 1 % kP) % kP;  // (q-1) = 1 at q = 2
            nxt[se] = (nxt[se] + cur[e] * 2 % kP) % kP;
          }
        }
        cur = std::move(nxt);
      }
      m[x] = std::move(cur);
    }
    return rank_mod_p(m, kP);
  };
  int r_minus = build(Rat(-1));    // rank(E - Id) = dim V_{-a1}
  int r_plus = build(out.a1);      // rank(E + a1 Id) = dim V_1
  out.eigen_dims = {r_plus, r_minus};
  out.eigen_dims_certified = out.minpoly_ok && (r_plus + r_minus == n);
  return out;
}

}  // namespace f4ct
