// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#include "f4ct/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <stdexcept>
#include <chrono>
#include <cstdlib>
#include <cstdio>

namespace f4ct {

PrimePowerCheck prime_power_nonvanishing(const Poly1& p) {
  if (p.is_zero()) throw std::invalid_argument("prime_power_nonvanishing: zero polynomial");
  PrimePowerCheck out;
  Poly1 p1 = p.primitive_integer();
  p1.strip_x_power();
  if (p1.is_constant()) {
    out.nonvanishing = true;
    return out;
  }
  assert(p1.coeff(0) != 0);
  // Cauchy bound on real roots
  Int lead = abs(p1.leading().get_num());
  Int maxabs(0);
  for (int d = 0; d < p1.degree(); ++d) {
    Int a = abs(p1.coeff(d).get_num());
    if (a > maxabs) maxabs = a;
  }
  Int bound = 1 + (maxabs + lead - 1) / lead;
  if (bound < 2) {
    out.nonvanishing = true;
    return out;
  }
  out.checked_roots = integer_roots_in(p1, Int(2), bound);
  for (const Int& s : out.checked_roots) {
    // every integer root divides the constant term
    assert(p1.coeff(0).get_num() % s == 0);
    if (is_prime_power(s)) {
      out.witness = s;
      out.nonvanishing = false;
      return out;
    }
  }
  out.nonvanishing = true;
  return out;
}

Poly1 det_interpolate(const std::vector<std::vector<Poly1>>& a, int degree_bound) {
  const int n = static_cast<int>(a.size());
  for (const auto& row : a) assert(static_cast<int>(row.size()) == n);
  if (n == 0) return Poly1(Rat(1));
  const long npoints = static_cast<long>(n) * degree_bound + 1;
  const long start = std::max(2, degree_bound + 2);
  std::vector<std::pair<Rat, Rat>> points;
  points.reserve(npoints);
  for (long k = 0; k < npoints; ++k) {
    Rat x(start + k);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = a[i][j].eval(x);
    Rat det(1);
    bool zero = false;
    for (int c = 0; c < n && !zero; ++c) {
      int piv = -1;
      for (int r = c; r < n; ++r)
        if (m[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        zero = true;
        break;
      }
      if (piv != c) {
        std::swap(m[piv], m[c]);
        det = -det;
      }
      det *= m[c][c];
      Rat inv = Rat(1) / m[c][c];
      for (int r = c + 1; r < n; ++r) {
        if (m[r][c] == 0) continue;
        Rat f = m[r][c] * inv;
        for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
      }
    }
    points.emplace_back(x, zero ? Rat(0) : det);
  }
  return lagrange_interpolate(points);
}

namespace {

// dense integer polynomials for the cleared residual sweeps
using IntPoly = std::vector<Int>;

// acc += a * b
void intpoly_addmul(IntPoly& acc, const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

// acc -= a * b
void intpoly_submul(IntPoly& acc, const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return;
  if (acc.size() < a.size() + b.size() - 1) acc.resize(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_submul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
}

constexpr uint64_t kProfilePrime = 2305843009213693951ULL;  // 2^61 - 1

uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return (__uint128_t)a * b % p; }
uint64_t powm(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulm(r, b, p);
    b = mulm(b, b, p);
    e >>= 1;
  }
  return r;
}

uint64_t int_mod(const Int& x, uint64_t p) {
  Int m = x % Int(static_cast<unsigned long>(p));
  uint64_t v = mpz_get_ui(m.get_mpz_t());
  if (x < 0 && v) v = p - v;
  return v;
}

// poly1 evaluated at q0 modulo p (Horner over machine words)
uint64_t poly_eval_mod(const Poly1& f, uint64_t q0, uint64_t p, bool& ok) {
  uint64_t acc = 0;
  for (int d = f.degree(); d >= 0; --d) {
    const Rat& c = f.coeff(d);
    uint64_t num = int_mod(c.get_num(), p);
    uint64_t den = int_mod(c.get_den(), p);
    if (den == 0) {
      ok = false;
      return 0;
    }
    uint64_t cv = mulm(num, powm(den, p - 2, p), p);
    acc = addm(mulm(acc, q0, p), cv, p);
  }
  return acc;
}

// Scaled working form of the input: per-row common denominator cleared so
// every retained entry is a polynomial; columns compacted to the union
// support.
struct ScaledMatrix {
  int m = 0, ncols = 0;                  // logical input shape
  std::vector<int> cols;                 // compacted -> original column ids
  std::vector<std::vector<Poly1>> rows;  // m x cols.size() polynomial entries
  std::vector<Poly1> scale;              // row i was multiplied by scale[i]
};

ScaledMatrix scale_and_compact(int nrows, int ncols, const RowSource& row) {
  ScaledMatrix out;
  out.m = nrows;
  out.ncols = ncols;
  std::vector<char> used(ncols, 0);
  std::vector<std::vector<QFunc>> cache(nrows);
  for (int i = 0; i < nrows; ++i) {
    cache[i] = row(i);
    for (int j = 0; j < ncols; ++j)
      if (!cache[i][j].is_zero()) used[j] = 1;
  }
  for (int j = 0; j < ncols; ++j)
    if (used[j]) out.cols.push_back(j);
  out.rows.assign(nrows, {});
  out.scale.assign(nrows, Poly1(Rat(1)));
  for (int i = 0; i < nrows; ++i) {
    // least common multiple of the entry denominators
    Poly1 lcm(Rat(1));
    for (const auto& e : cache[i]) {
      if (e.is_zero() || e.den().is_constant()) continue;
      Poly1 g = Poly1::gcd(lcm, e.den());
      lcm = lcm * (g.degree() > 0 ? *Poly1::divexact(e.den(), g) : e.den());
    }
    out.scale[i] = lcm;
    out.rows[i].resize(out.cols.size());
    for (size_t k = 0; k < out.cols.size(); ++k) {
      const QFunc& e = cache[i][out.cols[k]];
      if (e.is_zero()) continue;
      Poly1 cof = *Poly1::divexact(lcm, e.den());
      out.rows[i][k] = e.num() * cof;
    }
  }
  return out;
}

struct NumericProfile {
  int rank = 0;
  std::vector<int> pivot_rows, pivot_cols;  // pivot_cols are compacted ids
};

// echelon profile of the scaled matrix at q = q0 modulo a large prime;
// ok=false when a modular image is undefined (then use the exact fallback)
NumericProfile profile_mod(const ScaledMatrix& sm, uint64_t q0, bool& ok) {
  NumericProfile out;
  ok = true;
  const int n = static_cast<int>(sm.cols.size());
  std::vector<std::vector<uint64_t>> basis;
  std::vector<int> basis_col;
  for (int i = 0; i < sm.m && ok; ++i) {
    std::vector<uint64_t> v(n);
    for (int j = 0; j < n; ++j) {
      v[j] = sm.rows[i][j].is_zero() ? 0 : poly_eval_mod(sm.rows[i][j], q0, kProfilePrime, ok);
      if (!ok) return out;
    }
    for (size_t b = 0; b < basis.size(); ++b) {
      uint64_t c = v[basis_col[b]];
      if (!c) continue;
      for (int j = 0; j < n; ++j)
        if (basis[b][j])
          v[j] = addm(v[j], kProfilePrime - mulm(c, basis[b][j], kProfilePrime), kProfilePrime);
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (v[j]) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    uint64_t inv = powm(v[piv], kProfilePrime - 2, kProfilePrime);
    for (int j = piv; j < n; ++j)
      if (v[j]) v[j] = mulm(v[j], inv, kProfilePrime);
    basis.push_back(std::move(v));
    basis_col.push_back(piv);
    out.pivot_rows.push_back(i);
    out.pivot_cols.push_back(piv);
  }
  out.rank = static_cast<int>(basis.size());
  return out;
}

// exact rational echelon profile (fallback and independent checker)
NumericProfile profile_exact(const ScaledMatrix& sm, const Rat& q0) {
  NumericProfile out;
  const int n = static_cast<int>(sm.cols.size());
  std::vector<std::vector<Rat>> basis;
  std::vector<int> basis_col;
  for (int i = 0; i < sm.m; ++i) {
    std::vector<Rat> v(n);
    for (int j = 0; j < n; ++j) v[j] = sm.rows[i][j].eval(q0);
    for (size_t b = 0; b < basis.size(); ++b) {
      const Rat& c = v[basis_col[b]];
      if (c == 0) continue;
      Rat f = c;
      for (int j = 0; j < n; ++j)
        if (basis[b][j] != 0) v[j] -= f * basis[b][j];
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Rat inv = Rat(1) / v[piv];
    for (int j = piv; j < n; ++j)
      if (v[j] != 0) v[j] *= inv;
    basis.push_back(std::move(v));
    basis_col.push_back(piv);
    out.pivot_rows.push_back(i);
    out.pivot_cols.push_back(piv);
  }
  out.rank = static_cast<int>(basis.size());
  return out;
}

// pivot factors of the minor from forward elimination with degree-aware
// pivoting; no inverse is formed
struct MinorPivots {
  std::vector<QFunc> pivots;
  bool singular = false;
};

MinorPivots forward_pivots(const ScaledMatrix& sm, const NumericProfile& prof) {
  const int r = prof.rank;
  MinorPivots out;
  std::vector<std::vector<QFunc>> a(r, std::vector<QFunc>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Poly1& p = sm.rows[prof.pivot_rows[i]][prof.pivot_cols[j]];
      if (!p.is_zero()) a[i][j] = QFunc(p);
    }
  for (int c = 0; c < r; ++c) {
    // lowest-degree pivot keeps the intermediate fractions small
    int piv = -1;
    int best = INT_MAX;
    for (int i = c; i < r; ++i) {
      if (a[i][c].is_zero()) continue;
      int deg = a[i][c].num().degree() + a[i][c].den().degree();
      if (deg < best) {
        best = deg;
        piv = i;
      }
    }
    if (piv < 0) {
      out.singular = true;
      return out;
    }
    if (piv != c) {
      std::swap(a[piv], a[c]);
      out.pivots.push_back(QFunc(Rat(-1)));
    }
    out.pivots.push_back(a[c][c]);
    QFunc pinv = QFunc(Rat(1)) / a[c][c];
    for (int i = c + 1; i < r; ++i) {
      if (a[i][c].is_zero()) continue;
      QFunc f = a[i][c] * pinv;
      a[i][c] = QFunc();
      for (int j = c + 1; j < r; ++j)
        if (!a[c][j].is_zero()) a[i][j] -= f * a[c][j];
    }
  }
  return out;
}

// Span coefficients by multi-point evaluation and rational reconstruction.
// The returned candidates are only trusted after the exact integer sweep.
struct SpanSolver {
  const ScaledMatrix& sm;
  const NumericProfile& prof;
  std::vector<int> span_rows;
  std::vector<Rat> points;
  // values[s][k][t]: x_k at point t for span row s
  std::vector<std::vector<std::vector<Rat>>> values;

  explicit SpanSolver(const ScaledMatrix& s, const NumericProfile& p) : sm(s), prof(p) {
    std::vector<bool> is_pivot(sm.m, false);
    for (int i : prof.pivot_rows) is_pivot[i] = true;
    for (int i = 0; i < sm.m; ++i)
      if (!is_pivot[i]) span_rows.push_back(i);
    values.resize(span_rows.size());
  }

  // extend the sample set to npoints usable points
  bool extend(size_t npoints, long& next_c) {
    const int r = prof.rank;
    while (points.size() < npoints) {
      Rat c(next_c++);
      if (next_c > 100000) return false;
      // A(c)^T with partial-pivot LU; skip singular points
      std::vector<std::vector<Rat>> at(r, std::vector<Rat>(r));
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
          at[j][i] = sm.rows[prof.pivot_rows[i]][prof.pivot_cols[j]].eval(c);
      std::vector<int> perm(r);
      bool singular = false;
      for (int col = 0; col < r && !singular; ++col) {
        int piv = -1;
        for (int row = col; row < r; ++row)
          if (at[row][col] != 0) {
            piv = row;
            break;
          }
        if (piv < 0) {
          singular = true;
          break;
        }
        std::swap(at[piv], at[col]);
        perm[col] = piv;
        Rat inv = Rat(1) / at[col][col];
        for (int row = col + 1; row < r; ++row) {
          if (at[row][col] == 0) continue;
          Rat f = at[row][col] * inv;
          at[row][col] = f;  // keep the multiplier for the solves
          for (int j = col + 1; j < r; ++j) at[row][j] -= f * at[col][j];
        }
      }
      if (singular) continue;
      // solve A(c)^T x = v(c) for every span row
      for (size_t sidx = 0; sidx < span_rows.size(); ++sidx) {
        int i = span_rows[sidx];
        std::vector<Rat> b(r);
        for (int k = 0; k < r; ++k) b[k] = sm.rows[i][prof.pivot_cols[k]].eval(c);
        for (int col = 0; col < r; ++col) {
          std::swap(b[col], b[perm[col]]);
          for (int row = col + 1; row < r; ++row)
            if (at[row][col] != 0) b[row] -= at[row][col] * b[col];
        }
        for (int col = r - 1; col >= 0; --col) {
          for (int j = col + 1; j < r; ++j) b[col] -= at[col][j] * b[j];
          b[col] /= at[col][col];
        }
        auto& vs = values[sidx];
        vs.resize(r);
        for (int k = 0; k < r; ++k) vs[k].push_back(b[k]);
      }
      points.push_back(c);
    }
    return true;
  }

  // reconstruct x for one span row at the given degree bound
  bool reconstruct(size_t sidx, int bound, std::vector<QFunc>& x) const {
    const int r = prof.rank;
    x.assign(r, QFunc());
    for (int k = 0; k < r; ++k) {
      std::vector<std::pair<Rat, Rat>> pts;
      for (size_t t = 0; t < points.size(); ++t) pts.emplace_back(points[t], values[sidx][k][t]);
      auto rec = rational_reconstruct(pts, bound, bound);
      if (!rec) return false;
      if (rec->first.is_zero()) continue;
      x[k] = QFunc(rec->first, rec->second);
    }
    return true;
  }
};

void check_scales(const ScaledMatrix& sm, SMembershipCertificate& cert) {
  std::map<std::vector<Rat>, bool> cache;
  for (const auto& s : sm.scale) {
    if (s.is_constant()) continue;
    auto key = s.coeffs();
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (!it->second)
        throw std::runtime_error("certified_rank: denominator vanishes at a prime power");
      continue;
    }
    auto chk = prime_power_nonvanishing(s);
    cache[key] = chk.nonvanishing;
    if (!chk.nonvanishing)
      throw std::runtime_error("certified_rank: denominator vanishes at prime power " +
                               chk.witness->get_str());
    cert.factor_checks.push_back(std::move(chk));
  }
}

bool try_certify(const ScaledMatrix& sm, const NumericProfile& prof,
                 SMembershipCertificate& cert) {
  const bool prof_timing = std::getenv("F4CT_PROFILE") != nullptr;
  auto tick = std::chrono::steady_clock::now();
  auto lap = [&](const char* what) {
    if (!prof_timing) return;
    auto now = std::chrono::steady_clock::now();
    fprintf(stderr, "[certify] %s: %.2fs\n", what,
            std::chrono::duration<double>(now - tick).count());
    tick = now;
  };
  const int r = prof.rank;
  const int n = static_cast<int>(sm.cols.size());
  cert.rank = r;
  cert.pivot_rows = prof.pivot_rows;
  cert.pivot_cols.clear();
  for (int c : prof.pivot_cols) cert.pivot_cols.push_back(sm.cols[c]);
  cert.det_factors_num.clear();
  cert.det_factors_den.clear();
  cert.spans.clear();
  cert.residuals_exact = false;
  if (r == 0) {
    for (const auto& row : sm.rows)
      for (const auto& e : row)
        if (!e.is_zero()) return false;
    cert.residuals_exact = true;
    return true;
  }
  MinorPivots ms = forward_pivots(sm, prof);
  lap("minor forward elimination");
  if (ms.singular) return false;

  // Prop C.0.1 determinant certificate on the polynomial minor: every pivot
  // numerator and denominator avoids prime powers (the denominators divide
  // products of earlier numerators, so this is sound and usually enough);
  // otherwise expand the product and decide on the polynomial itself.
  bool factors_ok = true;
  for (const auto& p : ms.pivots) {
    cert.det_factors_num.push_back(p.num());
    cert.det_factors_den.push_back(p.den());
    auto c1 = prime_power_nonvanishing(p.num());
    factors_ok = factors_ok && c1.nonvanishing;
    cert.factor_checks.push_back(std::move(c1));
    if (!p.den().is_constant()) {
      auto c2 = prime_power_nonvanishing(p.den());
      factors_ok = factors_ok && c2.nonvanishing;
      cert.factor_checks.push_back(std::move(c2));
    }
  }
  if (!factors_ok) {
    QFunc det(Rat(1));
    for (const auto& p : ms.pivots) det *= p;
    if (!det.den().is_constant())
      throw std::logic_error("certified_rank: polynomial minor with non-polynomial determinant");
    cert.det_expanded = det.num();
    auto chk = prime_power_nonvanishing(det.num());
    cert.factor_checks.push_back(chk);
    if (!chk.nonvanishing) return false;
  }

  // Cramer residuals: each remaining row is solved against the minor and the
  // resulting identity is verified after clearing every denominator, so the
  // column sweeps run in integer polynomial arithmetic.
  std::vector<bool> is_pivot(sm.m, false);
  for (int i : prof.pivot_rows) is_pivot[i] = true;
  // integer image of the matrix rows: rows[i] = row_content[i] * int_rows[i]
  std::vector<std::vector<IntPoly>> int_rows(sm.m);
  std::vector<Rat> row_content(sm.m, Rat(1));
  lap("det factor checks");
  for (int i = 0; i < sm.m; ++i) {
    Int den(1);
    Int gcd_num(0);
    for (const auto& e : sm.rows[i])
      for (const auto& c : e.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num().get_mpz_t());
      }
    if (gcd_num == 0) gcd_num = 1;
    row_content[i] = Rat(gcd_num, den);
    row_content[i].canonicalize();
    gcd_num = row_content[i].get_num();
    den = row_content[i].get_den();
    int_rows[i].resize(n);
    for (int j = 0; j < n; ++j) {
      const Poly1& e = sm.rows[i][j];
      if (e.is_zero()) continue;
      IntPoly p(e.degree() + 1);
      for (int d = 0; d <= e.degree(); ++d) {
        Rat c = e.coeff(d) / row_content[i];
        assert(c.get_den() == 1);
        p[d] = c.get_num();
      }
      int_rows[i][j] = std::move(p);
    }
  }
  lap("integer row conversion");
  // solve each span row by evaluation + rational reconstruction; the sweep
  // below is the exact certificate, so reconstruction needs no trust
  SpanSolver solver(sm, prof);
  std::vector<std::vector<QFunc>> span_x(solver.span_rows.size());
  {
    long next_c = 2;
    int bound = 8;
    std::vector<bool> done(solver.span_rows.size(), false);
    size_t remaining = solver.span_rows.size();
    while (remaining > 0) {
      if (!solver.extend(2 * bound + 4, next_c)) return false;
      for (size_t sidx = 0; sidx < solver.span_rows.size(); ++sidx) {
        if (done[sidx]) continue;
        std::vector<QFunc> x;
        if (solver.reconstruct(sidx, bound, x)) {
          span_x[sidx] = std::move(x);
          done[sidx] = true;
          --remaining;
        }
      }
      if (remaining == 0) break;
      bound *= 2;
      if (bound > 4096) return false;
    }
  }
  lap("span reconstruction");
  double t_solve = 0, t_clear = 0, t_sweep = 0;
  for (size_t sidx = 0; sidx < solver.span_rows.size(); ++sidx) {
    const int i = solver.span_rows[sidx];
    std::vector<QFunc>& x = span_x[sidx];
    auto t0 = std::chrono::steady_clock::now();
    t_solve += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t0 = std::chrono::steady_clock::now();
    // integer identity B * int_row_i = sum_k A_k * int_row_k, obtained by
    // clearing the solve denominators and the row contents
    Poly1 dlcm(Rat(1));
    for (const auto& xk : x) {
      if (xk.is_zero() || xk.den().is_constant()) continue;
      Poly1 g = Poly1::gcd(dlcm, xk.den());
      dlcm = dlcm * (g.degree() > 0 ? *Poly1::divexact(xk.den(), g) : xk.den());
    }
    std::vector<Poly1> arat(r);
    for (int k = 0; k < r; ++k) {
      if (x[k].is_zero()) continue;
      arat[k] = x[k].num() * *Poly1::divexact(dlcm, x[k].den());
      arat[k] *= row_content[prof.pivot_rows[k]];
    }
    Poly1 brat = dlcm;
    brat *= row_content[i];
    Int clear(1);
    auto fold_dens = [&clear](const Poly1& p) {
      for (const auto& c : p.coeffs())
        mpz_lcm(clear.get_mpz_t(), clear.get_mpz_t(), c.get_den().get_mpz_t());
    };
    for (const auto& p : arat) fold_dens(p);
    fold_dens(brat);
    auto to_int = [&clear](const Poly1& p) {
      IntPoly out;
      if (p.is_zero()) return out;
      out.assign(p.degree() + 1, Int(0));
      for (int d = 0; d <= p.degree(); ++d) {
        Rat c = p.coeff(d) * Rat(clear);
        assert(c.get_den() == 1);
        out[d] = c.get_num();
      }
      return out;
    };
    std::vector<IntPoly> a(r);
    for (int k = 0; k < r; ++k) a[k] = to_int(arat[k]);
    IntPoly b = to_int(brat);
    t_clear += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    t0 = std::chrono::steady_clock::now();
    for (int j = 0; j < n; ++j) {
      IntPoly acc;
      intpoly_submul(acc, b, int_rows[i][j]);
      for (int k = 0; k < r; ++k)
        if (!a[k].empty() && !int_rows[prof.pivot_rows[k]][j].empty())
          intpoly_addmul(acc, a[k], int_rows[prof.pivot_rows[k]][j]);
      for (const auto& c : acc)
        if (c != 0) return false;
    }
    t_sweep += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // span coefficients for the original (unscaled) rows
    std::vector<QFunc> xorig(r);
    for (int j = 0; j < r; ++j) {
      if (x[j].is_zero()) continue;
      xorig[j] = x[j] * QFunc(sm.scale[prof.pivot_rows[j]]) / QFunc(sm.scale[i]);
    }
    cert.spans.emplace_back(i, std::move(xorig));
  }
  if (prof_timing)
    fprintf(stderr, "[certify] solve %.2fs clear %.2fs sweep %.2fs\n", t_solve, t_clear, t_sweep);
  cert.residuals_exact = true;
  return true;
}

}  // namespace

RankResult certified_rank_stream(int nrows, int ncols, const RowSource& row) {
  ScaledMatrix sm = scale_and_compact(nrows, ncols, row);
  SMembershipCertificate cert;
  check_scales(sm, cert);
  bool mod_ok = true;
  for (uint64_t q0 : {2ULL, 3ULL}) {
    NumericProfile prof = profile_mod(sm, q0, mod_ok);
    if (mod_ok && try_certify(sm, prof, cert)) {
      RankResult out;
      out.rank = cert.rank;
      out.cert = std::move(cert);
      return out;
    }
  }
  // exact fallback (a modular profile can only understate the rank)
  for (long q0 : {2L, 3L}) {
    NumericProfile prof = profile_exact(sm, Rat(q0));
    if (try_certify(sm, prof, cert)) {
      RankResult out;
      out.rank = cert.rank;
      out.cert = std::move(cert);
      return out;
    }
  }
  throw std::runtime_error("certified_rank: rank not q-uniform");
}

RankResult certified_rank(const QMat& m) {
  int nrows = static_cast<int>(m.size());
  int ncols = nrows == 0 ? 0 : static_cast<int>(m[0].size());
  return certified_rank_stream(nrows, ncols, [&m](int i) { return m[i]; });
}

std::vector<std::vector<QFunc>> left_kernel_from_cert(const SMembershipCertificate& cert,
                                                      int nrows) {
  std::vector<std::vector<QFunc>> basis;
  for (const auto& [i, x] : cert.spans) {
    std::vector<QFunc> v(nrows);
    v[i] = QFunc(Rat(1));
    for (size_t k = 0; k < x.size(); ++k) v[cert.pivot_rows[k]] = -x[k];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<QFunc>> left_kernel(const QMat& m) {
  RankResult rr = certified_rank(m);
  return left_kernel_from_cert(rr.cert, static_cast<int>(m.size()));
}

int rank_at_stream(int nrows, int ncols, const RowSource& row, const Rat& q) {
  ScaledMatrix sm = scale_and_compact(nrows, ncols, row);
  // the scales must not vanish at the evaluation point
  for (const auto& s : sm.scale)
    if (s.eval(q) == 0) throw std::runtime_error("rank_at: denominator vanishes at q");
  return profile_exact(sm, q).rank;
}

int rank_at(const QMat& m, const Rat& q) {
  int nrows = static_cast<int>(m.size());
  int ncols = nrows == 0 ? 0 : static_cast<int>(m[0].size());
  return rank_at_stream(nrows, ncols, [&m](int i) { return m[i]; }, q);
}

}  // namespace f4ct
