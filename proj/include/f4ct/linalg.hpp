// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_LINALG_HPP
#define F4CT_LINALG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "f4ct/qfunc.hpp"

namespace f4ct {

// Witness that a polynomial does not vanish at any prime power >= 2, or the
// offending prime power if it does.
struct PrimePowerCheck {
  bool nonvanishing = false;
  std::optional<Int> witness;       // offending prime power when vanishing
  std::vector<Int> checked_roots;   // integer root candidates examined
};

// p must be nonzero. Decides p(s) != 0 for every prime power s >= 2. The
// candidates are the integer roots of p in [2, Cauchy bound]; each divides
// the constant term (rational root theorem), so this checks exactly the
// prime-power divisors of the constant term that can matter.
PrimePowerCheck prime_power_nonvanishing(const Poly1& p);

// det(A) by evaluation at n*degree_bound + 1 points and interpolation.
// Evaluation points are consecutive integers from max(2, degree_bound + 2).
Poly1 det_interpolate(const std::vector<std::vector<Poly1>>& a, int degree_bound);

using QMat = std::vector<std::vector<QFunc>>;

// Rank certificate in the sense of Prop C.0.1: an r x r minor whose
// determinant vanishes at no prime power, plus exact Cramer residuals
// expressing every remaining row in the span of the chosen rows.
struct SMembershipCertificate {
  int rank = 0;
  std::vector<int> pivot_rows;  // indices of the S-independent rows
  std::vector<int> pivot_cols;  // coordinate set of the invertible minor
  // minor determinant, as the factored product of elimination pivots
  // (numerators and denominators separately) and expanded when small
  std::vector<Poly1> det_factors_num;
  std::vector<Poly1> det_factors_den;
  std::optional<Poly1> det_expanded;
  std::vector<PrimePowerCheck> factor_checks;
  // row i (not a pivot) = sum_j cramer[i][j] * pivot_row_j, verified exactly
  std::vector<std::pair<int, std::vector<QFunc>>> spans;
  bool residuals_exact = false;
};

struct RankResult {
  int rank = 0;
  SMembershipCertificate cert;
};

// Error carrying the prime power at which a denominator (or certificate)
// degenerates.
struct RankError {
  std::string message;
};

// Certified rank of a matrix of rational functions in q. Throws
// std::runtime_error on denominator vanishing at a prime power or when
// certification fails at the candidate sets found at q = 2 and q = 3.
RankResult certified_rank(const QMat& m);

// Same, with rows produced on demand (row i may be requested several times);
// keeps only pivot rows resident.
using RowSource = std::function<std::vector<QFunc>(int)>;
RankResult certified_rank_stream(int nrows, int ncols, const RowSource& row);

// Basis of the left kernel {c : c * M = 0} read off a certificate, exact
// over Q(q): one vector per spanned row.
std::vector<std::vector<QFunc>> left_kernel_from_cert(const SMembershipCertificate& cert,
                                                      int nrows);
std::vector<std::vector<QFunc>> left_kernel(const QMat& m);

// Numeric rank of M evaluated at a rational point (exact elimination).
int rank_at(const QMat& m, const Rat& q);
int rank_at_stream(int nrows, int ncols, const RowSource& row, const Rat& q);

}  // namespace f4ct

#endif  // F4CT_LINALG_HPP
