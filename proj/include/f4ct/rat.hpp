// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_RAT_HPP
#define F4CT_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f4ct {

// Exact rational scalar. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after canonicalize(), which every constructor below guarantees.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "a", "-a", "a/b".
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Rat rat_pow(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  Rat a = e > 0 ? b : Rat(1) / b;
  unsigned long n = e > 0 ? e : -e;
  Rat out(1);
  while (n) {
    if (n & 1) out *= a;
    a *= a;
    n >>= 1;
  }
  return out;
}

// True for p^k with p prime, k >= 1. Deterministic for the magnitudes that
// appear here (root candidates of certificate polynomials).
inline bool is_prime_power(const Int& n) {
  if (n < 2) return false;
  Int base = n;
  // largest exact root is the primitive base
  unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      base = root;
      break;
    }
  }
  return mpz_probab_prime_p(base.get_mpz_t(), 40) != 0;
}

}  // namespace f4ct

#endif  // F4CT_RAT_HPP
