// Copyright 2026 The f4ct Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef F4CT_POLY1_HPP
#define F4CT_POLY1_HPP

#include <initializer_list>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "f4ct/rat.hpp"

namespace f4ct {

// Dense univariate polynomial over Q, coefficients indexed by degree.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (empty coefficient vector).
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(Rat c) {
    if (c != 0) c_ = {std::move(c)};
  }
  Poly1(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
  explicit Poly1(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly1 monomial(int deg, Rat c = Rat(1));
  static Poly1 x() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& leading() const { return c_.back(); }
  Rat coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return Rat(0);
    return c_[deg];
  }
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  Poly1 operator-() const;
  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1& operator*=(const Poly1& o) { return *this = *this * o; }
  Poly1& operator*=(const Rat& s);
  friend Poly1 operator*(Poly1 a, const Rat& s) { return a *= s; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  // Euclidean division; quotient and remainder over Q.
  static void divmod(const Poly1& a, const Poly1& b, Poly1& q, Poly1& r);
  // Exact division; nullopt if b does not divide a.
  static std::optional<Poly1> divexact(const Poly1& a, const Poly1& b);

  // Monic gcd over Q (primitive-part PRS underneath to tame coefficients).
  static Poly1 gcd(const Poly1& a, const Poly1& b);

  Poly1 derivative() const;

  // Scales to integer coefficients with content 1, positive leading coeff;
  // returns the scaled polynomial (unit multiple of *this).
  Poly1 primitive_integer() const;

  // Strips the highest power of x dividing *this; returns that power.
  int strip_x_power();

  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Unique interpolating polynomial of degree < points.size().
Poly1 lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Rational-function reconstruction (Cauchy interpolation): the unique
// num/den with deg num <= dnum, deg den <= dden matching all sample points,
// if one exists.
std::optional<std::pair<Poly1, Poly1>> rational_reconstruct(
    const std::vector<std::pair<Rat, Rat>>& points, int dnum, int dden);

// Number of real roots of p in the closed interval [lo, hi] (Sturm).
int sturm_roots_in(const Poly1& p, const Rat& lo, const Rat& hi);

// All integer roots of p lying in [lo, hi], via Sturm isolation.
std::vector<Int> integer_roots_in(const Poly1& p, const Int& lo, const Int& hi);

}  // namespace f4ct

#endif  // F4CT_POLY1_HPP
