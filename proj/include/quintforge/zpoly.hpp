#pragma once

// Dense univariate polynomials over Z. This is the workhorse behind the
// Q[u] / Q(u) layer: rational-function arithmetic keeps numerators and
// denominators as primitive ZPolys and normalizes with the modular gcd below.

#include "quintforge/exact_arith.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quintforge {

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> coeffs);  // ascending degree
  ZPoly(long constant);                         // NOLINT: implicit from small constant
  explicit ZPoly(const Integer& constant);

  static ZPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Integer& lc() const { return c_.back(); }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  std::span<const Integer> coeffs() const { return c_; }
  std::size_t max_bits() const;

  ZPoly operator-() const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const Integer& k);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const Integer& k) { return a *= k; }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  Integer content() const;  // nonnegative; 0 for the zero polynomial
  // Divides by the content and makes the leading coefficient positive.
  ZPoly primitive_part() const;
  ZPoly derivative() const;
  ZPoly divexact(const Integer& k) const;

  Rational evaluate(const Rational& x) const;
  Integer evaluate(const Integer& x) const;

  std::string to_string(char var = 'u') const;

 private:
  void trim();
  std::vector<Integer> c_;
};

// Exact quotient a / b over Z, or nullopt when b does not divide a in Z[u].
std::optional<ZPoly> try_divexact(const ZPoly& a, const ZPoly& b);
// Exact quotient; throws Errc::domain when the division is not exact.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

// Division with remainder in Q[u] scaled to Z: lc(b)^k a = q b + r.
struct PseudoDivision {
  ZPoly quotient;
  ZPoly remainder;
  Integer multiplier;  // lc(b)^k
};
PseudoDivision pseudo_divide(const ZPoly& a, const ZPoly& b);

// Primitive gcd with positive leading coefficient (multi-modular algorithm).
// gcd(0, 0) is 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Yun's algorithm: f = c * prod_i factors[i]^(i+1) with primitive,
// positive-leading, pairwise coprime squarefree factors.
struct SquarefreeFactorization {
  Integer unit;                 // signed content of f
  std::vector<ZPoly> factors;   // factors[i] has multiplicity i + 1
};
SquarefreeFactorization squarefree_factorization(const ZPoly& f);

// g with g^2 == f over Z, leading coefficient positive.
std::optional<ZPoly> square_root(const ZPoly& f);

}  // namespace quintforge
