#pragma once

#include "quintforge/exact_arith.hpp"
#include "quintforge/zpoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quintforge {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(long constant);  // NOLINT: implicit from small constants
  explicit Polynomial(const Rational& constant);
  explicit Polynomial(const ZPoly& z);

  static Polynomial variable() { return Polynomial(std::vector<Rational>{0, 1}); }

  // Accepts `a0,a1,...,an` or `4*u^4 - 20*u^3 + 13*u^2 + 12*u`
  // (rational coefficients such as `27/4*u` allowed, no parentheses).
  static Polynomial parse(std::string_view text, char var = 'u');

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Rational& lc() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  std::span<const Rational> coeffs() const { return c_; }
  bool has_integer_coefficients() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& k);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& k) { return a *= k; }
  friend Polynomial operator*(Polynomial a, long k) { return a *= Rational(k); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // Positive rational c with (1/c) * f primitive in Z[u]; 0 for zero.
  Rational content() const;
  Rational evaluate(const Rational& x) const;

  // Integer-coefficient polynomial proportional to *this, and the scalar:
  // *this == scale * result.
  ZPoly to_primitive(Rational* scale = nullptr) const;
  // Exact conversion; requires integer coefficients.
  ZPoly to_zpoly() const;

  // Human-readable form, e.g. `4*u^4 - 20*u^3 + 13*u^2 + 12*u`.
  std::string to_string(char var = 'u') const;
  // Ascending comma-separated coefficient list.
  std::string to_coeff_list() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};
PolyDivision divrem(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) == 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// g with g^2 == f, leading coefficient positive, by top-down coefficient
// matching.
std::optional<Polynomial> polynomial_square_root(const Polynomial& f);

}  // namespace quintforge
