#pragma once

#include "quintforge/exact_arith.hpp"
#include "quintforge/polynomial.hpp"
#include "quintforge/zpoly.hpp"

#include <optional>
#include <string>

namespace quintforge {

// Element of Q(u), stored as scale * num / den with num, den primitive
// integer polynomials, positive leading coefficients and gcd(num, den) = 1.
// The form is canonical, so equality is representation equality.
class RationalFunction {
 public:
  RationalFunction() : scale_(0), num_(1), den_(1) {}
  RationalFunction(long c) : scale_(c), num_(1), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : scale_(c), num_(1), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& p);  // NOLINT: Q[u] embeds in Q(u)
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }
  static RationalFunction from_parts(const Rational& scale, const ZPoly& num, const ZPoly& den);

  bool is_zero() const { return scale_ == 0; }
  bool is_constant() const { return num_.degree() == 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Numerator over Q and monic denominator: *this == numerator()/denominator().
  Polynomial numerator() const;
  Polynomial denominator() const;

  const Rational& scale() const { return scale_; }
  const ZPoly& primitive_numerator() const { return num_; }
  const ZPoly& primitive_denominator() const { return den_; }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(unsigned e) const;
  RationalFunction square() const;

  // Throws Errc::pole when the denominator vanishes at x.
  Rational evaluate(const Rational& x) const;

  std::string to_string(char var = 'u') const;

 private:
  Rational scale_;
  ZPoly num_;
  ZPoly den_;
};

// h with h^2 == f, or nullopt. The root returned has positive scale.
std::optional<RationalFunction> ratfunc_is_square(const RationalFunction& f);

// Canonical representative of the class of f in Q(u)* / (Q(u)*)^2:
// s * g with g the product of the odd-multiplicity squarefree factors of f
// (primitive, positive leading coefficient) and s a signed squarefree integer.
class SquarefreeClass {
 public:
  explicit SquarefreeClass(Polynomial representative) : rep_(std::move(representative)) {}
  const Polynomial& representative() const { return rep_; }
  friend bool operator==(const SquarefreeClass& a, const SquarefreeClass& b) {
    return a.rep_ == b.rep_;
  }

 private:
  Polynomial rep_;
};

SquarefreeClass squarefree_class(const RationalFunction& f);

}  // namespace quintforge
