#include "quintforge/rational_function.hpp"

#include "quintforge/error.hpp"

namespace quintforge {

namespace {

// Splits the signed content off z: z == c * primitive_part(z).
Integer signed_content(const ZPoly& z) {
  Integer c = z.content();
  return sgn(z.lc()) < 0 ? Integer(-c) : c;
}

}  // namespace

RationalFunction::RationalFunction(const Polynomial& p) : RationalFunction() {
  if (p.is_zero()) return;
  num_ = p.to_primitive(&scale_);
  if (sgn(num_.lc()) < 0) {
    num_ = -num_;
    scale_ = -scale_;
  }
}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : RationalFunction(RationalFunction(num) / RationalFunction(den)) {}

RationalFunction RationalFunction::from_parts(const Rational& scale, const ZPoly& num, const ZPoly& den) {
  if (den.is_zero()) throw Error(Errc::division_by_zero, "rational function with zero denominator");
  RationalFunction r;
  if (scale == 0 || num.is_zero()) return r;
  const ZPoly g = gcd(num, den);
  ZPoly n = g.degree() > 0 ? divexact(num, g) : num;
  ZPoly d = g.degree() > 0 ? divexact(den, g) : den;
  const Integer cn = signed_content(n);
  const Integer cd = signed_content(d);
  r.scale_ = scale * Rational(cn) / Rational(cd);
  r.num_ = n.divexact(cn);
  r.den_ = d.divexact(cd);
  return r;
}

Polynomial RationalFunction::numerator() const {
  if (is_zero()) return {};
  return Polynomial(num_) * (scale_ / den_.lc());
}

Polynomial RationalFunction::denominator() const { return Polynomial(den_).monic(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of the zero rational function");
  RationalFunction r;
  r.scale_ = 1 / scale_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cross-cancel before multiplying: both inputs are already reduced.
  const ZPoly g1 = gcd(a.num_, b.den_);
  const ZPoly g2 = gcd(b.num_, a.den_);
  const ZPoly an = g1.degree() > 0 ? divexact(a.num_, g1) : a.num_;
  const ZPoly bd = g1.degree() > 0 ? divexact(b.den_, g1) : b.den_;
  const ZPoly bn = g2.degree() > 0 ? divexact(b.num_, g2) : b.num_;
  const ZPoly ad = g2.degree() > 0 ? divexact(a.den_, g2) : a.den_;
  RationalFunction r;
  r.scale_ = a.scale_ * b.scale_;
  r.num_ = an * bn;
  r.den_ = ad * bd;
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // scale_a * na / (g * da') + scale_b * nb / (g * db')
  const ZPoly g = gcd(a.den_, b.den_);
  const bool trivial = g.degree() == 0;
  const ZPoly da = trivial ? a.den_ : divexact(a.den_, g);
  const ZPoly db = trivial ? b.den_ : divexact(b.den_, g);
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.scale_.get_den_mpz_t(), b.scale_.get_den_mpz_t());
  const Integer ka = a.scale_.get_num() * (l / a.scale_.get_den());
  const Integer kb = b.scale_.get_num() * (l / b.scale_.get_den());
  ZPoly num = a.num_ * db * ka + b.num_ * da * kb;
  if (num.is_zero()) return {};
  ZPoly den = da * db;
  // Only factors of g can cancel against the new numerator.
  if (!trivial) {
    const ZPoly h = gcd(num, g);
    if (h.degree() > 0) {
      num = divexact(num, h);
      den = den * divexact(g, h);
    } else {
      den = den * g;
    }
  }
  RationalFunction r;
  const Integer cn = signed_content(num);
  const Integer cd = signed_content(den);
  r.scale_ = Rational(cn) / Rational(cd) / Rational(l);
  r.num_ = num.divexact(cn);
  r.den_ = den.divexact(cd);
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction RationalFunction::square() const {
  RationalFunction r;
  if (is_zero()) return r;
  r.scale_ = scale_ * scale_;
  r.num_ = num_ * num_;
  r.den_ = den_ * den_;
  return r;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction result(1);
  RationalFunction base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base.square();
  }
  return result;
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) {
    throw Error(Errc::pole, "pole at u = " + x.get_str() + ": denominator " + Polynomial(den_).to_string() +
                                " vanishes");
  }
  if (is_zero()) return 0;
  return scale_ * num_.evaluate(x) / d;
}

std::string RationalFunction::to_string(char var) const {
  const Polynomial n = numerator();
  if (den_.degree() == 0) return n.to_string(var);
  return "(" + n.to_string(var) + ")/(" + denominator().to_string(var) + ")";
}

std::optional<RationalFunction> ratfunc_is_square(const RationalFunction& f) {
  if (f.is_zero()) return RationalFunction();
  auto k = rational_square_root(f.scale());
  if (!k) return std::nullopt;
  auto n = square_root(f.primitive_numerator());
  if (!n) return std::nullopt;
  auto d = square_root(f.primitive_denominator());
  if (!d) return std::nullopt;
  return RationalFunction::from_parts(*k, *n, *d);
}

SquarefreeClass squarefree_class(const RationalFunction& f) {
  if (f.is_zero()) throw Error(Errc::domain, "squarefree class of the zero function");
  // f == k * n / d and 1/d == d mod squares, so the class of f is that of k*n*d.
  ZPoly odd(1);
  for (const ZPoly* part : {&f.primitive_numerator(), &f.primitive_denominator()}) {
    const auto sf = squarefree_factorization(*part);
    for (std::size_t i = 0; i < sf.factors.size(); i += 2) odd = odd * sf.factors[i];
  }
  const Integer k = f.scale().get_num() * f.scale().get_den();
  const Integer s = squarefree_decompose(k).squarefree_part;
  return SquarefreeClass(Polynomial(odd * s));
}

}  // namespace quintforge
