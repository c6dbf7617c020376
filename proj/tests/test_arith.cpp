#include "quintforge/error.hpp"
#include "quintforge/exact_arith.hpp"
#include "quintforge/polynomial.hpp"
#include "quintforge/rational_function.hpp"
#include "quintforge/zpoly.hpp"

#include "printers.hpp"

#include <random>

using namespace quintforge;

TEST_CASE("valuation and stripping") {
  auto v = valuation_and_strip(Integer(-7200), Integer(2));
  CHECK(v.exponent == 5);
  CHECK(v.stripped == -225);
  CHECK(strip_by_modulus(Integer(-7200 * 7), Integer(6)) == -175);
  CHECK_THROWS_AS(strip_by_modulus(Integer(0), Integer(6)), Error);
}

TEST_CASE("squarefree decomposition keeps the sign") {
  auto d = squarefree_decompose(Integer(-7200));
  CHECK(d.squarefree_part == -2);
  CHECK(d.square_root_part == 60);
  CHECK(is_squarefree(Integer(-30)));
  CHECK_FALSE(is_squarefree(Integer(12)));
}

TEST_CASE("jacobi symbol against Euler's criterion") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 23L, 101L}) {
    for (long a = -30; a <= 30; ++a) {
      Integer e;
      mpz_powm_ui(e.get_mpz_t(), Integer(mod_floor(a, p)).get_mpz_t(), (p - 1) / 2, Integer(p).get_mpz_t());
      int euler = e == 0 ? 0 : (e == 1 ? 1 : -1);
      CHECK(jacobi_symbol(Integer(a), Integer(p)) == euler);
    }
  }
  CHECK(jacobi_symbol(Integer(2), Integer(15)) == 1);
  CHECK_THROWS_AS(jacobi_symbol(Integer(2), Integer(8)), Error);
}

TEST_CASE("smallest squarefree representative") {
  CHECK(smallest_squarefree_in_class(Integer(5), Integer(8), Sign::positive) == 5);
  CHECK(smallest_squarefree_in_class(Integer(5), Integer(8), Sign::negative) == -3);
  CHECK(smallest_squarefree_in_class(Integer(1), Integer(8), Sign::positive) == 1);
  CHECK(smallest_squarefree_in_class(Integer(1), Integer(8), Sign::negative) == -7);
  try {
    smallest_squarefree_in_class(Integer(0), Integer(4), Sign::positive);
    FAIL("expected no representative");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_representative);
  }
}

TEST_CASE("primality and factorization") {
  CHECK(is_prime(Integer("4611686018427388039")));
  CHECK_FALSE(is_prime(Integer("4611686018427388041")));
  auto f = factor(Integer(394680));
  REQUIRE(f.size() == 6);
  CHECK(f[0] == std::pair<Integer, unsigned>(2, 3));
  CHECK(f[5].first == 23);
}

namespace {

ZPoly random_zpoly(std::mt19937_64& rng, int deg, int bits) {
  std::vector<Integer> c(deg + 1);
  for (auto& x : c) {
    x = static_cast<long>(rng() >> (64 - bits)) - (1L << (bits - 1));
  }
  if (c.back() == 0) c.back() = 1;
  return ZPoly(std::move(c));
}

ZPoly schoolbook(const ZPoly& a, const ZPoly& b) {
  std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a[i] * b[j];
  }
  return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("Kronecker multiplication agrees with schoolbook") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 30; ++t) {
    ZPoly a = random_zpoly(rng, 10 + t, 40);
    ZPoly b = random_zpoly(rng, 20 + 2 * t, 30);
    CHECK(a * b == schoolbook(a, b));
  }
}

TEST_CASE("modular gcd recovers a planted factor") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    ZPoly g = random_zpoly(rng, 1 + t % 6, 20).primitive_part();
    ZPoly a = random_zpoly(rng, 3 + t % 5, 20);
    ZPoly b = random_zpoly(rng, 2 + t % 7, 20);
    ZPoly h = gcd(a * g, b * g);
    // h is g times gcd(a, b), which is almost always 1
    CHECK(try_divexact(h, g).has_value());
    CHECK(try_divexact(a * g, h).has_value());
    CHECK(try_divexact(b * g, h).has_value());
    CHECK(gcd(try_divexact(a * g, h).value(), try_divexact(b * g, h).value()).degree() == 0);
  }
  CHECK(gcd(ZPoly(), ZPoly()).is_zero());
}

TEST_CASE("squarefree factorization and square roots") {
  Polynomial u = Polynomial::variable();
  ZPoly f = ((u - 1) * (u - 1) * (u * 2 + 1) * (u * u + 1).pow(3) * Rational(-6)).to_zpoly();
  auto sf = squarefree_factorization(f);
  CHECK(sf.unit == -6);
  REQUIRE(sf.factors.size() == 3);
  CHECK(Polynomial(sf.factors[0]) == u * 2 + 1);
  CHECK(Polynomial(sf.factors[1]) == u - 1);
  CHECK(Polynomial(sf.factors[2]) == u * u + 1);
  ZPoly s = ((u * 3 - 2) * (u * u + 5)).to_zpoly();
  CHECK(square_root(s * s) == s);
  CHECK_FALSE(square_root(s * s * ZPoly(2)).has_value());
}

TEST_CASE("polynomial parsing") {
  Polynomial p = Polynomial::parse("4*u^4 - 20*u^3 + 13*u^2 + 12*u");
  CHECK(p.to_coeff_list() == "0,12,13,-20,4");
  CHECK(Polynomial::parse("0,12,13,-20,4") == p);
  CHECK(Polynomial::parse("39/2u^4 - u + 1/3").coeff(4) == Rational(39, 2));
  CHECK(Polynomial::parse(p.to_string()) == p);
  CHECK_THROWS_AS(Polynomial::parse("u^"), Error);
}

TEST_CASE("rational function arithmetic is canonical") {
  RationalFunction u = RationalFunction::variable();
  RationalFunction a = (u * u - 1) / (u * 2 - 2);
  CHECK(a == (u + 1) / RationalFunction(2));
  CHECK(a.is_polynomial());
  RationalFunction b = u / (u + 1) + RationalFunction(1) / (u + 1);
  CHECK(b == RationalFunction(1));
  RationalFunction c = RationalFunction(1) / (u - 1) - RationalFunction(1) / (u + 1);
  CHECK(c == RationalFunction(2) / (u * u - 1));
  CHECK((c - c).is_zero());
  CHECK(c.evaluate(3) == Rational(1, 4));
  RationalFunction h = RationalFunction(6) / (u * 4 - 2);
  CHECK(h.numerator() == Polynomial(Rational(3, 2)));
  CHECK(h.denominator() == Polynomial::parse("u - 1/2"));
  CHECK(h.to_string() == "(3/2)/(u - 1/2)");
  try {
    c.evaluate(1);
    FAIL("expected pole");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::pole);
  }
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937_64 rng(3);
  auto rnd = [&] {
    Polynomial n(random_zpoly(rng, static_cast<int>(rng() % 4), 8));
    Polynomial d(random_zpoly(rng, static_cast<int>(rng() % 3), 8));
    if (d.is_zero()) d = Polynomial(1);
    return RationalFunction(n, d);
  };
  for (int t = 0; t < 40; ++t) {
    RationalFunction x = rnd(), y = rnd(), z = rnd();
    CHECK((x + y) * z == x * z + y * z);
    CHECK((x * y) * z == x * (y * z));
    if (!y.is_zero()) CHECK((x / y) * y == x);
    Rational pt(static_cast<long>(t) * 7 + 101, 13);
    try {
      CHECK((x * y + z).evaluate(pt) == x.evaluate(pt) * y.evaluate(pt) + z.evaluate(pt));
    } catch (const Error&) {
    }
  }
}

TEST_CASE("square test and squarefree class") {
  RationalFunction u = RationalFunction::variable();
  RationalFunction f = ((u * 3 + 1) / (u * u - 5)).square() * RationalFunction(Rational(4, 9));
  auto r = ratfunc_is_square(f);
  REQUIRE(r.has_value());
  CHECK(r->square() == f);
  CHECK_FALSE(ratfunc_is_square(f * RationalFunction(-1)).has_value());
  // -20 (u - 1)^3 (2u + 1) / u^2 is in the class of -5 (u - 1)(2u + 1)
  RationalFunction g = RationalFunction(-20) * (u - 1).pow(3) * (u * 2 + 1) / (u * u);
  CHECK(squarefree_class(g).representative() == Polynomial::parse("-10*u^2 + 5*u + 5"));
}

TEST_CASE("polyfield examples") {
  Polynomial u = Polynomial::variable();
  CHECK(gcd(u * u - 1, u * u - u * 2 + 1) == u - 1);
  CHECK((u + 1) * (u - 1) == u * u - 1);
  CHECK((u * u * 4 - 4).content() == 4);
  auto cls = [](const Polynomial& p) { return squarefree_class(RationalFunction(p)).representative(); };
  CHECK(cls((u * u - 1).pow(2) * (u + 2)) == u + 2);
  CHECK(cls(u * u * 4 - 4) == u * u - 1);
  CHECK(cls(u * 8) == u * 2);
  CHECK(polynomial_square_root(u * u + u * 2 + 1) == u + 1);
  CHECK(polynomial_square_root(Polynomial::parse("100*u^4 + 560*u^3 + 1224*u^2 + 1232*u + 484")) ==
        Polynomial::parse("10*u^2 + 28*u + 22"));
  CHECK_FALSE(polynomial_square_root(Polynomial::parse("u^4 + u^2 + 7")).has_value());
  RationalFunction x = RationalFunction::variable();
  CHECK(ratfunc_is_square(RationalFunction(1)) == RationalFunction(1));
  CHECK(ratfunc_is_square(((x + 1) / (x - 1)).square()) == (x + 1) / (x - 1));
  CHECK_FALSE(ratfunc_is_square(x / (x - 1)).has_value());
  CHECK(RationalFunction(Polynomial::parse("4*u^4 - 20*u^3 + 13*u^2 + 12*u")).evaluate(3) == -63);
  CHECK_THROWS_AS(divrem(u, Polynomial()), Error);
}

TEST_CASE("squarefree class properties") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    Polynomial f(random_zpoly(rng, 1 + t % 5, 10));
    Polynomial g(random_zpoly(rng, t % 4, 10));
    if (g.is_zero()) continue;
    RationalFunction F(f), G(g);
    CHECK(squarefree_class(F * G.square()) == squarefree_class(F));
    CHECK(squarefree_class(F / G.square()) == squarefree_class(F));
    const bool square = squarefree_class(F).representative() == Polynomial(1);
    CHECK(ratfunc_is_square(F).has_value() == square);
    CHECK(ratfunc_is_square(G.square()).has_value());
    auto r = polynomial_square_root(g * g);
    REQUIRE(r.has_value());
    CHECK((*r == g || *r == -g));
  }
}
