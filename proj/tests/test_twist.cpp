#include "printers.hpp"

#include "quintforge/error.hpp"
#include "quintforge/twist.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

using namespace quintforge;

namespace {

Integer pow_int(long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

long vp(const Integer& n, long p) {
  if (n == 0) return kInfiniteValuation;
  return static_cast<long>(valuation_and_strip(n, Integer(p)).exponent);
}

// Local root number at p >= 5 from the reduction type of the twisted model.
int rohrlich(const IntegerCurve& E, long p) {
  const Integer P(p);
  const ReducedValuations v = reduce_abc(vp(E.c4(), p), vp(E.c6(), p), vp(E.discriminant(), p));
  if (v.c == 0) return 1;
  if (v.a == 0) {
    const Integer c6 = valuation_and_strip(E.c6(), P).stripped;
    return -jacobi_symbol(Integer(-c6), P);
  }
  const int m1 = jacobi_symbol(Integer(-1), P);
  if (v.a != kInfiniteValuation && v.c > 0 && 3 * v.a < v.c) return m1;  // potentially multiplicative
  const long e = 12 / std::gcd(12L, v.c);
  if (e == 2 || e == 6) return m1;
  if (e == 3) return jacobi_symbol(Integer(-3), P);
  if (e == 4) return jacobi_symbol(Integer(-2), P);
  return 1;
}

std::vector<long> squarefree_upto(long bound, int sign) {
  std::vector<long> out;
  for (long n = 1; n <= bound; ++n) {
    if (is_squarefree(Integer(n))) out.push_back(sign * n);
  }
  return out;
}

}  // namespace

TEST_CASE("integer curve invariants and twists") {
  const IntegerCurve E6 = curve_record(6).model;
  const CurveInvariants inv = invariants(E6);
  CHECK(inv.c4 == Integer(-48) * E6.A);
  CHECK(inv.j == make_rational(Integer(inv.c4 * inv.c4 * inv.c4), inv.delta));
  CHECK_THROWS_AS(invariants(IntegerCurve{Integer(0), Integer(0)}), Error);

  const IntegerCurve T = quadratic_twist(E6, Integer(5));
  CHECK(vp(T.discriminant(), 5) == 8);
  CHECK(T.A == E6.A * 25);
  CHECK(T.B == E6.B * 125);
  CHECK_THROWS_AS(quadratic_twist(E6, Integer(12)), Error);
  CHECK_THROWS_AS(quadratic_twist(E6, Integer(0)), Error);

  CHECK(isomorphic_over_Q(E6, IntegerCurve{E6.A * 16, E6.B * 64}));
  CHECK_FALSE(isomorphic_over_Q(E6, T));
  CHECK_FALSE(isomorphic_over_Q(E6, curve_record(7).model));
}

TEST_CASE("reduce_abc") {
  CHECK(reduce_abc(4, 6, 18) == ReducedValuations{0, 0, 6});
  CHECK(reduce_abc(6, 9, 24) == ReducedValuations{2, 3, 12});
  CHECK(reduce_abc(0, 0, 2) == ReducedValuations{0, 0, 2});
  CHECK(reduce_abc(kInfiniteValuation, 7, 14) == ReducedValuations{kInfiniteValuation, 1, 2});

  const IntegerCurve E6 = curve_record(6).model;
  CHECK(vp(E6.c4(), 2) == 4);
  CHECK(vp(E6.c6(), 2) == 6);
  CHECK(vp(E6.discriminant(), 2) == 14);
  CHECK(vp(E6.c4(), 3) == 4);
  CHECK(vp(E6.c6(), 3) == 6);
  CHECK(vp(E6.discriminant(), 3) == 18);
}

TEST_CASE("curve table: discriminants, conductors' primes, distinct j") {
  std::vector<Rational> js;
  for (int i = 1; i <= 8; ++i) {
    const CurveRecord& rec = curve_record(i);
    Integer d = rec.delta_sign;
    for (const auto& [p, e] : rec.delta_factorization) d *= pow_int(p, static_cast<unsigned long>(e));
    CHECK_MESSAGE(rec.delta == d, "curve ", i);
    // every prime of the conductor divides the discriminant and vice versa
    for (const auto& [p, e] : rec.conductor) CHECK(vp(rec.delta, p) > 0);
    const Rational j = invariants(rec.model).j;
    for (const Rational& other : js) CHECK(j != other);
    js.push_back(j);
    // the product can have a smaller period than its factors (E4: 88 against 264)
    const long l = std::accumulate(rec.local_periods.begin(), rec.local_periods.end(), 1L,
                                   [](long a, long b) { return std::lcm(a, b); });
    CHECK(l % rec.period == 0);
  }
}

TEST_CASE("twist models match the tabulated curves") {
  for (int i = 1; i <= 8; ++i) {
    const TwistModel m(family(i).base_poly, Integer(1));
    CHECK_MESSAGE(isomorphic_over_Q(m.curve(), curve_record(i).model), "curve ", i);
  }
}

TEST_CASE("twist model point maps") {
  for (int i = 1; i <= 8; ++i) {
    for (long q : {1L, -1L, 7L, -7L, 30L}) {
      const TwistModel m(family(i).base_poly, Integer(q));
      CHECK(isomorphic_over_Q(m.curve(), quadratic_twist(curve_record(i).model, Integer(q))));
      const auto E = m.curve().over_Q();
      if (m.root()) {
        CHECK(m.to_curve(*m.root(), 0).infinity);
        CHECK(m.from_curve(CurvePoint<Rational>::at_infinity()) == std::make_pair(*m.root(), Rational(0)));
      }
      int found = 0;
      const Polynomial& P = m.quartic();
      for (long num = -12; num <= 12 && found < 3; ++num) {
        for (long den = 1; den <= 6 && found < 3; ++den) {
          const Rational u = make_rational(Integer(num), Integer(den));
          if (m.root() && u == *m.root()) continue;
          const auto s = rational_square_root(P.evaluate(u) / q);
          if (!s || *s == 0) continue;
          const auto pt = m.to_curve(u, *s);
          CHECK(E.on_curve(pt));
          CHECK(m.from_curve(pt) == std::make_pair(u, *s));
          ++found;
        }
      }
    }
  }
  const TwistModel m(family(6).base_poly, Integer(-7));
  CHECK_THROWS_AS(m.to_curve(1, 1), Error);
  CHECK_THROWS_AS(TwistModel(Polynomial::parse("u^4 + 1"), Integer(1)), Error);
  try {
    TwistModel(Polynomial::parse("u^4 + 1"), Integer(1));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_good);
  }
  CHECK_THROWS_AS(TwistModel(Polynomial::parse("u^2 + 1"), Integer(1)), Error);
  CHECK_THROWS_AS(TwistModel(Polynomial::parse("(u - 1)^2 * (u^2 + 1)"), Integer(1)), Error);
}

TEST_CASE("table parsing") {
  const auto t = parse_root_number_tables(
      "# comment\ncurve=3 p=2 mod=8 provenance=oracle\n1:+1\n3:-1\n\ncurve=3 p=3 mod=3 provenance=manual\n0:-1\n");
  REQUIRE(t.size() == 2);
  CHECK(t[0].curve == 3);
  CHECK(t[0].lookup(Integer(9)) == 1);
  CHECK(t[0].lookup(Integer(-5)) == -1);
  CHECK(t[1].provenance == Provenance::manual);
  try {
    t[0].lookup(Integer(5));
    FAIL("expected unpopulated_table");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unpopulated_table);
  }
  CHECK_THROWS_AS(parse_root_number_tables("1:+1\n"), Error);
  CHECK_THROWS_AS(parse_root_number_tables("curve=1 p=2 mod=8 provenance=guess\n"), Error);
  CHECK_THROWS_AS(parse_root_number_tables("curve=1 p=2 mod=8 provenance=oracle\n9:+1\n"), Error);
  CHECK_THROWS_AS(load_root_number_tables("/nonexistent/curve1.tbl"), Error);
}

TEST_CASE("hand-derived E6 tables") {
  const CurveRecord& rec = curve_record(6);
  const std::map<long, int> w2 = {{1, 1}, {2, 1}, {3, -1}, {5, -1}, {6, -1}, {7, -1}};
  for (const auto& [r, w] : w2) CHECK(rec.table(2).lookup(Integer(r)) == w);
  CHECK(rec.table(2).modulus == 8);
  CHECK(rec.table(3).lookup(Integer(0)) == -1);
  CHECK(rec.table(3).lookup(Integer(1)) == -1);
  CHECK(rec.table(3).lookup(Integer(2)) == 1);
  for (long p : {2L, 3L, 5L}) CHECK(rec.table(p).provenance == Provenance::manual);
  for (int i : {1, 2, 3, 4, 5, 7, 8}) CHECK(curve_record(i).table(2).provenance == Provenance::oracle);
}

TEST_CASE("local root number examples") {
  const CurveRecord& rec = curve_record(6);
  CHECK(local_root_number(rec, 5, Integer(7)) == -1);
  CHECK(local_root_number(rec, 5, Integer(5)) == 1);
  CHECK(local_root_number(rec, 5, Integer(1)) == 1);
  CHECK(local_root_number_23(rec, 2, Integer(7)) == -1);
  CHECK(local_root_number_23(rec, 3, Integer(2)) == 1);
  CHECK(local_root_number_23(rec, 2, Integer(2)) == 1);
  CHECK(jacobi_factor(Integer(7), Integer(30)) == -1);
  CHECK(jacobi_factor(Integer(-7), Integer(30)) == -1);
  CHECK(jacobi_factor(Integer(30), Integer(30)) == 1);
  CHECK_THROWS_AS(local_root_number(rec, 3, Integer(1)), Error);
  CHECK_THROWS_AS(local_root_number_23(rec, 5, Integer(1)), Error);
  try {
    local_root_number_23(rec, 2, Integer(12));
    FAIL("expected not_squarefree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_squarefree);
  }
  CHECK(rec.multiplicative_at(5));
}

TEST_CASE("global root number examples") {
  CHECK(global_root_number(6, Integer(1)) == 1);
  CHECK(global_root_number(6, Integer(7)) == -1);
  CHECK(global_root_number(6, Integer(-7)) == -1);
  CHECK_THROWS_AS(global_root_number(6, Integer(12)), Error);
}

TEST_CASE("p >= 5 factors agree with the reduction-type oracle") {
  for (int i = 1; i <= 8; ++i) {
    const CurveRecord& rec = curve_record(i);
    for (long p : rec.bad_primes_ge5) {
      for (int sign : {1, -1}) {
        for (long t : squarefree_upto(400, sign)) {
          const int expected = rohrlich(quadratic_twist(rec.model, Integer(t)), p);
          CHECK_MESSAGE(local_root_number(rec, p, Integer(t)) == expected, "curve ", i, " p=", p, " t=", t);
        }
      }
    }
    // a good prime: +1 unless it divides t
    CHECK(local_root_number(rec, 7, Integer(1)) == 1);
  }
}

TEST_CASE("E6 W5: formula path matches the table") {
  const CurveRecord& rec = curve_record(6);
  for (int sign : {1, -1}) {
    for (long t : squarefree_upto(500, sign)) {
      if (t % 5 == 0) continue;
      CHECK(local_root_number(rec, 5, Integer(t)) == local_root_number_from_table(rec, 5, Integer(t)));
    }
  }
}

TEST_CASE("global root numbers agree with the independent oracle") {
  std::ifstream in(table_directory() / "global_oracle.txt");
  REQUIRE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int curve = 0;
    long t = 0, w = 0;
    ls >> curve >> t >> w;
    CHECK_MESSAGE(global_root_number(curve, Integer(t)) == w, "curve ", curve, " t=", t);
    ++n;
  }
  CHECK(n >= 400);
}

TEST_CASE("table periods divide the local periods") {
  for (int i = 1; i <= 8; ++i) {
    const CurveRecord& rec = curve_record(i);
    REQUIRE(rec.local_periods.size() == rec.bad_primes_ge5.size() + 3);
    CHECK(rec.local_periods[0] % rec.table(2).modulus == 0);
    CHECK(rec.local_periods[1] % rec.table(3).modulus == 0);
    for (std::size_t k = 0; k < rec.bad_primes_ge5.size(); ++k) {
      const long p = rec.bad_primes_ge5[k];
      if (rec.tables.count(p)) CHECK(rec.local_periods[k + 2] % rec.table(p).modulus == 0);
    }
  }
}

TEST_CASE("E6 good classes") {
  const std::vector<std::int64_t> plus = {6,  7,  9,  11, 14, 15, 22, 26, 30,  35,  39,  41,  43,  50,  51,  53,
                                          54, 58, 59, 61, 65, 66, 67, 71, 73,  74,  75,  77,  81,  82,  85,  86,
                                          89, 90, 93, 95, 97, 99, 103, 105, 109, 110, 111, 114, 117, 118, 119};
  const std::vector<std::int64_t> minus = {1,  2,  3,  5,  10, 13, 17, 18, 19, 21, 23, 25, 27, 29, 31,
                                           33, 34, 37, 38, 42, 45, 46, 47, 49, 55, 57, 62, 63, 69, 70,
                                           78, 79, 83, 87, 91, 94, 98, 101, 102, 106, 107, 113, 115};
  const auto gp = good_classes(6, Sign::positive);
  const auto gm = good_classes(6, Sign::negative);
  CHECK(gp.modulus == 120);
  CHECK(gp.residues == plus);
  CHECK(gm.residues == minus);
}

TEST_CASE("good class counts") {
  const std::array<std::pair<std::size_t, std::size_t>, 8> counts = {
      {{2416, 2336}, {117, 117}, {497, 493}, {33, 33}, {99, 99}, {47, 43}, {497, 493}, {1037, 1033}}};
  for (int i = 1; i <= 8; ++i) {
    CHECK_MESSAGE(good_classes(i, Sign::positive).size() == counts[i - 1].first, "curve ", i);
    CHECK_MESSAGE(good_classes(i, Sign::negative).size() == counts[i - 1].second, "curve ", i);
  }
}

TEST_CASE("parallel and serial good classes agree") {
  for (int i : {1, 6, 8}) {
    for (Sign s : {Sign::positive, Sign::negative}) {
      CHECK(good_classes(curve_record(i), s).residues == good_classes_serial(curve_record(i), s).residues);
    }
  }
}

TEST_CASE("period verification") {
  const CurveRecord& rec = curve_record(6);
  const auto ok = verify_period(rec, Sign::positive, 5000);
  CHECK(ok.periodic);
  CHECK(ok.modulus == 120);
  CHECK(ok.checked > 3000);
  const auto bad = verify_period(rec, Sign::positive, 5000, 60);
  CHECK_FALSE(bad.periodic);
  REQUIRE(bad.witness);
  CHECK(bad.witness->first % 60 == bad.witness->second % 60);
  CHECK(global_root_number(6, Integer(bad.witness->first)) != global_root_number(6, Integer(bad.witness->second)));
  CHECK(verify_period(curve_record(8), Sign::positive, 2000).periodic);
  CHECK(verify_period(curve_record(4), Sign::positive, 3000).periodic);
  CHECK(verify_period(curve_record(4), Sign::negative, 3000).periodic);
  CHECK(verify_period(rec, Sign::negative, 3000).periodic);

  const auto serial = verify_period_serial(rec, Sign::positive, 5000, 60);
  CHECK(serial.witness == bad.witness);

  // no proper divisor of 120 works
  for (std::int64_t d : {60, 40, 24}) CHECK_FALSE(verify_period(rec, Sign::positive, 3000, d).periodic);
}

TEST_CASE("sign dependence") {
  // E6: t and -t fall in different classes for some residues
  const auto gp = good_classes(6, Sign::positive);
  const auto gm = good_classes(6, Sign::negative);
  CHECK(gp.residues != gm.residues);
}
