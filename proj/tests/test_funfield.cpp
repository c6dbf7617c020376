#include "quintforge/error.hpp"
#include "quintforge/funfield.hpp"

#include "printers.hpp"

using namespace quintforge;

namespace {

const RationalFunction u = RationalFunction::variable();

}  // namespace

TEST_CASE("generators lie on E") {
  const auto& E = curve_E();
  for (int k = 1; k <= 5; ++k) CHECK(E.on_curve(generator(k)));
  CHECK(E.on_curve(FunctionFieldPoint::at_infinity()));
  FunctionFieldPoint shifted = generator(1);
  shifted.x += RationalFunction(1);
  CHECK_FALSE(E.on_curve(shifted));
  CHECK_THROWS_AS(E.add(shifted, generator(2)), Error);
}

TEST_CASE("j-invariant of E is neither 0 nor 1728") {
  const auto j = curve_E().j_invariant();
  CHECK_FALSE(j.is_constant());
  CHECK_FALSE(j == RationalFunction(0));
  CHECK_FALSE(j == RationalFunction(1728));
}

TEST_CASE("group law") {
  const auto& E = curve_E();
  const auto& S1 = generator(1);
  const auto& S2 = generator(2);
  const auto& S3 = generator(3);
  CHECK(E.add(S1, FunctionFieldPoint::at_infinity()) == S1);
  CHECK(E.add(S1, E.negate(S1)).infinity);
  const auto s12 = E.add(S1, S2);
  CHECK(E.on_curve(s12));
  CHECK(s12 == E.add(S2, S1));
  CHECK(E.add(s12, S3) == E.add(S1, E.add(S2, S3)));
  FunctionFieldPoint rep;
  for (long n = 1; n <= 4; ++n) {
    rep = E.add(rep, S1);
    CHECK(E.multiply(S1, n) == rep);
  }
  CHECK(E.multiply(S1, -2) == E.negate(E.add(S1, S1)));
}

TEST_CASE("points Q_1..Q_8") {
  const auto& E = curve_E();
  for (int i = 1; i <= 8; ++i) {
    CAPTURE(i);
    const auto& Q = table1_point(i);
    CHECK(E.on_curve(Q));
    CHECK(Q == combine_generators(table1_combination(i)));
    CHECK(squarefree_class_of_point(Q) == family(i).base_poly);
  }
  CHECK(table1_point(8) == E.add(E.negate(generator(4)), generator(5)));
}

TEST_CASE("quartic model and the birational map") {
  const QuarticModel& m = quartic_model();
  CHECK(m.lambda == -(u * u * RationalFunction(4) - RationalFunction(1)) / (RationalFunction(4) * (u * u - RationalFunction(1))));
  const QuarticPointFF base{RationalFunction(1), curve_C_base_z1()};
  CHECK(on_curve_C(base));
  const FunctionFieldPoint P = quartic_to_E(base);
  CHECK_FALSE(P.infinity);
  CHECK(curve_E().on_curve(P));
  const QuarticPointFF back = map_to_quartic(P);
  CHECK(back.c == base.c);
  CHECK(back.z1 == base.z1);
  CHECK(quartic_to_E(QuarticPointFF{RationalFunction(1), -curve_C_base_z1()}).infinity);
  try {
    map_to_quartic(FunctionFieldPoint::at_infinity());
    FAIL("expected no affine image");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_affine_image);
  }
  for (int i = 1; i <= 8; ++i) {
    CAPTURE(i);
    const QuarticPointFF q = map_to_quartic(table1_point(i));
    CHECK(on_curve_C(q));
    CHECK(quartic_to_E(q) == table1_point(i));
  }
}

TEST_CASE("point quintuples are rescaled families") {
  for (int i = 1; i <= 8; ++i) {
    CAPTURE(i);
    const auto pq = point_to_quintuple(table1_point(i));
    CHECK(pq.candidate.status.is_quintuple());
    const FamilyRecord& fam = family(i);
    const RationalFunction rho = pq.candidate.elements[0] / RationalFunction(fam.elements[0]);
    for (int k = 0; k < 5; ++k) CHECK(pq.candidate.elements[k] == rho * RationalFunction(fam.elements[k]));
    CHECK(pq.candidate.q == rho * rho * RationalFunction(fam.q()));
    if (i == 7) CHECK(rho == RationalFunction(1) / (u * u * RationalFunction(4) - RationalFunction(1)));
    if (i == 8) CHECK(rho == RationalFunction(1) / (u * u * RationalFunction(8) + RationalFunction(7)).square());
    if (i == 6) {
      CHECK(rho == RationalFunction(1) / RationalFunction(Polynomial::parse("4*u^4 - 16*u^3 + 8*u^2 + 4*u - 9")).square());
    }
  }
  CHECK_THROWS_AS(point_to_quintuple(FunctionFieldPoint::at_infinity()), Error);
}
