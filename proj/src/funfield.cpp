#include "quintforge/funfield.hpp"

#include "quintforge/error.hpp"

#include <omp.h>

#include <mutex>
#include <string_view>

namespace quintforge {

namespace {

RationalFunction P(std::string_view s) { return RationalFunction(Polynomial::parse(s)); }

FunctionFieldPoint make_point(std::string_view xn, std::string_view xd, std::string_view yn, std::string_view yd) {
  return FunctionFieldPoint::affine(P(xn) / P(xd), P(yn) / P(yd));
}

}  // namespace

const FunctionFieldCurve& curve_E() {
  static const FunctionFieldCurve E(
      RationalFunction(-27) *
          P("256*u^8 + 64*u^7 - 1280*u^6 + 1216*u^5 + 3265*u^4 - 2372*u^3 + 310*u^2 - 332*u + 169"),
      RationalFunction(54) * P("4096*u^12 + 1536*u^11 - 30624*u^10 - 18400*u^9 + 74448*u^8 + 125568*u^7 - "
                               "59313*u^6 - 165978*u^5 + 154773*u^4 - 40360*u^3 + 5187*u^2 - 6474*u + 2197"));
  return E;
}

const FunctionFieldPoint& generator(int k) {
  static const std::array<FunctionFieldPoint, 5> S = {
      make_point("48*u^4 + 168*u^3 - 9*u^2 - 138*u + 39", "1", "-1944*u^5 - 1944*u^4 + 4374*u^3 + 486*u^2 - 972*u",
                 "1"),
      make_point("48*u^6 + 588*u^5 + 753*u^4 - 1014*u^3 + 24*u^2 - 6*u + 39", "u^2 + 2*u + 1",
                 "-5832*u^8 - 25596*u^7 - 6156*u^6 + 48438*u^5 - 8100*u^4 + 324*u^3 - 3240*u^2 + 162*u",
                 "u^3 + 3*u^2 + 3*u + 1"),
      make_point("48*u^6 + 204*u^5 - 855*u^4 + 78*u^3 + 2028*u^2 - 1098*u + 27", "u^2 - 6*u + 9",
                 "-5832*u^8 + 21060*u^7 + 972*u^6 - 94446*u^5 + 102384*u^4 + 34020*u^3 - 67392*u^2 + 486*u + 8748",
                 "u^3 - 9*u^2 + 27*u - 27"),
      make_point("48*u^4 + 492*u^3 + 693*u^2 - 84*u - 69", "1",
                 "-5832*u^5 - 19764*u^4 - 15228*u^3 + 3402*u^2 + 2754*u - 324", "1"),
      make_point("48*u^6 + 12*u^5 - 291*u^4 + 66*u^3 + 600*u^2 + 66*u - 69", "u^2 + 2*u + 1",
                 "-1080*u^8 - 2484*u^7 + 6480*u^6 + 17550*u^5 - 1512*u^4 - 18468*u^3 - 3348*u^2 + 2538*u + 324",
                 "u^3 + 3*u^2 + 3*u + 1"),
  };
  if (k < 1 || k > 5) throw Error(Errc::domain, "generator index must be 1..5");
  return S[k - 1];
}

const std::array<int, 5>& table1_combination(int i) {
  static const std::array<std::array<int, 5>, 8> K = {{
      {-4, -2, -2, 3, 5},
      {-4, -1, -2, 2, 4},
      {-3, -1, -2, 1, 4},
      {-3, -1, -1, 2, 3},
      {-2, -1, -2, 2, 4},
      {-2, 0, -2, 1, 3},
      {-1, -1, -1, 1, 3},
      {0, 0, 0, -1, 1},
  }};
  if (i < 1 || i > 8) throw Error(Errc::domain, "point index must be 1..8");
  return K[i - 1];
}

FunctionFieldPoint combine_generators(const std::array<int, 5>& k) {
  const FunctionFieldCurve& E = curve_E();
  FunctionFieldPoint acc;
  for (int j = 0; j < 5; ++j) {
    if (k[j] != 0) acc = E.add_unchecked(acc, E.multiply_unchecked(generator(j + 1), k[j]));
  }
  return acc;
}

const FunctionFieldPoint& table1_point(int i) {
  static std::array<FunctionFieldPoint, 8> Q;
  static std::once_flag once;
  table1_combination(i);  // index check
  std::call_once(once, [] {
    // touch the function-local statics before the parallel region
    curve_E();
    generator(1);
    std::array<std::array<FunctionFieldPoint, 6>, 5> multiples;
#pragma omp parallel for schedule(dynamic, 1)
    for (int j = 0; j < 5; ++j) {
      const FunctionFieldCurve& E = curve_E();
      multiples[j][0] = FunctionFieldPoint::at_infinity();
      multiples[j][1] = generator(j + 1);
      for (int m = 2; m <= 5; ++m) multiples[j][m] = E.add_unchecked(multiples[j][m - 1], multiples[j][1]);
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < 8; ++r) {
      const FunctionFieldCurve& E = curve_E();
      const auto& k = table1_combination(r + 1);
      FunctionFieldPoint acc;
      for (int j = 0; j < 5; ++j) {
        const FunctionFieldPoint& m = multiples[j][std::abs(k[j])];
        acc = E.add_unchecked(acc, k[j] < 0 ? E.negate(m) : m);
      }
      Q[r] = std::move(acc);
    }
  });
  return Q[i - 1];
}

namespace {

QuarticModel build_quartic_model() {
  const auto& f = curve_C_coefficients();
  QuarticModel m;
  // g(w) = Q(1 + w)
  m.a = f[4];
  m.b = f[3] + RationalFunction(4) * f[4];
  m.cc = f[2] + RationalFunction(3) * f[3] + RationalFunction(6) * f[4];
  m.d = f[1] + RationalFunction(2) * f[2] + RationalFunction(3) * f[3] + RationalFunction(4) * f[4];
  // The sign of q0 picks which of (1, +-z1) goes to infinity; lambda below
  // must carry the same sign for the Q_i classes to match the families.
  m.q0 = -curve_C_base_z1();
  const RationalFunction& q = m.q0;
  const RationalFunction two(2), four(4);
  m.a1 = m.d / q;
  m.a2 = m.cc - m.d * m.d / (four * q * q);
  m.a3 = two * q * m.b;
  m.a4 = RationalFunction(-4) * q * q * m.a;
  m.a6 = m.a2 * m.a4;
  m.b2 = m.a1 * m.a1 + four * m.a2;
  const RationalFunction b4 = two * m.a4 + m.a1 * m.a3;
  const RationalFunction b6 = m.a3 * m.a3 + four * m.a6;
  const RationalFunction c4 = m.b2 * m.b2 - RationalFunction(24) * b4;
  const RationalFunction c6 = -m.b2 * m.b2 * m.b2 + RationalFunction(36) * m.b2 * b4 - RationalFunction(216) * b6;
  const FunctionFieldCurve& E = curve_E();
  const RationalFunction c4E = -E.A() / RationalFunction(27);
  const RationalFunction c6E = -E.B() / RationalFunction(54);
  auto root = ratfunc_is_square((c6E / c6) / (c4E / c4));
  if (!root) throw Error(Errc::degenerate, "quartic model is a nontrivial twist of E");
  m.lambda = -*root;
  const RationalFunction l2 = m.lambda * m.lambda;
  if (!(l2 * l2 * c4 == c4E) || !(l2 * l2 * l2 * c6 == c6E)) {
    throw Error(Errc::degenerate, "quartic model is not isomorphic to E");
  }
  return m;
}

}  // namespace

const QuarticModel& quartic_model() {
  static const QuarticModel m = build_quartic_model();
  return m;
}

bool on_curve_C(const QuarticPointFF& pt) {
  const auto& f = curve_C_coefficients();
  RationalFunction rhs;
  for (int k = 4; k >= 0; --k) rhs = rhs * pt.c + f[k];
  return pt.z1 * pt.z1 == rhs;
}

QuarticPointFF map_to_quartic(const FunctionFieldPoint& P) {
  if (P.infinity) throw Error(Errc::no_affine_image, "the point at infinity has no image on the quartic");
  const QuarticModel& m = quartic_model();
  const RationalFunction l2 = m.lambda * m.lambda;
  const RationalFunction x = P.x / l2;
  const RationalFunction y = P.y / (l2 * m.lambda);
  const RationalFunction X = (x - RationalFunction(3) * m.b2) / RationalFunction(36);
  const RationalFunction Y = (y / RationalFunction(108) - m.a1 * X - m.a3) / RationalFunction(2);
  if (Y.is_zero()) throw Error(Errc::no_affine_image, "point with Y = 0 is exceptional for the quartic map");
  const RationalFunction& q = m.q0;
  const RationalFunction two_q = RationalFunction(2) * q;
  const RationalFunction w = (two_q * (X + m.cc) - m.d * m.d / two_q) / Y;
  QuarticPointFF out;
  out.c = RationalFunction(1) + w;
  out.z1 = -q + w * (w * X - m.d) / two_q;
  return out;
}

FunctionFieldPoint quartic_to_E(const QuarticPointFF& pt) {
  const QuarticModel& m = quartic_model();
  const RationalFunction& q = m.q0;
  const RationalFunction w = pt.c - RationalFunction(1);
  RationalFunction X, Y;
  if (w.is_zero()) {
    if (pt.z1 == q) return FunctionFieldPoint::at_infinity();
    if (!(pt.z1 == -q)) throw Error(Errc::off_curve, "c = 1 but z1 is not +-z1(base)");
    X = -m.a2;
    Y = m.a1 * m.a2 - m.a3;
  } else {
    const RationalFunction two_q = RationalFunction(2) * q;
    const RationalFunction w2 = w * w;
    X = (two_q * (pt.z1 + q) + m.d * w) / w2;
    Y = (RationalFunction(2) * two_q * q * (pt.z1 + q) + two_q * (m.d * w + m.cc * w2) - m.d * m.d * w2 / two_q) /
        (w2 * w);
  }
  const RationalFunction x = RationalFunction(36) * X + RationalFunction(3) * m.b2;
  const RationalFunction y = RationalFunction(108) * (RationalFunction(2) * Y + m.a1 * X + m.a3);
  const RationalFunction l2 = m.lambda * m.lambda;
  return FunctionFieldPoint::affine(l2 * x, l2 * m.lambda * y);
}

PointQuintuple point_to_quintuple(const FunctionFieldPoint& P) {
  PointQuintuple out;
  out.quartic = map_to_quartic(P);
  const RationalFunction u = RationalFunction::variable();
  out.candidate = construct_quintuple(specialized_point(u, out.quartic.c));
  const auto& st = out.candidate.status;
  if (!st.distinct_nonzero) throw Error(Errc::degenerate, out.candidate.report.failures.front());
  if (!st.nine_pairs_square || !st.ad_square) {
    throw Error(Errc::not_a_pair, "point quintuple fails a pair condition: " + out.candidate.report.failures.front());
  }
  return out;
}

Polynomial squarefree_class_of_point(const FunctionFieldPoint& P) {
  return squarefree_class(point_to_quintuple(P).candidate.q).representative();
}

}  // namespace quintforge
