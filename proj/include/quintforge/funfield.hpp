#pragma once

// The curve E over Q(u) attached to the quartic z_1^2 = sum f_i(u) c^i, its
// points S_1..S_5 and the combinations Q_1..Q_8 whose quintuples give the
// eight families.

#include "quintforge/polynomial.hpp"
#include "quintforge/quintuple.hpp"
#include "quintforge/rational_function.hpp"
#include "quintforge/weierstrass.hpp"

#include <array>

namespace quintforge {

using FunctionFieldCurve = WeierstrassCurve<RationalFunction>;
using FunctionFieldPoint = CurvePoint<RationalFunction>;

// y^2 = x^3 - 27 P_8(u) x + 54 P_12(u)
const FunctionFieldCurve& curve_E();
// S_1..S_5 (index 1..5).
const FunctionFieldPoint& generator(int k);
// Coefficients k_1..k_5 of Q_i = sum k_j S_j.
const std::array<int, 5>& table1_combination(int i);
// Q_i; all eight are computed together (in parallel) on first use and cached.
const FunctionFieldPoint& table1_point(int i);
// Serial reference path for the same combinations, without caching.
FunctionFieldPoint combine_generators(const std::array<int, 5>& k);

// Data of the quartic z^2 = g(w), g(w) = Q(1 + w) = a w^4 + b w^3 + cc w^2
// + d w + q0^2, and of the cubic model Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 +
// a4 X + a6 obtained from it. E is the twist-free rescaling of that cubic by
// lambda: x_E = lambda^2 (36 X + 3 b2), y_E = lambda^3 * 108 (2Y + a1 X + a3).
struct QuarticModel {
  RationalFunction a, b, cc, d, q0;
  RationalFunction a1, a2, a3, a4, a6, b2;
  RationalFunction lambda;
};
const QuarticModel& quartic_model();

struct QuarticPointFF {
  RationalFunction c, z1;
};

// True iff z_1^2 == sum f_i c^i identically.
bool on_curve_C(const QuarticPointFF& pt);

// Image on the quartic of a point of E. Throws Errc::no_affine_image for
// infinity and the other exceptional points of the birational map.
QuarticPointFF map_to_quartic(const FunctionFieldPoint& P);
// Inverse direction. (1, q0) goes to infinity and (1, -q0) to a finite point;
// throws Errc::off_curve for any other c == 1 input.
FunctionFieldPoint quartic_to_E(const QuarticPointFF& pt);

struct PointQuintuple {
  QuarticPointFF quartic;
  QuintupleCandidate<RationalFunction> candidate;
};

// c(u) -> conic parametrization -> (p, 1, c, c + p + 1) -> {A, B, C, D, x^2}.
// Throws Errc::degenerate naming the vanishing quantity.
PointQuintuple point_to_quintuple(const FunctionFieldPoint& P);

// Canonical squarefree class of alpha(u) x(u)^2.
Polynomial squarefree_class_of_point(const FunctionFieldPoint& P);

}  // namespace quintforge
