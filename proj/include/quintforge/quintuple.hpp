#pragma once

// D(q)-tuples: sets where a_i a_j + q is a square for every pair. The
// constructor below builds {A, B, C, D, x^2} from a point (p, r, c, x) and
// works over Q and over Q(u) alike.

#include "quintforge/field.hpp"
#include "quintforge/polynomial.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quintforge {

// Element pairs in the order used by every report: (0,1), (0,2), ..., (3,4).
inline constexpr std::array<std::pair<int, int>, 10> kQuintuplePairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
}};
int pair_index(int i, int j);

template <class F>
struct ParamPoint {
  F p, r, c, x;
};

template <class F>
struct PairCheck {
  int i = 0;
  int j = 0;
  F value;                   // a_i a_j + q
  std::optional<F> witness;  // h with h^2 == value
};

template <class F>
struct VerifyReport {
  std::array<PairCheck<F>, 10> pairs;
  bool elements_nonzero = true;
  bool elements_distinct = true;
  bool q_nonzero = true;
  std::vector<std::string> failures;

  bool valid() const { return failures.empty(); }
  int square_pairs() const;
};

template <class F>
VerifyReport<F> verify_quintuple(const std::array<F, 5>& elements, const F& q);

// A verified D(q)-quintuple; witnesses[k] squares to the product of
// kQuintuplePairs[k] plus q.
template <class F>
struct Quintuple {
  std::array<F, 5> elements;
  F q;
  std::array<F, 10> witnesses;
};

// Verifies and packages; throws Errc::degenerate or Errc::not_a_pair naming
// the first failure.
template <class F>
Quintuple<F> make_quintuple(const std::array<F, 5>& elements, const F& q);

template <class F>
struct ScaledTuple {
  std::vector<F> elements;
  F q;
};

// (rho a_1, ..., rho a_n) is a D(q rho^2)-tuple whenever (a_i) is a D(q)-tuple.
template <class F>
ScaledTuple<F> scale_tuple(const std::vector<F>& elements, const F& q, const F& rho);
template <class F>
Quintuple<F> scale_quintuple(const Quintuple<F>& t, const F& rho);

template <class F>
struct RegularExtension {
  F A, D, k;
  bool a_degenerate = false;  // A == 0
  bool d_degenerate = false;  // D == 0
};

// Given a D(alpha x^2)-pair {B, C}: k^2 = BC + alpha x^2, A = B + C - 2k,
// D = B + C + 2k. Throws Errc::not_a_pair when BC + alpha x^2 is no square.
template <class F>
RegularExtension<F> regular_extension(const F& B, const F& C, const F& alpha, const F& x);

// b^2 = p^2 + r^2 - x^2 + (p^2 - x^2)(r^2 - x^2) / (c^2 + x^2 - p^2 - r^2),
// which equals p^2 + r^2 + alpha - c^2. Throws Errc::degenerate when the
// denominator vanishes.
template <class F>
F b_squared_relation(const ParamPoint<F>& pt);

// alpha = (c^2 - r^2)(c^2 - p^2) / (c^2 + x^2 - p^2 - r^2)
template <class F>
F alpha_of(const ParamPoint<F>& pt);

struct ConstructionStatus {
  bool distinct_nonzero = false;  // no element zero, no two equal
  bool nine_pairs_square = false;
  bool ad_square = false;         // the one pair the construction does not force
  bool is_quintuple() const { return distinct_nonzero && nine_pairs_square && ad_square; }
};

template <class F>
struct QuintupleCandidate {
  std::array<F, 5> elements;  // A, B, C, D, x^2
  F q;                        // alpha x^2
  F alpha;
  F b;
  VerifyReport<F> report;
  ConstructionStatus status;
};

// Throws Errc::degenerate when alpha is 0 or undefined and
// Errc::not_constructible when b^2 is not a square.
template <class F>
QuintupleCandidate<F> construct_quintuple(const ParamPoint<F>& pt);

// alpha after r = 1 and x = c + p + 1: (c - p)(c - 1) / 2.
template <class F>
F specialize_alpha(const F& c, const F& p);

template <class F>
struct ConicPoint {
  F p, b;
};

// Rational points of b^2 = p^2 + (1 - c)/2 p - (c^2 + c)/2 + 1 through (b, p) = (1, c).
// Throws Errc::pole when u^2 == 1.
template <class F>
ConicPoint<F> conic_parametrize(const F& u, const F& c);

// The point (p, r, c, x) = (p(u, c), 1, c, c + p + 1).
template <class F>
ParamPoint<F> specialized_point(const F& u, const F& c);

// f_0, ..., f_4 with z_1^2 = sum f_i(u) c^i.
const std::array<RationalFunction, 5>& curve_C_coefficients();
// z_1 at the point c = 1 of that quartic: 4u(u - 1)^2 / (u^2 - 1/4).
RationalFunction curve_C_base_z1();

struct FamilyRecord {
  int index = 0;
  std::array<Polynomial, 5> elements;
  Polynomial base_poly;      // P_i(u)
  Polynomial square_factor;  // s_i(u), q_i = P_i s_i^2

  Polynomial q() const { return base_poly * square_factor * square_factor; }
};

// Families 1..8 with integer-coefficient elements.
const FamilyRecord& family(int i);
// A fractional presentation of family 6; its elements times 16 are those of
// family(6).
const FamilyRecord& family6_fractional();

// Evaluates a family at u0 and optionally rescales it onto the twist by
// target_q: with P_i(u0) = target_q y1^2 (y1 > 0) the quintuple is scaled by
// eta = 1 / (y1 s_i(u0)), giving q = target_q.
// Throws Errc::degenerate (q(u0) = 0, zero or repeated element) and
// Errc::not_on_twist.
Quintuple<Rational> family_instantiate(const FamilyRecord& fam, const Rational& u0,
                                       const std::optional<Rational>& target_q = std::nullopt);
Quintuple<Rational> family_instantiate(int i, const Rational& u0,
                                       const std::optional<Rational>& target_q = std::nullopt);

struct FamilySymbolicReport {
  int index = 0;
  VerifyReport<RationalFunction> report;
  bool base_poly_class_matches = false;  // q and P_i agree modulo squares
  bool valid() const { return report.valid() && base_poly_class_matches; }
};

FamilySymbolicReport family_verify_symbolic(const FamilyRecord& fam);
FamilySymbolicReport family_verify_symbolic(int i);

}  // namespace quintforge
