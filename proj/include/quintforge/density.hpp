#pragma once

// Union of the good residue classes of the eight twist families modulo
// 394680, and the point search that turns a covered q into an explicit
// D(q)-quintuple.

#include "quintforge/quintuple.hpp"
#include "quintforge/residue.hpp"
#include "quintforge/twist.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace quintforge {

// 2^3 3 5 11 13 23: the lcm of the N_i with the 25 of N_1 cut down to 5.
inline constexpr std::int64_t kDensityModulus = 394680;

struct DensityResult {
  Sign sign = Sign::positive;
  std::int64_t modulus = kDensityModulus;
  std::size_t admissible = 0;
  ResidueClassSet covered;
  // For each covered residue (same order), the first curve index covering it.
  std::vector<int> witness;

  std::size_t count() const { return covered.size(); }
  std::vector<std::int64_t> uncovered() const;  // admissible residues not covered
};

// A class R in [0, M) is covered when it is admissible and, for some curve i
// of the subset, R mod N_i is good for the sign. Negative classes are keyed
// by |q|: R stands for q = -R', R' = R mod M, so the curve sees -(R mod N_i).
// For N_i not dividing M (E1: 6600) R is read through its least nonnegative
// representative.
DensityResult density_union(Sign sign, const std::vector<int>& curves = {1, 2, 3, 4, 5, 6, 7, 8});
DensityResult density_union_serial(Sign sign, const std::vector<int>& curves = {1, 2, 3, 4, 5, 6, 7, 8});
// Like density_union, but a curve with N_i not dividing M covers R only if
// every admissible lift of R mod lcm(M, N_i) is good.
DensityResult density_union_strict(Sign sign, const std::vector<int>& curves = {1, 2, 3, 4, 5, 6, 7, 8});

struct QuarticPoint {
  Rational u, s;
  Integer q;
  int curve_index = 0;

  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

// u = m/n in the order max(|m|, n), |m|, positive before negative, n; the
// first u with P_i(u) / q a nonzero square whose family value is not
// degenerate. q must be squarefree.
std::optional<QuarticPoint> find_point(const Integer& q, int i, long height_bound);
// Searches curves 1..8 in order.
std::optional<QuarticPoint> find_point_any(const Integer& q, long height_bound);

// A different point on q s^2 = P_i(u), taken from 2P, 3P, ... on the
// Weierstrass model. Throws Errc::no_new_point when P is 2-torsion or no
// multiple up to 8P gives a fresh non-degenerate affine point.
QuarticPoint chord_tangent_next(const QuarticPoint& pt);

// family_instantiate(i, u, q), verified.
Quintuple<Rational> emit_quintuple(const QuarticPoint& pt);

}  // namespace quintforge
