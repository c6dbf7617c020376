#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B over Q or Q(u) and the
// chord-tangent law on affine coordinates.

#include "quintforge/error.hpp"
#include "quintforge/field.hpp"

#include <cstdlib>
#include <span>
#include <string>
#include <utility>

namespace quintforge {

template <class F>
struct CurvePoint {
  bool infinity = true;
  F x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(F x, F y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

template <class F>
class WeierstrassCurve {
 public:
  WeierstrassCurve(F A, F B) : A_(std::move(A)), B_(std::move(B)) {
    if (is_zero(discriminant())) throw Error(Errc::degenerate, "singular Weierstrass curve");
  }

  const F& A() const { return A_; }
  const F& B() const { return B_; }
  F discriminant() const { return F(-16) * (F(4) * A_ * A_ * A_ + F(27) * B_ * B_); }
  // 1728 * 4A^3 / (4A^3 + 27B^2)
  F j_invariant() const {
    const F a3 = F(4) * A_ * A_ * A_;
    return F(1728) * a3 / (a3 + F(27) * B_ * B_);
  }

  bool on_curve(const CurvePoint<F>& P) const {
    if (P.infinity) return true;
    return P.y * P.y == (P.x * P.x + A_) * P.x + B_;
  }

  CurvePoint<F> negate(const CurvePoint<F>& P) const {
    if (P.infinity) return P;
    return CurvePoint<F>::affine(P.x, -P.y);
  }

  // Checked: both inputs must lie on the curve.
  CurvePoint<F> add(const CurvePoint<F>& P, const CurvePoint<F>& Q) const {
    if (!on_curve(P) || !on_curve(Q)) throw Error(Errc::off_curve, "group law applied to a point off the curve");
    return add_unchecked(P, Q);
  }

  CurvePoint<F> add_unchecked(const CurvePoint<F>& P, const CurvePoint<F>& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F lambda;
    if (P.x == Q.x) {
      if (!(P.y == Q.y) || is_zero(P.y)) return CurvePoint<F>::at_infinity();
      lambda = (F(3) * P.x * P.x + A_) / (F(2) * P.y);
    } else {
      lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    F x3 = lambda * lambda - P.x - Q.x;
    F y3 = lambda * (P.x - x3) - P.y;
    return CurvePoint<F>::affine(std::move(x3), std::move(y3));
  }

  CurvePoint<F> multiply(const CurvePoint<F>& P, long n) const {
    if (!on_curve(P)) throw Error(Errc::off_curve, "scalar multiple of a point off the curve");
    return multiply_unchecked(P, n);
  }

  CurvePoint<F> multiply_unchecked(CurvePoint<F> P, long n) const {
    if (n < 0) {
      P = negate(P);
      n = -n;
    }
    CurvePoint<F> acc;
    while (n) {
      if (n & 1) acc = add_unchecked(acc, P);
      n >>= 1;
      if (n) P = add_unchecked(P, P);
    }
    return acc;
  }

 private:
  F A_, B_;
};

}  // namespace quintforge
