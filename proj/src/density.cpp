#include "quintforge/density.hpp"

#include "quintforge/error.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace quintforge {

std::vector<std::int64_t> DensityResult::uncovered() const {
  std::vector<std::int64_t> out;
  for (std::int64_t r : admissible_classes(modulus).residues) {
    if (!covered.contains(r)) out.push_back(r);
  }
  return out;
}

namespace {

struct CurveMask {
  int index;
  std::int64_t n;
  std::vector<char> good;  // by residue mod n
};

std::vector<CurveMask> masks(Sign sign, const std::vector<int>& curves, bool parallel) {
  std::vector<CurveMask> out;
  for (int i : curves) {
    const CurveRecord& rec = curve_record(i);
    CurveMask m{i, rec.period, std::vector<char>(static_cast<std::size_t>(rec.period), 0)};
    const ResidueClassSet good = parallel ? good_classes(rec, sign) : good_classes_serial(rec, sign);
    for (std::int64_t r : good.residues) m.good[static_cast<std::size_t>(r)] = 1;
    out.push_back(std::move(m));
  }
  return out;
}

// Residue mod n seen by the curve for the class R (|q| for negatives).
inline std::int64_t key(std::int64_t R, std::int64_t n, Sign sign) {
  const std::int64_t r = R % n;
  return sign == Sign::positive ? r : (n - r) % n;
}

// Squares p^2 dividing m.
std::vector<std::int64_t> square_divisors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (const auto& [p, e] : factor(Integer(static_cast<long>(m)))) {
    if (e >= 2) out.push_back(p.get_si() * p.get_si());
  }
  return out;
}

bool admits(std::int64_t r, const std::vector<std::int64_t>& squares) {
  for (std::int64_t s : squares) {
    if (r % s == 0) return false;
  }
  return true;
}

bool covers_strict(const CurveMask& m, std::int64_t R, Sign sign) {
  const std::int64_t M = kDensityModulus;
  const std::int64_t L = std::lcm(M, m.n);
  const std::vector<std::int64_t> squares = square_divisors(L);
  for (std::int64_t lift = R; lift < L; lift += M) {
    if (!admits(lift, squares)) continue;
    if (!m.good[static_cast<std::size_t>(key(lift, m.n, sign))]) return false;
  }
  return true;
}

DensityResult run(Sign sign, const std::vector<int>& curves, bool parallel, bool strict) {
  const std::int64_t M = kDensityModulus;
  const std::vector<CurveMask> ms = masks(sign, curves, parallel);
  std::vector<int> cover(static_cast<std::size_t>(M), 0);
  std::vector<char> adm(static_cast<std::size_t>(M), 0);
  const std::vector<std::int64_t> squares = square_divisors(M);
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t R = 0; R < M; ++R) {
    if (!admits(R, squares)) continue;
    adm[static_cast<std::size_t>(R)] = 1;
    for (const CurveMask& m : ms) {
      const bool ok = (strict && M % m.n != 0) ? covers_strict(m, R, sign)
                                                : m.good[static_cast<std::size_t>(key(R, m.n, sign))] != 0;
      if (ok) {
        cover[static_cast<std::size_t>(R)] = m.index;
        break;
      }
    }
  }
  DensityResult res;
  res.sign = sign;
  res.modulus = M;
  res.covered.modulus = M;
  res.admissible = static_cast<std::size_t>(std::count(adm.begin(), adm.end(), 1));
  for (std::int64_t R = 0; R < M; ++R) {
    if (cover[static_cast<std::size_t>(R)]) {
      res.covered.residues.push_back(R);
      res.witness.push_back(cover[static_cast<std::size_t>(R)]);
    }
  }
  return res;
}

}  // namespace

DensityResult density_union(Sign sign, const std::vector<int>& curves) { return run(sign, curves, true, false); }

DensityResult density_union_serial(Sign sign, const std::vector<int>& curves) {
  return run(sign, curves, false, false);
}

DensityResult density_union_strict(Sign sign, const std::vector<int>& curves) {
  return run(sign, curves, true, true);
}

// ---------------------------------------------------------------------------

namespace {

bool degenerate_for_family(int i, const Rational& u, const Integer& q) {
  try {
    family_instantiate(i, u, Rational(q));
    return false;
  } catch (const Error& e) {
    if (e.code() == Errc::degenerate || e.code() == Errc::not_a_pair) return true;
    throw;
  }
}

// Candidates of height exactly h in search order.
std::vector<Rational> height_level(long h) {
  std::vector<Rational> out;
  if (h == 1) out.push_back(0);
  for (long am = 1; am <= h; ++am) {
    for (int sgn : {1, -1}) {
      if (am < h) {
        if (std::gcd(am, h) == 1) out.push_back(make_rational(Integer(sgn * am), Integer(h)));
      } else {
        for (long n = 1; n <= h; ++n) {
          if (std::gcd(am, n) == 1) out.push_back(make_rational(Integer(sgn * am), Integer(n)));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::optional<QuarticPoint> find_point(const Integer& q, int i, long height_bound) {
  if (height_bound < 1) throw Error(Errc::domain, "height bound must be at least 1");
  if (q == 0 || !is_squarefree(q)) throw Error(Errc::not_squarefree, "q = " + q.get_str() + " is not squarefree");
  const Polynomial& P = family(i).base_poly;
  const Rational qr(q);
  for (long h = 1; h <= height_bound; ++h) {
    const std::vector<Rational> us = height_level(h);
    const auto n = static_cast<long>(us.size());
    std::vector<std::optional<Rational>> hit(us.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
      const Rational v = P.evaluate(us[k]) / qr;
      if (v == 0) continue;
      auto s = rational_square_root(v);
      if (s && !degenerate_for_family(i, us[k], q)) hit[k] = s;
    }
    for (long k = 0; k < n; ++k) {
      if (hit[k]) return QuarticPoint{us[k], *hit[k], q, i};
    }
  }
  return std::nullopt;
}

std::optional<QuarticPoint> find_point_any(const Integer& q, long height_bound) {
  for (int i = 1; i <= 8; ++i) {
    if (auto pt = find_point(q, i, height_bound)) return pt;
  }
  return std::nullopt;
}

QuarticPoint chord_tangent_next(const QuarticPoint& pt) {
  const TwistModel model(family(pt.curve_index).base_poly, pt.q);
  if (!model.on_twist(pt.u, pt.s)) {
    throw Error(Errc::off_curve, "(" + pt.u.get_str() + ", " + pt.s.get_str() + ") is not on the twist");
  }
  const CurvePoint<Rational> P = model.to_curve(pt.u, pt.s);
  if (P.infinity || P.y == 0) throw Error(Errc::no_new_point, "point maps to 2-torsion; doubling gives nothing new");
  const auto E = model.curve().over_Q();
  CurvePoint<Rational> Q = P;
  for (int k = 2; k <= 8; ++k) {
    Q = E.add(Q, P);
    if (Q.infinity) throw Error(Errc::no_new_point, "point has order " + std::to_string(k));
    std::pair<Rational, Rational> us;
    try {
      us = model.from_curve(Q);
    } catch (const Error& e) {
      if (e.code() == Errc::no_affine_image) continue;
      throw;
    }
    const Rational u = us.first, s = abs(us.second);
    if (u == pt.u || s == 0 || degenerate_for_family(pt.curve_index, u, pt.q)) continue;
    return {u, s, pt.q, pt.curve_index};
  }
  throw Error(Errc::no_new_point, "no usable multiple of the point up to 8P");
}

Quintuple<Rational> emit_quintuple(const QuarticPoint& pt) {
  if (pt.s == 0) throw Error(Errc::degenerate, "s = 0: q would be 0");
  return family_instantiate(pt.curve_index, pt.u, Rational(pt.q));
}

}  // namespace quintforge
