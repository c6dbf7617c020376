// End-to-end acceptance checks, one PASS/FAIL line per criterion.

#include "quintforge/density.hpp"
#include "quintforge/error.hpp"
#include "quintforge/funfield.hpp"
#include "quintforge/quintuple.hpp"
#include "quintforge/twist.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace quintforge;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(int n, const std::string& name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) {
    out.ok = false;
    out.detail << " [over time limit " << limit_seconds << "s]";
  }
  if (!out.ok) ++failures;
  std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << secs << "s)"
            << out.detail.str() << std::endl;
}

Integer pow_int(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

long vp(const Integer& n, long p) { return static_cast<long>(valuation_and_strip(n, Integer(p)).exponent); }

Rational random_rational(std::mt19937_64& rng, long range) {
  const long n = static_cast<long>(rng() % (2 * range + 1)) - range;
  const long d = static_cast<long>(rng() % 12) + 1;
  return make_rational(Integer(n), Integer(d));
}

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_rational(rng, 9));
  if (c.back() == 0) c.back() = 1;
  return Polynomial(c);
}

}  // namespace

int main() {
  run(1, "family identities", 10, [](Outcome& o) {
    int squares = 0;
    for (int i = 1; i <= 8; ++i) {
      const FamilySymbolicReport r = family_verify_symbolic(i);
      squares += r.report.square_pairs();
      o.expect(r.valid(), "family " + std::to_string(i));
      const FamilyRecord& fam = family(i);
      o.expect(squarefree_class(RationalFunction(fam.q())).representative() == fam.base_poly,
               "P_" + std::to_string(i) + " is the canonical class of q_" + std::to_string(i));
    }
    o.expect(squares == 80, "80 square conditions, got " + std::to_string(squares));
  });

  run(2, "function-field curve suite", 600, [](Outcome& o) {
    const FunctionFieldCurve& E = curve_E();
    for (int k = 1; k <= 5; ++k) o.expect(E.on_curve(generator(k)), "S" + std::to_string(k) + " on E");
    for (int i = 1; i <= 8; ++i) {
      const FunctionFieldPoint& Q = table1_point(i);
      o.expect(E.on_curve(Q), "Q" + std::to_string(i) + " on E");
      o.expect(squarefree_class_of_point(Q) == family(i).base_poly, "class of Q" + std::to_string(i));
    }
  });

  run(3, "E6 invariants", 5, [](Outcome& o) {
    const CurveRecord& rec = curve_record(6);
    o.expect(rec.delta == pow_int(2, 14) * pow_int(3, 18) * pow_int(5, 2), "discriminant");
    const Integer c4 = rec.model.c4(), c6 = rec.model.c6();
    o.expect(vp(c4, 2) == 4 && vp(c6, 2) == 6 && vp(rec.delta, 2) == 14, "valuations at 2");
    o.expect(vp(c4, 3) == 4 && vp(c6, 3) == 6 && vp(rec.delta, 3) == 18, "valuations at 3");
    o.expect(reduce_abc(4, 6, 14) == ReducedValuations{0, 0, 2}, "reduced at 2");
    o.expect(reduce_abc(4, 6, 18) == ReducedValuations{0, 0, 6}, "reduced at 3");
  });

  run(4, "E6 good classes", 5, [](Outcome& o) {
    const std::vector<std::int64_t> plus = {6,  7,  9,  11, 14, 15, 22, 26, 30,  35,  39,  41,  43,  50,  51,  53,
                                            54, 58, 59, 61, 65, 66, 67, 71, 73,  74,  75,  77,  81,  82,  85,  86,
                                            89, 90, 93, 95, 97, 99, 103, 105, 109, 110, 111, 114, 117, 118, 119};
    const std::vector<std::int64_t> minus = {1,  2,  3,  5,  10, 13, 17, 18, 19, 21, 23, 25, 27, 29, 31,
                                             33, 34, 37, 38, 42, 45, 46, 47, 49, 55, 57, 62, 63, 69, 70,
                                             78, 79, 83, 87, 91, 94, 98, 101, 102, 106, 107, 113, 115};
    o.expect(good_classes(6, Sign::positive).residues == plus, "47 positive classes");
    o.expect(good_classes(6, Sign::negative).residues == minus, "43 negative classes");
  });

  run(5, "E6 period and sign flip", 60, [](Outcome& o) {
    const CurveRecord& rec = curve_record(6);
    o.expect(verify_period(rec, Sign::positive, 5000).periodic, "period 120");
    for (std::int64_t d = 1; d < 120; ++d) {
      if (120 % d) continue;
      o.expect(!verify_period(rec, Sign::positive, 5000, d).periodic, "divisor " + std::to_string(d) + " fails");
    }
    std::vector<std::vector<int>> pos(120), neg(120);
    for (long n = 1; n <= 2000; ++n) {
      if (!is_squarefree(Integer(n))) continue;
      pos[n % 120].push_back(global_root_number(rec, Integer(n)));
      neg[mod_floor(-n, 120)].push_back(global_root_number(rec, Integer(-n)));
    }
    long pairs = 0;
    for (int r = 0; r < 120; ++r) {
      for (int w : pos[r]) {
        for (int w2 : neg[r]) {
          ++pairs;
          if (w != -w2) {
            o.expect(false, "sign flip in class " + std::to_string(r));
            return;
          }
        }
      }
    }
    o.expect(pairs > 10000, "enough pairs");
  });

  run(6, "density", 5, [](Outcome& o) {
    const DensityResult plus = density_union(Sign::positive);
    const DensityResult minus = density_union(Sign::negative);
    o.expect(plus.admissible == 296010, "296010 admissible");
    o.expect(plus.count() == 295026, "positive 295026, got " + std::to_string(plus.count()));
    o.expect(minus.count() == 295435, "negative 295435, got " + std::to_string(minus.count()));
    o.expect(density_union(Sign::positive, {6}).count() == 154583, "curve 6 alone 154583");
  });

  run(7, "end-to-end D(-7)-quintuples", 5, [](Outcome& o) {
    const auto pt = find_point(Integer(-7), 6, 5);
    if (!pt) {
      o.expect(false, "point found");
      return;
    }
    o.expect(pt->u == 3 && pt->s == 3, "(u, s) = (3, 3)");
    const Quintuple<Rational> first = emit_quintuple(*pt);
    o.expect(first.q == -7 && verify_quintuple(first.elements, first.q).valid(), "first quintuple");
    const QuarticPoint next = chord_tangent_next(*pt);
    o.expect(Rational(-7) * next.s * next.s == family(6).base_poly.evaluate(next.u), "doubled point on twist");
    const Quintuple<Rational> second = emit_quintuple(next);
    o.expect(second.q == -7 && verify_quintuple(second.elements, second.q).valid(), "second quintuple");
    auto a = first.elements, b = second.elements;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    o.expect(a != b, "distinct quintuples");
  });

  run(8, "property suites", 120, [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    int built = 0, attempts = 0;
    while (built < 50 && attempts < 5000) {
      ++attempts;
      const Rational u = random_rational(rng, 40), c = random_rational(rng, 40);
      std::optional<QuintupleCandidate<Rational>> cand;
      try {
        cand = construct_quintuple(specialized_point(u, c));
      } catch (const Error&) {
        continue;
      }
      if (!cand->status.distinct_nonzero) continue;
      ++built;
      o.expect(cand->report.square_pairs() == 9 && cand->status.nine_pairs_square,
               "nine squares at u=" + u.get_str() + " c=" + c.get_str());
    }
    o.expect(built == 50, "50 non-degenerate draws");

    const FunctionFieldCurve& E = curve_E();
    const FunctionFieldPoint &S1 = generator(1), &S2 = generator(2), &S3 = generator(3);
    o.expect(E.add(E.add(S1, S2), S3) == E.add(S1, E.add(S2, S3)), "associativity");
    o.expect(E.add(S2, E.negate(S2)).infinity, "inverse");
    o.expect(E.add(S1, S2) == E.add(S2, S1), "commutativity");

    for (int k = 0; k < 30; ++k) {
      const RationalFunction f(random_poly(rng, 3), random_poly(rng, 2));
      const RationalFunction g(random_poly(rng, 2), random_poly(rng, 3));
      if (f.is_zero() || g.is_zero()) continue;
      const Polynomial cf = squarefree_class(f).representative(), cg = squarefree_class(g).representative();
      o.expect(squarefree_class(f * g) == squarefree_class(RationalFunction(cf * cg)), "class multiplicative");
      o.expect(squarefree_class(f * g.square()) == squarefree_class(f), "class ignores squares");
      const Polynomial p = random_poly(rng, 4);
      const auto root = polynomial_square_root(p * p);
      o.expect(root && (*root == p || *root == -p), "square root round trip");
    }
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << 8 - failures << "/8" << std::endl;
  return failures ? 1 : 0;
}
