#include "quintforge/quintuple.hpp"

#include "quintforge/error.hpp"

#include <string_view>

namespace quintforge {

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 10; ++k) {
    if (kQuintuplePairs[k].first == i && kQuintuplePairs[k].second == j) return k;
  }
  throw Error(Errc::domain, "no element pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

template <class F>
int VerifyReport<F>::square_pairs() const {
  int n = 0;
  for (const auto& pc : pairs) n += pc.witness.has_value();
  return n;
}

template <class F>
VerifyReport<F> verify_quintuple(const std::array<F, 5>& elements, const F& q) {
  VerifyReport<F> rep;
  if (is_zero(q)) {
    rep.q_nonzero = false;
    rep.failures.push_back("q is zero");
  }
  for (int i = 0; i < 5; ++i) {
    if (is_zero(elements[i])) {
      rep.elements_nonzero = false;
      rep.failures.push_back("element " + std::to_string(i + 1) + " is zero");
    }
  }
  for (int k = 0; k < 10; ++k) {
    const auto [i, j] = kQuintuplePairs[k];
    if (elements[i] == elements[j]) {
      rep.elements_distinct = false;
      rep.failures.push_back("elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equal");
    }
    PairCheck<F>& pc = rep.pairs[k];
    pc.i = i;
    pc.j = j;
    pc.value = elements[i] * elements[j] + q;
    pc.witness = field_sqrt(pc.value);
    if (!pc.witness) {
      rep.failures.push_back("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             "): product plus q is not a square");
    }
  }
  return rep;
}

template <class F>
Quintuple<F> make_quintuple(const std::array<F, 5>& elements, const F& q) {
  VerifyReport<F> rep = verify_quintuple(elements, q);
  if (!rep.valid()) {
    const bool structural = !rep.q_nonzero || !rep.elements_nonzero || !rep.elements_distinct;
    throw Error(structural ? Errc::degenerate : Errc::not_a_pair, rep.failures.front());
  }
  Quintuple<F> t{elements, q, {}};
  for (int k = 0; k < 10; ++k) t.witnesses[k] = *rep.pairs[k].witness;
  return t;
}

template <class F>
ScaledTuple<F> scale_tuple(const std::vector<F>& elements, const F& q, const F& rho) {
  if (is_zero(rho)) throw Error(Errc::domain, "scaling factor is zero");
  ScaledTuple<F> out;
  out.elements.reserve(elements.size());
  for (const F& a : elements) out.elements.push_back(a * rho);
  out.q = q * rho * rho;
  return out;
}

template <class F>
Quintuple<F> scale_quintuple(const Quintuple<F>& t, const F& rho) {
  if (is_zero(rho)) throw Error(Errc::domain, "scaling factor is zero");
  Quintuple<F> out;
  for (int i = 0; i < 5; ++i) out.elements[i] = t.elements[i] * rho;
  out.q = t.q * rho * rho;
  // keep witnesses in the canonical sign field_sqrt would produce
  for (int k = 0; k < 10; ++k) {
    F w = t.witnesses[k] * rho;
    out.witnesses[k] = *field_sqrt(F(w * w));
  }
  return out;
}

template <class F>
RegularExtension<F> regular_extension(const F& B, const F& C, const F& alpha, const F& x) {
  const F k2 = B * C + alpha * x * x;
  auto k = field_sqrt(k2);
  if (!k) throw Error(Errc::not_a_pair, "BC + alpha x^2 = " + field_to_string(k2) + " is not a square");
  RegularExtension<F> ext;
  ext.k = *k;
  ext.A = B + C - F(2) * ext.k;
  ext.D = B + C + F(2) * ext.k;
  ext.a_degenerate = is_zero(ext.A);
  ext.d_degenerate = is_zero(ext.D);
  return ext;
}

template <class F>
F b_squared_relation(const ParamPoint<F>& pt) {
  const F p2 = pt.p * pt.p, r2 = pt.r * pt.r, c2 = pt.c * pt.c, x2 = pt.x * pt.x;
  const F den = c2 + x2 - p2 - r2;
  if (is_zero(den)) throw Error(Errc::degenerate, "p^2 + r^2 = c^2 + x^2");
  return p2 + r2 - x2 + (p2 - x2) * (r2 - x2) / den;
}

template <class F>
F alpha_of(const ParamPoint<F>& pt) {
  const F p2 = pt.p * pt.p, r2 = pt.r * pt.r, c2 = pt.c * pt.c, x2 = pt.x * pt.x;
  const F den = c2 + x2 - p2 - r2;
  if (is_zero(den)) throw Error(Errc::degenerate, "alpha undefined: c^2 + x^2 = p^2 + r^2");
  return (c2 - r2) * (c2 - p2) / den;
}

template <class F>
QuintupleCandidate<F> construct_quintuple(const ParamPoint<F>& pt) {
  QuintupleCandidate<F> out;
  out.alpha = alpha_of(pt);
  if (is_zero(out.alpha)) throw Error(Errc::degenerate, "alpha is zero (c^2 = r^2 or c^2 = p^2)");
  const F b2 = pt.p * pt.p + pt.r * pt.r + out.alpha - pt.c * pt.c;
  auto b = field_sqrt(b2);
  if (!b) throw Error(Errc::not_constructible, "b^2 = " + field_to_string(b2) + " is not a square");
  out.b = *b;
  const F a = pt.p - pt.r;
  const F d = pt.p + pt.r;
  out.elements = {a * a - out.alpha, b2 - out.alpha, pt.c * pt.c - out.alpha, d * d - out.alpha, pt.x * pt.x};
  out.q = out.alpha * pt.x * pt.x;
  out.report = verify_quintuple(out.elements, out.q);
  out.status.distinct_nonzero = out.report.elements_nonzero && out.report.elements_distinct;
  const int ad = pair_index(0, 3);
  out.status.ad_square = out.report.pairs[ad].witness.has_value();
  bool nine = true;
  for (int k = 0; k < 10; ++k) {
    if (k != ad) nine = nine && out.report.pairs[k].witness.has_value();
  }
  out.status.nine_pairs_square = nine;
  return out;
}

template <class F>
F specialize_alpha(const F& c, const F& p) {
  return (c - p) * (c - F(1)) / F(2);
}

template <class F>
ConicPoint<F> conic_parametrize(const F& u, const F& c) {
  const F den = u * u - F(1);
  if (is_zero(den)) throw Error(Errc::pole, "conic parametrization has a pole at u^2 = 1");
  const F half(F(1) / F(2));
  ConicPoint<F> out;
  out.p = (u * u * c + c * half + half - F(2) * u) / den;
  out.b = (u * u - F(3) * u * c * half - u * half + F(1)) / den;
  return out;
}

template <class F>
ParamPoint<F> specialized_point(const F& u, const F& c) {
  const ConicPoint<F> cp = conic_parametrize(u, c);
  return ParamPoint<F>{cp.p, F(1), c, c + cp.p + F(1)};
}

#define QUINTFORGE_INSTANTIATE(F)                                                                \
  template struct VerifyReport<F>;                                                               \
  template VerifyReport<F> verify_quintuple(const std::array<F, 5>&, const F&);                  \
  template Quintuple<F> make_quintuple(const std::array<F, 5>&, const F&);                       \
  template ScaledTuple<F> scale_tuple(const std::vector<F>&, const F&, const F&);                \
  template Quintuple<F> scale_quintuple(const Quintuple<F>&, const F&);                          \
  template RegularExtension<F> regular_extension(const F&, const F&, const F&, const F&);        \
  template F b_squared_relation(const ParamPoint<F>&);                                           \
  template F alpha_of(const ParamPoint<F>&);                                                     \
  template QuintupleCandidate<F> construct_quintuple(const ParamPoint<F>&);                      \
  template F specialize_alpha(const F&, const F&);                                               \
  template ConicPoint<F> conic_parametrize(const F&, const F&);                                  \
  template ParamPoint<F> specialized_point(const F&, const F&);

QUINTFORGE_INSTANTIATE(Rational)
QUINTFORGE_INSTANTIATE(RationalFunction)
#undef QUINTFORGE_INSTANTIATE

const std::array<RationalFunction, 5>& curve_C_coefficients() {
  static const std::array<RationalFunction, 5> f = [] {
    auto P = [](std::string_view s) { return RationalFunction(Polynomial::parse(s)); };
    const RationalFunction w = P("u^2 - 1/4");
    std::array<RationalFunction, 5> out;
    out[4] = P("u^4 + u^2 + 7");
    out[3] = RationalFunction(-3) * P("u^3 + 3*u - 1") * P("2*u^2 + 1") / w;
    out[2] = P("-16*u^8 + 16*u^7 + 242*u^6 - 76*u^5 + 199*u^4 - 166*u^3 + 47*u^2 + 10*u - 13") /
             (RationalFunction(8) * w * w);
    out[1] = RationalFunction(3) * P("u^3 + 3*u^2 + 1/2") * P("u^4 - 11/2*u^3 + 4*u^2 - 3/2*u + 1/2") / (w * w);
    out[0] = P("16*u^8 + 16*u^7 - 116*u^6 + 40*u^5 + 409*u^4 - 308*u^3 + 25*u^2 - 20*u + 19") /
             (RationalFunction(16) * w * w);
    return out;
  }();
  return f;
}

RationalFunction curve_C_base_z1() {
  const RationalFunction u = RationalFunction::variable();
  return RationalFunction(4) * u * (u - 1) * (u - 1) / (u * u - RationalFunction(Rational(1, 4)));
}

namespace {

struct FamilyText {
  std::array<const char*, 5> elements;
  const char* base;
  const char* square;
};

// Each family is a D(P_i s_i^2)-quintuple over Q[u].
constexpr std::array<FamilyText, 8> kFamilies = {{
    {{"900*u^4 + 4320*u^3 - 1161*u^2 - 3438*u + 1404", "1600*u^4 - 1600*u^3 + 1100*u^2 - 920*u + 396",
      "100*u^4 + 1760*u^3 - 1201*u^2 - 542*u + 324", "2500*u^4 - 4000*u^3 + 959*u^2 + 514*u + 36",
      "3600*u^4 - 2880*u^3 - 1584*u^2 + 864*u + 324"},
     "-1200*u^3 + 1645*u^2 - 410*u - 35",
     "60*u^2 - 24*u - 18"},
    {{"378*u^2 - 405*u + 108", "32*u^4 - 64*u^3 + 122*u^2 - 117*u + 36", "32*u^4 - 16*u^3 + 80*u^2 - 78*u + 18",
      "128*u^4 - 160*u^3 + 26*u^2 + 15*u", "288*u^4 - 288*u^3 + 90*u^2 - 9*u"},
     "-80*u^4 + 148*u^3 - 65*u^2 - 12*u + 9",
     "12*u - 3"},
    {{"352*u^4 - 244*u^3 - 129*u^2 + 122*u - 20", "4*u^6 + 16*u^5 + 48*u^4 + 48*u^3 - 164*u^2 + 104*u - 20",
      "4*u^6 - 24*u^5 + 112*u^4 - 120*u^3 + 47*u^2 - 14*u + 4",
      "16*u^6 - 16*u^5 - 32*u^4 + 100*u^3 - 105*u^2 + 58*u - 12",
      "36*u^6 - 96*u^5 + 112*u^4 - 88*u^3 + 48*u^2 - 16*u + 4"},
     "-28*u^4 - 44*u^3 + 157*u^2 - 106*u + 21",
     "6*u^3 - 8*u^2 + 4*u - 2"},  // 2(3u^2 - u + 1)(u - 1)
    {{"-54*u^2 + 171*u - 90", "32*u^4 - 96*u^3 - 6*u^2 + 127*u - 30", "32*u^4 + 144*u^3 - 24*u^2 - 26*u - 18",
      "128*u^4 + 96*u^3 - 6*u^2 + 31*u - 6", "288*u^4 + 576*u^3 - 54*u^2 - 117*u - 18"},
     "112*u^4 - 100*u^3 - 93*u^2 + 92*u - 11",
     "12*u + 3"},
    {{"450*u^4 - 1665*u^3 + 2052*u^2 - 909*u + 72", "50*u^4 - 545*u^3 + 1092*u^2 - 317*u + 44",
      "800*u^4 - 350*u^3 + 30*u^2 - 158*u + 2", "1250*u^4 - 125*u^3 + 192*u^2 - 41*u + 20",
      "4050*u^4 - 405*u^3 - 648*u^2 - 81*u"},
     "300*u^3 - 65*u^2 + 16*u + 1",
     "45*u^2 - 36*u - 9"},  // 9(5u + 1)(u - 1)
    {{"576*u^5 - 1296*u^4 + 288*u^3 + 1152*u^2 - 864*u + 144",
      "16*u^8 - 192*u^7 + 704*u^6 - 736*u^5 - 72*u^4 - 80*u^3 + 624*u^2 - 264*u + 81",
      "16*u^8 - 256*u^6 + 512*u^5 - 312*u^4 + 160*u^3 + 96*u^2 - 144*u + 9",
      "64*u^8 - 384*u^7 + 896*u^6 - 1024*u^5 + 528*u^4 - 128*u^3 + 288*u^2 + 48*u + 36",
      "144*u^8 - 576*u^7 + 576*u^6 - 288*u^5 + 504*u^4 + 144*u^3 + 144*u^2 + 72*u + 9"},
     "4*u^4 - 20*u^3 + 13*u^2 + 12*u",
     ""},  // 12(2u^2 + 1)(2u^2 - 4u - 1)(u - 1), built below
    {{"25*u^2 + 30*u + 20", "4*u^2 + 24*u + 20", "9*u^2 - 2*u - 4", "u^2 + 14*u + 12", "16*u^2 - 4"},
     "-40*u^3 - 19*u^2 + 38*u + 21",
     "2"},
    {{"324*u^4 + 423*u^2 - 198*u + 180", "64*u^4 + 320*u^3 - 52*u^2 - 248*u + 60",
      "100*u^4 - 256*u^3 + 239*u^2 + 106*u + 36", "4*u^4 + 128*u^3 - 49*u^2 - 86*u + 12",
      "144*u^4 - 576*u^3 + 432*u^2 + 288*u + 36"},
     "-144*u^3 + 61*u^2 + 94*u - 11",
     "12*u^2 - 24*u - 6"},
}};

std::array<FamilyRecord, 8> build_families() {
  std::array<FamilyRecord, 8> out;
  for (int i = 0; i < 8; ++i) {
    const FamilyText& t = kFamilies[i];
    FamilyRecord& r = out[i];
    r.index = i + 1;
    for (int k = 0; k < 5; ++k) r.elements[k] = Polynomial::parse(t.elements[k]);
    r.base_poly = Polynomial::parse(t.base);
    if (i == 5) {
      r.square_factor = Polynomial(12) * Polynomial::parse("2*u^2 + 1") * Polynomial::parse("2*u^2 - 4*u - 1") *
                        Polynomial::parse("u - 1");
    } else {
      r.square_factor = Polynomial::parse(t.square);
    }
  }
  return out;
}

FamilyRecord build_family6_fractional() {
  auto P = [](std::string_view s) { return Polynomial::parse(s); };
  FamilyRecord r;
  r.index = 6;
  r.elements[0] = P("9") * P("u - 1").pow(3) * P("4*u - 1") * P("u + 1");
  r.elements[1] = P("u^4 - 6*u^3 + 5*u + 27/4") * P("u^4 - 6*u^3 + 8*u^2 - 3*u + 3/4");
  r.elements[2] = P("u^8 - 16*u^6 + 32*u^5 - 39/2*u^4 + 10*u^3 + 6*u^2 - 9*u + 9/16");
  r.elements[3] = P("4*u^4 - 16*u^3 + 14*u^2 + 4*u + 3") * P("u^4 - 2*u^3 + 5/2*u^2 + 3/4");
  r.elements[4] = P("9") * P("u^2 - 2*u - 1/2").pow(2) * P("u^2 + 1/2").pow(2);
  r.base_poly = P("4*u^4 - 20*u^3 + 13*u^2 + 12*u");
  r.square_factor = P("3") * P("u - 1") * P("u^2 + 1/2") * P("u^2 - 2*u - 1/2");
  return r;
}

}  // namespace

const FamilyRecord& family(int i) {
  static const std::array<FamilyRecord, 8> families = build_families();
  if (i < 1 || i > 8) throw Error(Errc::domain, "family index must be 1..8, got " + std::to_string(i));
  return families[i - 1];
}

const FamilyRecord& family6_fractional() {
  static const FamilyRecord r = build_family6_fractional();
  return r;
}

Quintuple<Rational> family_instantiate(const FamilyRecord& fam, const Rational& u0,
                                       const std::optional<Rational>& target_q) {
  const std::string at = " at u = " + u0.get_str();
  const Rational s = fam.square_factor.evaluate(u0);
  const Rational base = fam.base_poly.evaluate(u0);
  const Rational q = base * s * s;
  if (q == 0) {
    throw Error(Errc::degenerate, std::string("q(u) vanishes") + at + (s == 0 ? " (square factor is zero)" : ""));
  }
  std::array<Rational, 5> e;
  for (int k = 0; k < 5; ++k) {
    e[k] = fam.elements[k].evaluate(u0);
    if (e[k] == 0) throw Error(Errc::degenerate, "element " + std::to_string(k + 1) + " vanishes" + at);
  }
  for (const auto& [i, j] : kQuintuplePairs) {
    if (e[i] == e[j]) {
      throw Error(Errc::degenerate, "elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                        " are both " + e[i].get_str() + at);
    }
  }
  Quintuple<Rational> t = make_quintuple(e, q);
  if (!target_q) return t;
  if (*target_q == 0) throw Error(Errc::not_on_twist, "target q is zero");
  const Rational ratio = base / *target_q;
  auto y1 = field_sqrt(ratio);
  if (!y1) {
    throw Error(Errc::not_on_twist, "P(u0)/q = " + ratio.get_str() + " is not a rational square" + at);
  }
  const Rational eta = 1 / (*y1 * s);
  return scale_quintuple(t, eta);
}

Quintuple<Rational> family_instantiate(int i, const Rational& u0, const std::optional<Rational>& target_q) {
  return family_instantiate(family(i), u0, target_q);
}

FamilySymbolicReport family_verify_symbolic(const FamilyRecord& fam) {
  FamilySymbolicReport out;
  out.index = fam.index;
  std::array<RationalFunction, 5> e;
  for (int k = 0; k < 5; ++k) e[k] = RationalFunction(fam.elements[k]);
  const RationalFunction q(fam.q());
  out.report = verify_quintuple(e, q);
  out.base_poly_class_matches =
      !fam.square_factor.is_zero() && squarefree_class(q) == squarefree_class(RationalFunction(fam.base_poly));
  return out;
}

FamilySymbolicReport family_verify_symbolic(int i) { return family_verify_symbolic(family(i)); }

}  // namespace quintforge
