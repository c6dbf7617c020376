#include "quintforge/twist.hpp"

#include "quintforge/error.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#ifndef QUINTFORGE_TABLE_DIR
#define QUINTFORGE_TABLE_DIR "tables"
#endif

namespace quintforge {

CurveInvariants invariants(const IntegerCurve& E) {
  CurveInvariants inv{E.c4(), E.c6(), E.discriminant(), Rational(0)};
  if (inv.delta == 0) throw Error(Errc::degenerate, "singular curve: discriminant is zero");
  inv.j = make_rational(Integer(inv.c4 * inv.c4 * inv.c4), inv.delta);
  return inv;
}

IntegerCurve quadratic_twist(const IntegerCurve& E, const Integer& t) {
  if (t == 0) throw Error(Errc::domain, "twist by zero");
  if (!is_squarefree(t)) throw Error(Errc::not_squarefree, "twist parameter " + t.get_str() + " is not squarefree");
  return IntegerCurve{E.A * t * t, E.B * t * t * t};
}

namespace {

// n-th root of a rational, if exact.
std::optional<Rational> exact_root(const Rational& r, unsigned long n) {
  if (sgn(r) < 0 && n % 2 == 0) return std::nullopt;
  Integer num, den;
  const Integer an = abs(r.get_num());
  if (!mpz_root(num.get_mpz_t(), an.get_mpz_t(), n)) return std::nullopt;
  if (!mpz_root(den.get_mpz_t(), r.get_den_mpz_t(), n)) return std::nullopt;
  if (sgn(r) < 0) num = -num;
  return make_rational(num, den);
}

}  // namespace

bool isomorphic_over_Q(const IntegerCurve& E, const IntegerCurve& F) {
  const Integer e4 = E.c4(), e6 = E.c6(), f4 = F.c4(), f6 = F.c6();
  if ((e4 == 0) != (f4 == 0) || (e6 == 0) != (f6 == 0)) return false;
  if (e4 == 0) return exact_root(make_rational(f6, e6), 6).has_value();
  if (e6 == 0) return exact_root(make_rational(f4, e4), 4).has_value();
  // l^2 = (f6 / e6) / (f4 / e4)
  const Rational l2 = make_rational(f6 * e4, e6 * f4);
  if (!rational_square_root(l2)) return false;
  return Rational(f4) == l2 * l2 * Rational(e4) && Rational(f6) == l2 * l2 * l2 * Rational(e6);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Rational> rational_roots(const Polynomial& P) {
  std::vector<Rational> roots;
  ZPoly z = P.to_primitive();
  // strip the factor u^k first
  std::size_t low = 0;
  while (low < z.coeffs().size() && z[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  const Integer a0 = z[low];
  const Integer an = z.lc();
  auto divisors = [](const Integer& n) {
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : factor(n)) {
      const std::size_t base = ds.size();
      Integer pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
      }
    }
    return ds;
  };
  for (const Integer& num : divisors(a0)) {
    for (const Integer& den : divisors(an)) {
      for (int s : {1, -1}) {
        const Rational r = make_rational(Integer(num * s), den);
        if (P.evaluate(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  return roots;
}

Integer height(const Rational& r) { return std::max(Integer(abs(r.get_num())), Integer(r.get_den())); }

Integer pow_int(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

TwistModel::TwistModel(const Polynomial& P, const Integer& q) : P_(P), q_(q) {
  if (q == 0) throw Error(Errc::domain, "twist parameter is zero");
  if (P.degree() != 3 && P.degree() != 4) {
    throw Error(Errc::domain, "need a polynomial of degree 3 or 4, got degree " + std::to_string(P.degree()));
  }
  if (gcd(P, P.derivative()).degree() > 0) {
    throw Error(Errc::not_squarefree, "polynomial " + P.to_string() + " has a repeated factor");
  }
  Polynomial cubic = P;
  if (P.degree() == 4) {
    auto roots = rational_roots(P);
    if (roots.empty()) throw Error(Errc::not_good, "quartic " + P.to_string() + " has no rational root");
    std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
      const Integer hx = height(x), hy = height(y);
      return hx != hy ? hx < hy : x > y;
    });
    root_ = roots.front();
    // w^4 P(u0 + 1/w) = sum p_k (u0 w + 1)^k w^(4-k)
    const Polynomial w = Polynomial::variable();
    const Polynomial lin = w * *root_ + Polynomial(1);
    cubic = Polynomial();
    for (int k = 0; k <= 4; ++k) cubic += lin.pow(k) * w.pow(4 - k) * P.coeff(k);
  }
  // k^2 * cubic has integer coefficients
  Integer den = 1;
  for (const auto& c : cubic.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  k_ = den;
  const Polynomial scaled = cubic * Rational(k_ * k_);
  a_ = scaled.coeff(3).get_num();
  const Integer b = scaled.coeff(2).get_num(), c = scaled.coeff(1).get_num(), d = scaled.coeff(0).get_num();
  const Integer a2 = b * q_, a4 = a_ * c * q_ * q_, a6 = a_ * a_ * d * q_ * q_ * q_;
  const Integer c4 = 16 * a2 * a2 - 48 * a4;
  const Integer c6 = -64 * a2 * a2 * a2 + 288 * a2 * a4 - 864 * a6;
  b2_ = Rational(4 * a2);
  Integer A = -27 * c4, B = -54 * c6;
  // largest mu with mu^4 | A and mu^6 | B
  mu_ = 1;
  Integer g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  if (g != 0) {
    for (const auto& [p, e] : factor(g)) {
      unsigned long k = ~0UL;
      if (A != 0) k = std::min(k, valuation_and_strip(A, p).exponent / 4);
      if (B != 0) k = std::min(k, valuation_and_strip(B, p).exponent / 6);
      mu_ *= pow_int(p, k);
    }
  }
  curve_ = IntegerCurve{A / pow_int(mu_, 4), B / pow_int(mu_, 6)};
  invariants(curve_);  // rejects singular models
}

bool TwistModel::on_twist(const Rational& u, const Rational& s) const { return Rational(q_) * s * s == P_.evaluate(u); }

CurvePoint<Rational> TwistModel::to_curve(const Rational& u, const Rational& s) const {
  if (!on_twist(u, s)) throw Error(Errc::off_curve, "(" + u.get_str() + ", " + s.get_str() + ") is not on the twist");
  Rational w = u, sp = s;
  if (root_) {
    if (u == *root_) return CurvePoint<Rational>::at_infinity();
    w = 1 / (u - *root_);
    sp = s * w * w;
  }
  const Rational X = Rational(a_ * q_) * w;
  const Rational Y = Rational(a_ * q_ * q_ * k_) * sp;
  const Rational m2(mu_ * mu_);
  return CurvePoint<Rational>::affine((36 * X + 3 * b2_) / m2, 216 * Y / (m2 * Rational(mu_)));
}

std::pair<Rational, Rational> TwistModel::from_curve(const CurvePoint<Rational>& pt) const {
  if (pt.infinity) {
    if (root_) return {*root_, Rational(0)};
    throw Error(Errc::no_affine_image, "the point at infinity has no affine preimage");
  }
  const Rational m2(mu_ * mu_);
  const Rational X = (pt.x * m2 - 3 * b2_) / 36;
  const Rational Y = pt.y * m2 * Rational(mu_) / 216;
  const Rational w = X / Rational(a_ * q_);
  const Rational sp = Y / Rational(a_ * q_ * q_ * k_);
  if (!root_) return {w, sp};
  if (w == 0) throw Error(Errc::no_affine_image, "curve point lies over u = infinity");
  return {*root_ + 1 / w, sp / (w * w)};
}

// ---------------------------------------------------------------------------

ReducedValuations reduce_abc(long v_c4, long v_c6, long v_delta) {
  long k = LONG_MAX;
  if (v_c4 != kInfiniteValuation) k = std::min(k, v_c4 / 4);
  if (v_c6 != kInfiniteValuation) k = std::min(k, v_c6 / 6);
  if (v_delta != kInfiniteValuation) k = std::min(k, v_delta / 12);
  if (k == LONG_MAX) k = 0;
  auto sub = [k](long v, long step) { return v == kInfiniteValuation ? v : v - k * step; };
  return {sub(v_c4, 4), sub(v_c6, 6), sub(v_delta, 12)};
}

int RootNumberTable::lookup(const Integer& t) const {
  const long r = mod_floor(t, Integer(modulus)).get_si();
  const int v = values[static_cast<std::size_t>(r)];
  if (v == 0) {
    throw Error(Errc::unpopulated_table, "no root-number entry for curve " + std::to_string(curve) + " p=" +
                                             std::to_string(p) + " residue " + std::to_string(r) + " mod " +
                                             std::to_string(modulus) + "; regenerate tables/ with the oracle script");
  }
  return v;
}

std::vector<RootNumberTable> parse_root_number_tables(const std::string& text) {
  std::vector<RootNumberTable> out;
  std::istringstream in(text);
  std::string line;
  RootNumberTable* cur = nullptr;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw Error(Errc::parse, "table line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      cur = nullptr;
      continue;
    }
    if (line[0] == '#') continue;
    if (line.rfind("curve=", 0) == 0) {
      RootNumberTable t;
      std::istringstream hs(line);
      std::string field;
      while (hs >> field) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) fail("bad header field '" + field + "'");
        const std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "curve") {
          t.curve = std::stoi(val);
        } else if (key == "p") {
          t.p = std::stol(val);
        } else if (key == "mod") {
          t.modulus = std::stol(val);
        } else if (key == "provenance") {
          if (val == "manual") {
            t.provenance = Provenance::manual;
          } else if (val == "oracle") {
            t.provenance = Provenance::oracle;
          } else {
            fail("unknown provenance '" + val + "'");
          }
        } else {
          fail("unknown header key '" + key + "'");
        }
      }
      if (t.modulus < 1 || t.p < 2) fail("header needs p and mod");
      t.values.assign(static_cast<std::size_t>(t.modulus), 0);
      out.push_back(std::move(t));
      cur = &out.back();
      continue;
    }
    if (!cur) fail("entry outside a table block");
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("expected <residue>:<sign>");
    const long r = std::stol(line.substr(0, colon));
    const std::string s = line.substr(colon + 1);
    if (r < 0 || r >= cur->modulus) fail("residue out of range");
    if (s == "+1" || s == "1") {
      cur->values[static_cast<std::size_t>(r)] = 1;
    } else if (s == "-1") {
      cur->values[static_cast<std::size_t>(r)] = -1;
    } else {
      fail("sign must be +1 or -1");
    }
  }
  return out;
}

std::vector<RootNumberTable> load_root_number_tables(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::unpopulated_table, "cannot open root-number table file " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_root_number_tables(ss.str());
}

std::filesystem::path table_directory() {
  if (const char* env = std::getenv("QUINTFORGE_TABLES"); env && *env) return env;
  return QUINTFORGE_TABLE_DIR;
}

// ---------------------------------------------------------------------------

namespace {

struct CurveData {
  long A, B;
  int delta_sign;
  std::vector<std::pair<long, long>> delta;
  std::vector<std::pair<long, long>> conductor;
  std::int64_t period;
  std::vector<long> local_periods;
};

const std::array<CurveData, 8> kCurves = {{
    {-33210675, 6964980750, 1, {{2, 20}, {3, 18}, {5, 8}, {11, 4}}, {{2, 1}, {3, 1}, {5, 2}, {11, 1}}, 6600,
     {8, 3, 25, 11, 132}},
    {-24651, 1453194, 1, {{2, 10}, {3, 20}, {13, 1}}, {{2, 4}, {3, 1}, {13, 1}}, 312, {8, 3, 13, 24}},
    {-97227, 10789254, 1, {{2, 16}, {3, 16}, {5, 2}, {11, 2}}, {{2, 1}, {3, 1}, {5, 1}, {11, 1}}, 1320,
     {8, 3, 5, 11, 132}},
    {-7155, 187650, 1, {{2, 10}, {3, 12}, {5, 3}, {11, 2}}, {{2, 4}, {5, 2}, {11, 1}}, 88, {8, 3, 1, 11, 132}},
    {274725, 126596250, -1, {{2, 10}, {3, 18}, {5, 6}, {11, 3}}, {{2, 4}, {3, 1}, {5, 2}, {11, 2}}, 264,
     {8, 3, 1, 1, 132}},
    {-24003, 1296702, 1, {{2, 14}, {3, 18}, {5, 2}}, {{2, 1}, {3, 1}, {5, 1}}, 120, {8, 3, 5, 12}},
    {-132867, 17106174, 1, {{2, 16}, {3, 14}, {5, 4}, {11, 2}}, {{2, 1}, {3, 1}, {5, 1}, {11, 1}}, 1320,
     {8, 3, 5, 11, 132}},
    {-1196883, 46619118, 1, {{2, 18}, {3, 22}, {5, 2}, {23, 2}}, {{2, 1}, {3, 1}, {5, 1}, {23, 1}}, 2760,
     {8, 3, 5, 23, 552}},
}};

long valuation_or_inf(const Integer& n, long p) {
  if (n == 0) return kInfiniteValuation;
  return static_cast<long>(valuation_and_strip(n, Integer(p)).exponent);
}

}  // namespace

const RootNumberTable& CurveRecord::table(long p) const {
  auto it = tables.find(p);
  if (it == tables.end()) {
    throw Error(Errc::unpopulated_table, "curve " + std::to_string(index) + " has no root-number table at p=" +
                                             std::to_string(p) + "; regenerate tables/ with the oracle script");
  }
  return it->second;
}

bool CurveRecord::multiplicative_at(long p) const {
  const ReducedValuations v =
      reduce_abc(valuation_or_inf(model.c4(), p), valuation_or_inf(model.c6(), p), valuation_or_inf(delta, p));
  return v.a == 0 && v.c > 0;
}

CurveRecord make_curve_record(int i, const std::vector<RootNumberTable>& tables) {
  if (i < 1 || i > 8) throw Error(Errc::domain, "curve index must be 1..8");
  const CurveData& d = kCurves[i - 1];
  CurveRecord r;
  r.index = i;
  r.base_poly = family(i).base_poly;
  r.model = IntegerCurve{Integer(d.A), Integer(d.B)};
  r.delta_factorization = d.delta;
  r.delta_sign = d.delta_sign;
  r.conductor = d.conductor;
  r.period = d.period;
  r.local_periods = d.local_periods;
  r.delta = r.model.discriminant();
  for (const auto& [p, e] : d.delta) {
    if (p >= 5) r.bad_primes_ge5.push_back(p);
  }
  for (const auto& t : tables) {
    if (t.curve == i) r.tables[t.p] = t;
  }
  return r;
}

const CurveRecord& curve_record(int i) {
  static std::array<CurveRecord, 8> records;
  static std::once_flag once;
  if (i < 1 || i > 8) throw Error(Errc::domain, "curve index must be 1..8");
  std::call_once(once, [] {
    const auto dir = table_directory();
    for (int k = 1; k <= 8; ++k) {
      const auto file = dir / ("curve" + std::to_string(k) + ".tbl");
      records[k - 1] = make_curve_record(k, load_root_number_tables(file));
    }
  });
  return records[i - 1];
}

int local_root_number(const CurveRecord& rec, long p, const Integer& t) {
  if (p < 5 || !is_prime(Integer(p))) throw Error(Errc::domain, "local_root_number needs a prime p >= 5");
  if (t == 0) throw Error(Errc::domain, "twist parameter is zero");
  const bool bad = mpz_divisible_ui_p(rec.delta.get_mpz_t(), static_cast<unsigned long>(p));
  const bool divides_t = mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p));
  if (!bad) {
    // good reduction: unchanged by a unit twist, type I0* after a ramified one
    return divides_t ? jacobi_symbol(Integer(-1), Integer(p)) : 1;
  }
  if (rec.multiplicative_at(p) && !divides_t) {
    // split iff -c6(E_t) = -c6 t^3 is a square mod p; any p^(6k) scaling is a square
    const Integer c6 = valuation_and_strip(rec.model.c6(), Integer(p)).stripped;
    const int split = jacobi_symbol(Integer(-c6 * t), Integer(p));
    return split == 1 ? -1 : 1;
  }
  return rec.table(p).lookup(t);
}

int local_root_number_from_table(const CurveRecord& rec, long p, const Integer& t) {
  if (rec.tables.count(p)) return rec.table(p).lookup(t);
  return local_root_number(rec, p, t);
}

int local_root_number_23(const CurveRecord& rec, long p, const Integer& t) {
  if (p != 2 && p != 3) throw Error(Errc::domain, "local_root_number_23 needs p = 2 or 3");
  if (t == 0) throw Error(Errc::domain, "twist parameter is zero");
  if (mpz_divisible_ui_p(t.get_mpz_t(), 4) || mpz_divisible_ui_p(t.get_mpz_t(), 9)) {
    throw Error(Errc::not_squarefree, "t = " + t.get_str() + " lies in a class with no squarefree integers");
  }
  return rec.table(p).lookup(t);
}

int jacobi_factor(const Integer& t, const Integer& d) {
  if (t == 0) throw Error(Errc::domain, "twist parameter is zero");
  const Integer s = abs(strip_by_modulus(t, d));
  return jacobi_symbol(Integer(-1), s);
}

RootNumberBreakdown root_number_breakdown(const CurveRecord& rec, const Integer& t) {
  RootNumberBreakdown b;
  b.w2 = local_root_number_23(rec, 2, t);
  b.w3 = local_root_number_23(rec, 3, t);
  b.jacobi = jacobi_factor(t, Integer(6 * abs(rec.delta)));
  int prod = -b.w2 * b.w3 * b.jacobi;
  for (long p : rec.bad_primes_ge5) {
    const int w = local_root_number(rec, p, t);
    b.wp.emplace_back(p, w);
    prod *= w;
  }
  b.global = prod;
  return b;
}

int global_root_number(const CurveRecord& rec, const Integer& t) {
  if (!is_squarefree(t)) throw Error(Errc::not_squarefree, "t = " + t.get_str() + " is not squarefree");
  return root_number_breakdown(rec, t).global;
}

int global_root_number(int i, const Integer& t) { return global_root_number(curve_record(i), t); }

// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> good_flags(const CurveRecord& rec, Sign sign, const std::vector<std::int64_t>& residues,
                                     bool parallel) {
  std::vector<std::int64_t> flagged(residues.size(), -1);
  const Integer N(static_cast<long>(rec.period));
  const auto n = static_cast<long>(residues.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (long k = 0; k < n; ++k) {
    const Integer t = smallest_squarefree_in_class(Integer(static_cast<long>(residues[k])), N, sign);
    if (global_root_number(rec, t) == -1) flagged[k] = residues[k];
  }
  std::vector<std::int64_t> out;
  for (auto r : flagged) {
    if (r >= 0) out.push_back(r);
  }
  return out;
}

}  // namespace

ResidueClassSet good_classes(const CurveRecord& rec, Sign sign) {
  const ResidueClassSet adm = admissible_classes(rec.period);
  return {rec.period, good_flags(rec, sign, adm.residues, true)};
}

ResidueClassSet good_classes_serial(const CurveRecord& rec, Sign sign) {
  const ResidueClassSet adm = admissible_classes(rec.period);
  return {rec.period, good_flags(rec, sign, adm.residues, false)};
}

ResidueClassSet good_classes(int i, Sign sign) { return good_classes(curve_record(i), sign); }

namespace {

std::vector<char> squarefree_sieve(long bound) {
  std::vector<char> sf(static_cast<std::size_t>(bound) + 1, 1);
  sf[0] = 0;
  for (long p = 2; p * p <= bound; ++p) {
    for (long m = p * p; m <= bound; m += p * p) sf[static_cast<std::size_t>(m)] = 0;
  }
  return sf;
}

PeriodReport period_check(const CurveRecord& rec, Sign sign, long bound, std::int64_t modulus, bool parallel) {
  if (bound < 1) throw Error(Errc::domain, "bound must be positive");
  if (modulus == 0) modulus = rec.period;
  if (modulus < 1) throw Error(Errc::domain, "modulus must be positive");
  const std::vector<char> sf = squarefree_sieve(bound);
  std::vector<signed char> w(static_cast<std::size_t>(bound) + 1, 0);
  const long s = sign_factor(sign);
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (long n = 1; n <= bound; ++n) {
    if (sf[static_cast<std::size_t>(n)]) w[static_cast<std::size_t>(n)] = static_cast<signed char>(global_root_number(rec, Integer(s * n)));
  }
  PeriodReport rep;
  rep.modulus = modulus;
  std::vector<long> first(static_cast<std::size_t>(modulus), 0);
  for (long n = 1; n <= bound; ++n) {
    if (!sf[static_cast<std::size_t>(n)]) continue;
    ++rep.checked;
    const long t = s * n;
    const auto r = static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(t), modulus));
    if (first[r] == 0) {
      first[r] = t;
    } else if (w[static_cast<std::size_t>(std::labs(first[r]))] != w[static_cast<std::size_t>(n)]) {
      if (rep.periodic) rep.witness = std::make_pair(first[r], t);
      rep.periodic = false;
    }
  }
  return rep;
}

}  // namespace

PeriodReport verify_period(const CurveRecord& rec, Sign sign, long bound, std::int64_t modulus) {
  return period_check(rec, sign, bound, modulus, true);
}

PeriodReport verify_period_serial(const CurveRecord& rec, Sign sign, long bound, std::int64_t modulus) {
  return period_check(rec, sign, bound, modulus, false);
}

}  // namespace quintforge
