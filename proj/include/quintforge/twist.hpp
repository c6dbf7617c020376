#pragma once

// Quadratic twists of the curves E^(i): y^2 = P_i(u) and their root numbers.
//
// W(E_t) = -W_2(E_t) W_3(E_t) (-1 / |t_(6 Delta)|) prod_{p | Delta, p >= 5} W_p(E_t)
//
// The factors at 2 and 3 and the additive factors at p >= 5 come from
// per-curve lookup tables keyed on t mod p^k (see tables/); multiplicative
// factors use the split/non-split test directly.

#include "quintforge/exact_arith.hpp"
#include "quintforge/polynomial.hpp"
#include "quintforge/quintuple.hpp"
#include "quintforge/residue.hpp"
#include "quintforge/weierstrass.hpp"

#include <array>
#include <climits>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quintforge {

// y^2 = x^3 + A x + B over Z.
struct IntegerCurve {
  Integer A, B;

  Integer c4() const { return Integer(-48) * A; }
  Integer c6() const { return Integer(-864) * B; }
  Integer discriminant() const { return Integer(-16) * (Integer(4) * A * A * A + Integer(27) * B * B); }
  WeierstrassCurve<Rational> over_Q() const { return {Rational(A), Rational(B)}; }
  friend bool operator==(const IntegerCurve&, const IntegerCurve&) = default;
};

struct CurveInvariants {
  Integer c4, c6, delta;
  Rational j;
};
// Throws Errc::degenerate for a singular curve.
CurveInvariants invariants(const IntegerCurve& E);

// (A, B) -> (A t^2, B t^3). t must be nonzero and squarefree.
IntegerCurve quadratic_twist(const IntegerCurve& E, const Integer& t);

// Isomorphic over Q: c4' = l^4 c4 and c6' = l^6 c6 for some rational l.
bool isomorphic_over_Q(const IntegerCurve& E, const IntegerCurve& F);

// Model of q s^2 = P(u) for P of degree 3, or degree 4 with a rational root
// u0 (then w = 1/(u - u0) turns it into a cubic). The cubic a w^3 + b w^2 +
// c w + d (scaled to integer coefficients by k^2) goes to
// Y^2 = X^3 + bq X^2 + acq^2 X + a^2 d q^3 with X = a q w, Y = a q^2 k s',
// then to the short model x = 36X + 3b_2, y = 216Y divided by mu^2, mu^3.
class TwistModel {
 public:
  TwistModel(const Polynomial& P, const Integer& q);

  const IntegerCurve& curve() const { return curve_; }
  const Polynomial& quartic() const { return P_; }
  const Integer& q() const { return q_; }
  std::optional<Rational> root() const { return root_; }

  bool on_twist(const Rational& u, const Rational& s) const;
  // (u, s) with q s^2 = P(u) to a curve point; (u0, 0) goes to infinity.
  CurvePoint<Rational> to_curve(const Rational& u, const Rational& s) const;
  // Inverse; throws Errc::no_affine_image for the points with no (u, s).
  std::pair<Rational, Rational> from_curve(const CurvePoint<Rational>& pt) const;

 private:
  Polynomial P_;
  Integer q_;
  std::optional<Rational> root_;
  Integer a_, k_, mu_;
  Rational b2_;
  IntegerCurve curve_;
};

inline constexpr long kInfiniteValuation = LONG_MAX;

struct ReducedValuations {
  long a, b, c;
  friend bool operator==(const ReducedValuations&, const ReducedValuations&) = default;
};
// Subtracts k (4, 6, 12) with k maximal keeping every entry nonnegative;
// kInfiniteValuation entries (zero quantities) stay infinite.
ReducedValuations reduce_abc(long v_c4, long v_c6, long v_delta);

enum class Provenance { manual, oracle };  // hand-derived or generated by an independent oracle

struct RootNumberTable {
  int curve = 0;
  long p = 0;
  long modulus = 1;
  Provenance provenance = Provenance::oracle;
  std::vector<int> values;  // indexed by residue, 0 where absent

  // Throws Errc::unpopulated_table when t mod modulus has no entry.
  int lookup(const Integer& t) const;
};

// Parses the text format: header `curve=<i> p=<p> mod=<m> provenance=<manual|oracle>`
// then `<residue>:<+1|-1>` lines; blank lines separate tables.
std::vector<RootNumberTable> parse_root_number_tables(const std::string& text);
std::vector<RootNumberTable> load_root_number_tables(const std::filesystem::path& file);

// $QUINTFORGE_TABLES if set, else the tables/ directory of the source tree.
std::filesystem::path table_directory();

struct CurveRecord {
  int index = 0;
  Polynomial base_poly;
  IntegerCurve model;
  std::vector<std::pair<long, long>> delta_factorization;  // (p, e), sign in delta_sign
  int delta_sign = 1;
  std::vector<std::pair<long, long>> conductor;  // metadata only
  std::int64_t period = 1;                     // N_i
  std::vector<long> local_periods;               // W_2, W_3, W_p..., Jacobi factor
  std::map<long, RootNumberTable> tables;        // by prime
  Integer delta;
  std::vector<long> bad_primes_ge5;

  const RootNumberTable& table(long p) const;
  bool multiplicative_at(long p) const;
  const FamilyRecord& family() const { return quintforge::family(index); }
};

// Records 1..8 with tables loaded from table_directory() on first use.
const CurveRecord& curve_record(int i);
// Builds a record from explicit tables (used by tests and the CLI).
CurveRecord make_curve_record(int i, const std::vector<RootNumberTable>& tables);

// W_p(E_t) for p >= 5. Good reduction and p not dividing t gives +1;
// multiplicative reduction with p not dividing t uses the split test;
// everything else goes through the table.
int local_root_number(const CurveRecord& rec, long p, const Integer& t);
// Same, always through the table when one exists (for cross-checking).
int local_root_number_from_table(const CurveRecord& rec, long p, const Integer& t);
// W_2 or W_3 by table; throws Errc::not_squarefree when 4 | t or 9 | t.
int local_root_number_23(const CurveRecord& rec, long p, const Integer& t);
// (-1 / |t_(d)|)
int jacobi_factor(const Integer& t, const Integer& d);

struct RootNumberBreakdown {
  int w2 = 1, w3 = 1, jacobi = 1;
  std::vector<std::pair<long, int>> wp;  // primes >= 5 dividing Delta
  int global = 1;
};
RootNumberBreakdown root_number_breakdown(const CurveRecord& rec, const Integer& t);
int global_root_number(const CurveRecord& rec, const Integer& t);
int global_root_number(int i, const Integer& t);

// Residues r mod N_i whose smallest squarefree representative of the given
// sign has W(E_t) = -1. OpenMP over residues; the _serial variant is the
// single-threaded reference.
ResidueClassSet good_classes(const CurveRecord& rec, Sign sign);
ResidueClassSet good_classes_serial(const CurveRecord& rec, Sign sign);
ResidueClassSet good_classes(int i, Sign sign);

struct PeriodReport {
  bool periodic = true;
  std::int64_t modulus = 0;
  long checked = 0;                             // squarefree t examined
  std::optional<std::pair<long, long>> witness;  // t, t' congruent with different W
};

// Checks W(E_t) depends only on t mod `modulus` (default N_i) for squarefree
// t of the given sign with |t| <= bound.
PeriodReport verify_period(const CurveRecord& rec, Sign sign, long bound, std::int64_t modulus = 0);
PeriodReport verify_period_serial(const CurveRecord& rec, Sign sign, long bound, std::int64_t modulus = 0);

}  // namespace quintforge
