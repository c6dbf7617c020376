// quintforge: command-line front end. Every result is printed as key=value
// lines; lines starting with '#' are for people. Exit status is 0 only when
// every requested verification passed.

#include "quintforge/density.hpp"
#include "quintforge/error.hpp"
#include "quintforge/field.hpp"
#include "quintforge/funfield.hpp"
#include "quintforge/quintuple.hpp"
#include "quintforge/twist.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using namespace quintforge;

namespace {

template <class F>
std::string join(const std::array<F, 5>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += field_to_string(xs[k]);
  }
  return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::vector<int> indices(int i) {
  if (i == 0) return {1, 2, 3, 4, 5, 6, 7, 8};
  if (i < 1 || i > 8) throw Error(Errc::domain, "index must be 1..8");
  return {i};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_families(int index) {
  const auto t0 = std::chrono::steady_clock::now();
  int ok = 0, n = 0, squares = 0;
  for (int i : indices(index)) {
    const FamilySymbolicReport r = family_verify_symbolic(i);
    const FamilyRecord& fam = family(i);
    ++n;
    ok += r.valid();
    squares += r.report.square_pairs();
    std::cout << "family=" << i << " valid=" << yes(r.valid()) << " square_pairs=" << r.report.square_pairs()
              << " base_poly_matches=" << yes(r.base_poly_class_matches) << "\n";
    std::cout << "family=" << i << " P=" << fam.base_poly.to_string() << " s=" << fam.square_factor.to_string()
              << "\n";
    for (const auto& f : r.report.failures) std::cout << "# family " << i << ": " << f << "\n";
  }
  std::cout << "verified=" << ok << "/" << n << " square_conditions=" << squares << "/" << 10 * n
            << " seconds=" << seconds_since(t0) << "\n";
  std::cout << "# every family checked as an identity in Q(u)\n";
  return ok == n ? 0 : 1;
}

int cmd_curves(int index) {
  const auto t0 = std::chrono::steady_clock::now();
  const FunctionFieldCurve& E = curve_E();
  bool all = true;
  if (index == 0) {
    for (int k = 1; k <= 5; ++k) {
      const bool on = E.on_curve(generator(k));
      all = all && on;
      std::cout << "generator=S" << k << " on_E=" << yes(on) << "\n";
    }
  }
  for (int i : indices(index)) {
    const FunctionFieldPoint& Q = table1_point(i);
    const bool on = E.on_curve(Q);
    const Polynomial cls = squarefree_class_of_point(Q);
    const bool match = cls == family(i).base_poly;
    all = all && on && match;
    const auto& k = table1_combination(i);
    std::cout << "point=Q" << i << " combination=" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ","
              << k[4] << " on_E=" << yes(on) << " class=" << cls.to_string() << " matches=" << yes(match) << "\n";
  }
  std::cout << "ok=" << yes(all) << " seconds=" << seconds_since(t0) << "\n";
  return all ? 0 : 1;
}

int cmd_rootnumber(int curve, const std::string& t_text) {
  const Integer t(t_text);
  const CurveRecord& rec = curve_record(curve);
  if (!is_squarefree(t)) throw Error(Errc::not_squarefree, "t = " + t_text + " is not squarefree");
  const RootNumberBreakdown b = root_number_breakdown(rec, t);
  std::cout << "curve=" << curve << " t=" << t << "\n";
  std::cout << "W2=" << b.w2 << " W3=" << b.w3 << " jacobi=" << b.jacobi;
  for (const auto& [p, w] : b.wp) std::cout << " W" << p << "=" << w;
  std::cout << "\nW=" << b.global << "\n";
  if (b.global == -1) std::cout << "# odd rank, hence positive rank, assuming the parity conjecture\n";
  return 0;
}

int cmd_classes(int curve, const std::string& sign) {
  const ResidueClassSet s = good_classes(curve, parse_sign(sign));
  std::cout << "curve=" << curve << " sign=" << sign << " modulus=" << s.modulus << " count=" << s.size() << "\n";
  std::cout << "classes=" << s.to_string() << "\n";
  return 0;
}

int cmd_period(int curve, long bound, std::int64_t modulus, const std::string& sign) {
  const PeriodReport r = verify_period(curve_record(curve), parse_sign(sign), bound, modulus);
  std::cout << "curve=" << curve << " sign=" << sign << " modulus=" << r.modulus << " bound=" << bound
            << " checked=" << r.checked << " periodic=" << yes(r.periodic) << "\n";
  if (r.witness) std::cout << "witness=" << r.witness->first << "," << r.witness->second << "\n";
  return r.periodic ? 0 : 1;
}

int cmd_density(const std::string& sign, const std::vector<int>& curves, bool strict) {
  const auto t0 = std::chrono::steady_clock::now();
  const Sign s = parse_sign(sign);
  const DensityResult r = strict ? density_union_strict(s, curves) : density_union(s, curves);
  std::cout << "sign=" << sign << " modulus=" << r.modulus << " covered=" << r.count()
            << " admissible=" << r.admissible << " uncovered=" << r.admissible - r.count()
            << " strict=" << yes(strict) << " seconds=" << seconds_since(t0) << "\n";
  std::cout << "# covered classes have W(E_q) = -1 for some curve; positive rank there assumes the parity "
               "conjecture\n";
  return 0;
}

bool emit(const QuarticPoint& pt, int step) {
  const Quintuple<Rational> q = emit_quintuple(pt);
  const VerifyReport<Rational> rep = verify_quintuple(q.elements, q.q);
  std::cout << "step=" << step << " quintuple=" << join(q.elements) << " q=" << q.q << " verified="
            << yes(rep.valid()) << " square_pairs=" << rep.square_pairs() << "\n";
  return rep.valid() && q.q == Rational(pt.q);
}

int cmd_find(const std::string& q_text, int curve, long height, bool do_emit, int multiply) {
  const Integer q(q_text);
  const auto t0 = std::chrono::steady_clock::now();
  std::optional<QuarticPoint> pt = curve ? find_point(q, curve, height) : find_point_any(q, height);
  if (!pt) {
    std::cout << "q=" << q << " height=" << height << " found=false\n";
    return 1;
  }
  bool ok = true;
  std::cout << "q=" << q << " curve=" << pt->curve_index << " step=0 u=" << pt->u << " s=" << pt->s << "\n";
  if (do_emit) ok = emit(*pt, 0) && ok;
  for (int k = 1; k <= multiply; ++k) {
    pt = chord_tangent_next(*pt);
    std::cout << "q=" << q << " curve=" << pt->curve_index << " step=" << k << " u=" << pt->u << " s=" << pt->s
              << "\n";
    if (do_emit) ok = emit(*pt, k) && ok;
  }
  std::cout << "ok=" << yes(ok) << " seconds=" << seconds_since(t0) << "\n";
  return ok ? 0 : 1;
}

int cmd_construct(const std::string& u_text, const std::string& c_text) {
  const Rational u = parse_rational(u_text), c = parse_rational(c_text);
  const ParamPoint<Rational> pt = specialized_point(u, c);
  const QuintupleCandidate<Rational> cand = construct_quintuple(pt);
  std::cout << "u=" << u << " c=" << c << " p=" << pt.p << " x=" << pt.x << "\n";
  std::cout << "elements=" << join(cand.elements) << " q=" << cand.q << "\n";
  std::cout << "square_pairs=" << cand.report.square_pairs() << " nine_pairs_square="
            << yes(cand.status.nine_pairs_square) << " ad_square=" << yes(cand.status.ad_square)
            << " quintuple=" << yes(cand.status.is_quintuple()) << "\n";
  return cand.status.distinct_nonzero && cand.status.nine_pairs_square ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational D(q)-quintuples: families, twist root numbers, residue-class coverage"};
  app.require_subcommand(1);

  int index = 0, curve = 0, multiply = 0;
  long bound = 0, height = 20;
  std::int64_t modulus = 0;
  std::string sign = "+", t_text, q_text, u_text, c_text, curve_list;
  bool strict = false, do_emit = false;

  auto* families = app.add_subcommand("families", "family identities");
  auto* fverify = families->add_subcommand("verify", "check all ten square conditions symbolically");
  fverify->add_option("--index", index, "family 1..8");
  families->require_subcommand(1);

  auto* curves = app.add_subcommand("curves", "points on the curve over Q(u)");
  auto* ctable = curves->add_subcommand("table1", "the eight combinations and their classes");
  ctable->add_option("--index", index, "row 1..8");
  curves->require_subcommand(1);

  auto* rootnumber = app.add_subcommand("rootnumber", "root number of a twist");
  rootnumber->add_option("--curve", curve)->required();
  rootnumber->add_option("--t", t_text)->required();

  auto* classes = app.add_subcommand("classes", "residue classes with root number -1");
  classes->add_option("--curve", curve)->required();
  classes->add_option("--sign", sign)->required();

  auto* period = app.add_subcommand("period", "check the period of the root number");
  period->add_option("--curve", curve)->required();
  period->add_option("--bound", bound)->required();
  period->add_option("--modulus", modulus);
  period->add_option("--sign", sign);

  auto* density = app.add_subcommand("density", "classes mod 394680 covered by the eight curves");
  density->add_option("--sign", sign)->required();
  density->add_option("--curves", curve_list, "comma-separated subset");
  density->add_flag("--strict", strict, "require every lift to be good where N_i does not divide the modulus");

  auto* find = app.add_subcommand("find", "search a point on q s^2 = P_i(u) and build quintuples");
  find->add_option("--q", q_text)->required();
  find->add_option("--curve", curve);
  find->add_option("--height", height);
  find->add_flag("--emit", do_emit);
  find->add_option("--multiply", multiply, "chord-tangent steps");

  auto* construct = app.add_subcommand("construct", "the near-miss quintuple at (u, c)");
  construct->add_option("--u", u_text)->required();
  construct->add_option("--c", c_text)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fverify) return cmd_families(index);
    if (*ctable) return cmd_curves(index);
    if (*rootnumber) return cmd_rootnumber(curve, t_text);
    if (*classes) return cmd_classes(curve, sign);
    if (*period) return cmd_period(curve, bound, modulus, sign);
    if (*density) {
      std::vector<int> subset;
      if (curve_list.empty()) {
        subset = indices(0);
      } else {
        std::stringstream ss(curve_list);
        std::string item;
        while (std::getline(ss, item, ',')) subset.push_back(indices(std::stoi(item)).front());
      }
      return cmd_density(sign, subset, strict);
    }
    if (*find) return cmd_find(q_text, curve, height, do_emit, multiply);
    if (*construct) return cmd_construct(u_text, c_text);
  } catch (const Error& e) {
    std::cout << "error=" << to_string(e.code()) << "\n# " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << "error=invalid_argument\n# " << e.what() << "\n";
    return 2;
  }
  return 1;
}
