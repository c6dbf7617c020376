#include "quintforge/exact_arith.hpp"

#include "quintforge/error.hpp"

#include <array>

namespace quintforge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : bases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool fits_u64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

}  // namespace

char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "pos" || text == "positive") return Sign::positive;
  if (text == "-" || text == "neg" || text == "negative") return Sign::negative;
  throw Error(Errc::parse, "sign must be + or -, got '" + std::string(text) + "'");
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& v) {
    auto b = v.find_first_not_of(" \t");
    auto e = v.find_last_not_of(" \t");
    v = b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw Error(Errc::parse, "empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (s.front() == '+') s.erase(0, 1);
      return Rational(Integer(s, 10));
    }
    std::string n = s.substr(0, slash);
    std::string d = s.substr(slash + 1);
    trim(n);
    trim(d);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    return make_rational(Integer(n, 10), Integer(d, 10));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse, "not a rational number: '" + std::string(text) + "'");
  }
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return miller_rabin_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::pair<Integer, unsigned>> factor(const Integer& n) {
  if (n == 0) throw Error(Errc::domain, "cannot factor zero");
  Integer m = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  auto pull = [&](const Integer& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  pull(Integer(2));
  pull(Integer(3));
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= m; p += 6) {
    pull(p);
    Integer q = p + 2;
    pull(q);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

Valuation valuation_and_strip(const Integer& n, const Integer& p) {
  if (n == 0) throw Error(Errc::undefined_valuation, "valuation of zero is undefined");
  if (!is_prime(p)) throw Error(Errc::domain, "valuation base " + p.get_str() + " is not prime");
  Valuation v{0, n};
  while (mpz_divisible_p(v.stripped.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(v.stripped.get_mpz_t(), v.stripped.get_mpz_t(), p.get_mpz_t());
    ++v.exponent;
  }
  return v;
}

Integer strip_by_modulus(const Integer& n, const Integer& d) {
  if (n == 0) throw Error(Errc::undefined_valuation, "strip_by_modulus of zero is undefined");
  if (d < 1) throw Error(Errc::domain, "strip_by_modulus needs d >= 1");
  Integer out = n;
  Integer g;
  // Repeatedly divide by gcd(out, d): removes exactly the primes of d.
  for (;;) {
    mpz_gcd(g.get_mpz_t(), out.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return out;
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), g.get_mpz_t());
  }
}

SquarefreeDecomposition squarefree_decompose(const Integer& n) {
  if (n == 0) throw Error(Errc::domain, "squarefree decomposition of zero");
  SquarefreeDecomposition d{sgn(n) < 0 ? Integer(-1) : Integer(1), Integer(1)};
  for (const auto& [p, e] : factor(n)) {
    if (e % 2) d.squarefree_part *= p;
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
    d.square_root_part *= pe;
  }
  return d;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& fe : factor(n)) {
    if (fe.second > 1) return false;
  }
  return true;
}

std::optional<Integer> integer_square_root(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_square_root(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  auto n = integer_square_root(r.get_num());
  if (!n) return std::nullopt;
  auto d = integer_square_root(r.get_den());
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

int jacobi_symbol(const Integer& a_in, const Integer& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t())) {
    throw Error(Errc::domain, "Jacobi symbol needs an odd positive modulus, got " + n_in.get_str());
  }
  Integer a = mod_floor(a_in, n_in);
  Integer n = n_in;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a /= 2;
      unsigned long r8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    a = mod_floor(a, n);
  }
  return n == 1 ? result : 0;
}

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::int64_t mod_floor(std::int64_t n, std::int64_t m) {
  std::int64_t r = n % m;
  return r < 0 ? r + m : r;
}

Integer smallest_squarefree_in_class(const Integer& r, const Integer& m, Sign sign) {
  if (m < 1 || r < 0 || r >= m) {
    throw Error(Errc::domain, "residue must satisfy 0 <= r < m");
  }
  // Candidates of the requested sign in |value| ascending order.
  for (int k = 0; k < 64; ++k) {
    Integer cand = sign == Sign::positive ? Integer(r + m * k) : Integer(r - m * (k + 1));
    if (cand != 0 && is_squarefree(cand)) return cand;
  }
  throw Error(Errc::no_representative,
              "class " + r.get_str() + " mod " + m.get_str() + " has no squarefree " +
                  (sign == Sign::positive ? "positive" : "negative") + " representative");
}

}  // namespace quintforge
