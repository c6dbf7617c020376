#include "quintforge/zpoly.hpp"

#include "quintforge/error.hpp"
#include "quintforge/polynomial.hpp"

#include <algorithm>
#include <mutex>

namespace quintforge {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Coefficient sizes at which Kronecker substitution beats schoolbook.
constexpr std::size_t kKroneckerMinLength = 12;

// ---------------------------------------------------------------------------
// word-size prime field helpers

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Primes just below 2^62, generated on demand and shared across threads.
class PrimeSource {
 public:
  u64 get(std::size_t i) {
    std::lock_guard lock(mu_);
    while (primes_.size() <= i) {
      for (next_ -= 2;; next_ -= 2) {
        if (is_prime(Integer(static_cast<unsigned long>(next_)))) break;
      }
      primes_.push_back(next_);
    }
    return primes_[i];
  }

 private:
  std::mutex mu_;
  std::vector<u64> primes_;
  u64 next_ = (u64{1} << 62) + 1;
};

PrimeSource& primes() {
  static PrimeSource src;
  return src;
}

using ModPoly = std::vector<u64>;

void trim_mod(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const ZPoly& f, u64 p) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
  trim_mod(out);
  return out;
}

// a mod b in place; b nonzero.
void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  const std::size_t db = b.size() - 1;
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 q = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      const u64 t = mulmod(q, b[i], p);
      u64& x = a[i + shift];
      x = x >= t ? x - t : x + p - t;
    }
    trim_mod(a);
  }
}

ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = invmod(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Kronecker substitution

Integer pack(std::span<const Integer> c, mp_bitcnt_t k) {
  if (c.size() == 1) return c[0];
  const std::size_t mid = c.size() / 2;
  Integer hi = pack(c.subspan(mid), k);
  mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), k * mid);
  hi += pack(c.subspan(0, mid), k);
  return hi;
}

// Inverse of pack for coefficients bounded by 2^(k-2) in absolute value.
void unpack(const Integer& v, std::span<Integer> out, mp_bitcnt_t k) {
  if (out.size() == 1) {
    out[0] = v;
    return;
  }
  const std::size_t mid = out.size() / 2;
  const mp_bitcnt_t bits = k * mid;
  Integer lo;
  mpz_fdiv_r_2exp(lo.get_mpz_t(), v.get_mpz_t(), bits);
  if (mpz_tstbit(lo.get_mpz_t(), bits - 1)) {
    Integer m;
    mpz_setbit(m.get_mpz_t(), bits);
    lo -= m;
  }
  Integer hi = v - lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), hi.get_mpz_t(), bits);
  unpack(lo, out.subspan(0, mid), k);
  unpack(hi, out.subspan(mid), k);
}

std::size_t bit_length(std::size_t n) {
  std::size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------

ZPoly::ZPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

ZPoly::ZPoly(const Integer& constant) {
  if (constant != 0) c_.push_back(constant);
}

ZPoly ZPoly::monomial(const Integer& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t ZPoly::max_bits() const {
  std::size_t b = 0;
  for (const auto& x : c_) b = std::max(b, mpz_sizeinbase(x.get_mpz_t(), 2));
  return b;
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = a.c_.size();
  const std::size_t m = b.c_.size();
  std::vector<Integer> out(n + m - 1);
  if (std::min(n, m) < kKroneckerMinLength) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return ZPoly(std::move(out));
  }
  const mp_bitcnt_t k = a.max_bits() + b.max_bits() + bit_length(std::min(n, m)) + 3;
  Integer prod = pack(a.c_, k) * pack(b.c_, k);
  unpack(prod, out, k);
  return ZPoly(std::move(out));
}

Integer ZPoly::content() const {
  Integer g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(lc()) < 0) g = -g;
  return divexact(g);
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Integer> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return ZPoly(std::move(d));
}

ZPoly ZPoly::divexact(const Integer& k) const {
  if (k == 0) throw Error(Errc::division_by_zero, "ZPoly divided by zero");
  ZPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

Rational ZPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer acc = c_.back();
  Integer dpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    dpow *= d;
    acc = acc * n + c_[i] * dpow;
  }
  return make_rational(acc, dpow);
}

Integer ZPoly::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string ZPoly::to_string(char var) const { return Polynomial(*this).to_string(var); }

// ---------------------------------------------------------------------------

std::optional<ZPoly> try_divexact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.is_zero()) return ZPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  if (b.degree() == 0) {
    for (const auto& x : a.coeffs()) {
      if (!mpz_divisible_p(x.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    }
    return a.divexact(b.lc());
  }
  // Cheap necessary condition: trailing and leading coefficients divide.
  if (!mpz_divisible_p(a.lc().get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
  if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;

  std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree()) - db;
  std::vector<Integer> q(dq + 1);
  for (std::size_t k = dq + 1; k-- > 0;) {
    Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) {
      mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), b[i].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return ZPoly(std::move(q));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
  auto q = try_divexact(a, b);
  if (!q) throw Error(Errc::domain, "inexact polynomial division");
  return *std::move(q);
}

PseudoDivision pseudo_divide(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  PseudoDivision out{ZPoly{}, a, Integer(1)};
  if (a.degree() < b.degree()) return out;
  const long db = b.degree();
  while (!out.remainder.is_zero() && out.remainder.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(out.remainder.degree() - db);
    ZPoly term = ZPoly::monomial(out.remainder.lc(), shift);
    out.quotient *= b.lc();
    out.quotient += term;
    out.remainder *= b.lc();
    out.remainder -= term * b;
    out.multiplier *= b.lc();
  }
  return out;
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  const ZPoly f = a.primitive_part();
  const ZPoly g = b.primitive_part();
  if (f.degree() == 0 || g.degree() == 0) return ZPoly(1);
  if (f == g) return f;

  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());

  long bound = std::min(f.degree(), g.degree());
  std::vector<Integer> h;  // gamma * gcd, symmetric residues mod `modulus`
  Integer modulus = 0;

  for (std::size_t idx = 0;; ++idx) {
    const u64 p = primes().get(idx);
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0 || mpz_fdiv_ui(g.lc().get_mpz_t(), p) == 0) continue;
    ModPoly hp = gcd_mod(reduce(f, p), reduce(g, p), p);
    const long dp = static_cast<long>(hp.size()) - 1;
    if (dp == 0) return ZPoly(1);
    if (dp > bound) continue;  // unlucky prime
    const u64 gp = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& x : hp) x = mulmod(x, gp, p);

    if (dp < bound || modulus == 0) {
      bound = dp;
      h.assign(hp.size(), Integer());
      for (std::size_t i = 0; i < hp.size(); ++i) h[i] = static_cast<unsigned long>(hp[i]);
      modulus = static_cast<unsigned long>(p);
      const Integer half = modulus / 2;
      for (auto& x : h) {
        if (x > half) x -= modulus;
      }
      continue;
    }

    // CRT: lift h from `modulus` to `modulus * p`.
    const u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    bool changed = false;
    const Integer next = modulus * static_cast<unsigned long>(p);
    const Integer half = next / 2;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const u64 old = mpz_fdiv_ui(h[i].get_mpz_t(), p);
      const u64 diff = hp[i] >= old ? hp[i] - old : hp[i] + p - old;
      if (diff == 0) continue;
      changed = true;
      h[i] += modulus * static_cast<unsigned long>(mulmod(diff, minv, p));
      mpz_fdiv_r(h[i].get_mpz_t(), h[i].get_mpz_t(), next.get_mpz_t());
      if (h[i] > half) h[i] -= next;
    }
    modulus = next;
    if (changed) continue;

    ZPoly candidate = ZPoly(h).primitive_part();
    if (try_divexact(f, candidate) && try_divexact(g, candidate)) return candidate;
  }
}

SquarefreeFactorization squarefree_factorization(const ZPoly& f) {
  if (f.is_zero()) throw Error(Errc::domain, "squarefree factorization of the zero polynomial");
  SquarefreeFactorization out;
  out.unit = f.content();
  if (sgn(f.lc()) < 0) out.unit = -out.unit;
  const ZPoly p = f.primitive_part();
  if (p.degree() == 0) return out;

  const ZPoly dp = p.derivative();
  const ZPoly a0 = gcd(p, dp);
  ZPoly b = divexact(p, a0);
  ZPoly c = divexact(dp, a0);
  ZPoly d = c - b.derivative();
  while (b.degree() > 0) {
    ZPoly a = gcd(b, d);
    b = divexact(b, a);
    c = divexact(d, a);
    d = c - b.derivative();
    out.factors.push_back(std::move(a));
  }
  while (!out.factors.empty() && out.factors.back().degree() == 0) out.factors.pop_back();
  return out;
}

std::optional<ZPoly> square_root(const ZPoly& f) {
  if (f.is_zero()) return ZPoly{};
  if (f.degree() % 2 != 0) return std::nullopt;
  auto top = integer_square_root(f.lc());
  if (!top) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t m = n / 2;
  std::vector<Integer> g(m + 1);
  g[m] = *top;
  const Integer two_top = 2 * *top;
  // Match coefficients of u^(n-k) from the top down.
  for (std::size_t k = 1; k <= m; ++k) {
    Integer s = f[n - k];
    for (std::size_t i = m - k + 1; i <= m; ++i) {
      const std::size_t j = n - k - i;
      if (j < m - k + 1 || j > m) continue;
      s -= g[i] * g[j];
    }
    if (!mpz_divisible_p(s.get_mpz_t(), two_top.get_mpz_t())) return std::nullopt;
    mpz_divexact(g[m - k].get_mpz_t(), s.get_mpz_t(), two_top.get_mpz_t());
  }
  ZPoly root(std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

}  // namespace quintforge
