#include "quintforge/polynomial.hpp"

#include "quintforge/error.hpp"

#include <cctype>
#include <sstream>

namespace quintforge {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(long constant) {
  if (constant != 0) c_.emplace_back(constant);
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial::Polynomial(const ZPoly& z) {
  c_.reserve(z.coeffs().size());
  for (const auto& x : z.coeffs()) c_.emplace_back(x);
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& x : c_) {
    if (x.get_den() != 1) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& k) {
  if (k == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Rational sa, sb;
  ZPoly za = a.to_primitive(&sa);
  ZPoly zb = b.to_primitive(&sb);
  return Polynomial(za * zb) * (sa * sb);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lc();
  return *this * inv;
}

Rational Polynomial::content() const {
  if (is_zero()) return 0;
  Integer g = 0;
  Integer l = 1;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  return make_rational(g, l);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

ZPoly Polynomial::to_primitive(Rational* scale) const {
  if (is_zero()) {
    if (scale) *scale = 0;
    return {};
  }
  Rational cont = content();
  std::vector<Integer> z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational q = c_[i] / cont;
    z[i] = q.get_num();
  }
  if (scale) *scale = cont;
  return ZPoly(std::move(z));
}

ZPoly Polynomial::to_zpoly() const {
  std::vector<Integer> z(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].get_den() != 1) throw Error(Errc::domain, "polynomial has non-integer coefficients");
    z[i] = c_[i].get_num();
  }
  return ZPoly(std::move(z));
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& x = c_[i];
    if (x == 0) continue;
    Rational mag = abs(x);
    if (first) {
      if (sgn(x) < 0) os << '-';
    } else {
      os << (sgn(x) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Polynomial::to_coeff_list() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

namespace {

Polynomial parse_monomial_sum(std::string_view text, char var) {
  std::vector<Rational> coeffs;
  auto add = [&](std::size_t deg, const Rational& c) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  };
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw Error(Errc::parse, "empty polynomial");
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      // a '-' directly after '^' or '/' is not a term separator
      ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw Error(Errc::parse, "dangling sign in polynomial '" + std::string(text) + "'");
    Rational c = 1;
    std::size_t deg = 0;
    auto vpos = term.find(var);
    std::string cpart = vpos == std::string::npos ? term : term.substr(0, vpos);
    if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
    if (!cpart.empty()) c = parse_rational(cpart);
    if (vpos != std::string::npos) {
      std::string rest = term.substr(vpos + 1);
      if (rest.empty()) {
        deg = 1;
      } else if (rest.front() == '^' || rest.rfind("**", 0) == 0) {
        std::string e = rest.substr(rest.front() == '^' ? 1 : 2);
        try {
          std::size_t used = 0;
          deg = std::stoul(e, &used);
          if (used != e.size()) throw std::invalid_argument(e);
        } catch (const std::exception&) {
          throw Error(Errc::parse, "bad exponent in term '" + term + "'");
        }
      } else {
        throw Error(Errc::parse, "unexpected text after variable in term '" + term + "'");
      }
    }
    add(deg, c * sign);
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial Polynomial::parse(std::string_view text, char var) {
  if (text.find(var) == std::string_view::npos && text.find(',') != std::string_view::npos) {
    std::vector<Rational> coeffs;
    std::string item;
    std::istringstream is{std::string(text)};
    while (std::getline(is, item, ',')) coeffs.push_back(parse_rational(item));
    return Polynomial(std::move(coeffs));
  }
  return parse_monomial_sum(text, var);
}

PolyDivision divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const std::size_t dq = static_cast<std::size_t>(a.degree()) - db;
  std::vector<Rational> q(dq + 1);
  const Rational inv = 1 / b.lc();
  for (std::size_t k = dq + 1; k-- > 0;) {
    q[k] = r[k + db] * inv;
    if (q[k] == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) r[k + i] -= q[k] * b.coeffs()[i];
  }
  r.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return Polynomial(gcd(a.to_primitive(), b.to_primitive())).monic();
}

std::optional<Polynomial> polynomial_square_root(const Polynomial& f) {
  if (f.is_zero()) return Polynomial{};
  if (f.degree() % 2 != 0) return std::nullopt;
  auto top = rational_square_root(f.lc());
  if (!top) return std::nullopt;
  const auto& c = f.coeffs();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const std::size_t m = n / 2;
  std::vector<Rational> g(m + 1);
  g[m] = *top;
  const Rational inv = 1 / (2 * *top);
  for (std::size_t k = 1; k <= m; ++k) {
    Rational s = c[n - k];
    for (std::size_t i = m - k + 1; i <= m; ++i) {
      const std::size_t j = n - k - i;
      if (j < m - k + 1 || j > m) continue;
      s -= g[i] * g[j];
    }
    g[m - k] = s * inv;
  }
  Polynomial root(std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

}  // namespace quintforge
