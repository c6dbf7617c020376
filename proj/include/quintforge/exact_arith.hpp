#pragma once

// Exact scalars and the small number-theoretic toolkit the rest of the
// library is written against. Integer and Rational are GMP values; a Rational
// is always canonical (positive denominator, reduced).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quintforge {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign { positive, negative };

inline int sign_factor(Sign s) { return s == Sign::positive ? 1 : -1; }
char sign_char(Sign s);
Sign parse_sign(std::string_view text);

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(std::string_view text);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Deterministic for |n| < 2^64 (Miller-Rabin with the first twelve prime
// bases); GMP's BPSW test above that.
bool is_prime(const Integer& n);

// Trial-division factorization of |n|, primes ascending. n != 0.
std::vector<std::pair<Integer, unsigned>> factor(const Integer& n);

struct Valuation {
  unsigned long exponent;
  Integer stripped;  // n / p^exponent, keeps the sign of n
};

// v_p(n) and n with every factor p removed.
Valuation valuation_and_strip(const Integer& n, const Integer& p);

// n with every prime dividing d divided out completely (sign kept).
Integer strip_by_modulus(const Integer& n, const Integer& d);

struct SquarefreeDecomposition {
  Integer squarefree_part;    // carries the sign of the input
  Integer square_root_part;   // positive
};

SquarefreeDecomposition squarefree_decompose(const Integer& n);
bool is_squarefree(const Integer& n);

std::optional<Integer> integer_square_root(const Integer& n);

// Nonnegative w with w^2 == r, if r is the square of a rational.
std::optional<Rational> rational_square_root(const Rational& r);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi_symbol(const Integer& a, const Integer& n);

// Least nonnegative residue of n modulo m > 0.
Integer mod_floor(const Integer& n, const Integer& m);
std::int64_t mod_floor(std::int64_t n, std::int64_t m);

// The squarefree integer of least absolute value with the requested sign in
// the class r mod m. Searches at most 64 steps of m.
Integer smallest_squarefree_in_class(const Integer& r, const Integer& m, Sign sign);

}  // namespace quintforge
