#pragma once

// The two coefficient fields the constructions run over: Q for numeric
// tuples and Q(u) for families. Templates in this library only use the
// overloads below plus ring operators and construction from long.

#include "quintforge/exact_arith.hpp"
#include "quintforge/rational_function.hpp"

#include <optional>
#include <string>

namespace quintforge {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

inline std::optional<Rational> field_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  return rational_square_root(x);
}
inline std::optional<RationalFunction> field_sqrt(const RationalFunction& f) { return ratfunc_is_square(f); }

inline std::string field_to_string(const Rational& x) { return x.get_str(); }
inline std::string field_to_string(const RationalFunction& f) { return f.to_string(); }

}  // namespace quintforge
