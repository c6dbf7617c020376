#pragma once

#include "quintforge/polynomial.hpp"
#include "quintforge/rational_function.hpp"

#include <doctest.h>

namespace doctest {

template <>
struct StringMaker<quintforge::RationalFunction> {
  static String convert(const quintforge::RationalFunction& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<quintforge::Polynomial> {
  static String convert(const quintforge::Polynomial& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<quintforge::Rational> {
  static String convert(const quintforge::Rational& q) { return q.get_str().c_str(); }
};
template <>
struct StringMaker<quintforge::Integer> {
  static String convert(const quintforge::Integer& z) { return z.get_str().c_str(); }
};

}  // namespace doctest
