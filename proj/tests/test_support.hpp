#pragma once

#include "doctest.h"
#include "hypersimplex/polynomials.hpp"

namespace doctest {
template <>
struct StringMaker<hypersimplex::IntPolynomial> {
  static String convert(const hypersimplex::IntPolynomial& p) { return p.to_string().c_str(); }
};
template <>
struct StringMaker<hypersimplex::BivariatePoly> {
  static String convert(const hypersimplex::BivariatePoly& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
