#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace levyflow {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Rational(r);
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int j = 0; j < k; ++j) {
    r *= (n - j);
    r /= (j + 1);
  }
  return Rational(r);
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace levyflow
