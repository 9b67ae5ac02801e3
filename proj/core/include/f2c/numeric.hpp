#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace f2c {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long long e) {
  BigInt one = 1;
  if (e >= 0)
    return Rational(one << static_cast<unsigned>(e));
  return Rational(BigInt(1), one << static_cast<unsigned>(-e));
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt &v) { return v.str(); }

inline long double to_long_double(const Rational &q) {
  return q.convert_to<long double>();
}

} // namespace f2c
