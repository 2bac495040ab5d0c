#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "spl/error.hpp"

namespace spl {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(long long num, long long den) {
  if (den == 0) throw parameter_error("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Wire format "p/q". Integers keep the "/1" so every value has one shape.
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw parameter_error("rational with zero denominator: " + s);
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw parameter_error("malformed rational: " + s);
  }
}

/// Smallest integer not below q.
inline BigInt ceil_of(const Rational& q) {
  const BigInt n = numerator_of(q);
  const BigInt d = denominator_of(q);
  BigInt quot = n / d;  // truncates toward zero
  if (quot * d < n) ++quot;
  return quot;
}

}  // namespace spl
