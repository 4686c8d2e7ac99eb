#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "hypermod/errors.hpp"

namespace hypermod {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Serialized as "p" or "p/q"; no precision loss.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw ValidationError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ValidationError("cannot parse rational: " + s);
  }
}

inline BigInt rational_floor(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) > numerator(r)) --q;  // fix toward -inf
  return q;
}

inline BigInt rational_ceil(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);
  if (q * denominator(r) < numerator(r)) ++q;
  return q;
}

}  // namespace hypermod
