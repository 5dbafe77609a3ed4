#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bfc/errors.hpp"

namespace bfc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(Integer(text.substr(0, slash)), den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr) throw;
    throw ParseError("bad rational '" + text + "'");
  }
}

}  // namespace bfc
