#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "whitmod/errors.hpp"

namespace whitmod {

// All scalars are exact rationals; no floating point anywhere in the engine.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& n) { return n.str(); }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q" with optional surrounding spaces.
inline Rational parse_rational(std::string_view s) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.empty()) throw ParseError("empty rational");
  auto check_int = [&](std::string_view v) {
    v = strip(v);
    if (v.empty()) throw ParseError("bad rational: '" + std::string(s) + "'");
    std::size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
    if (i == v.size()) throw ParseError("bad rational: '" + std::string(s) + "'");
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') throw ParseError("bad rational: '" + std::string(s) + "'");
    return std::string(v);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(check_int(s)));
  BigInt num(check_int(s.substr(0, slash)));
  BigInt den(check_int(s.substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace whitmod
