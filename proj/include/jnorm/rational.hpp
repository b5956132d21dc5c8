#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace jnorm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes in lowest terms with positive denominator: "p" or "p/q".
inline std::string to_string(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

// Accepts "p" or "p/q" with optional leading '-' on p (and on q, normalized).
inline Rat parse_rational(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational: '" + s + "'");
    return Rat(Int(s));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q)) throw std::invalid_argument("bad rational: '" + s + "'");
  Int den(q);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rat(Int(p), den);
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace jnorm
