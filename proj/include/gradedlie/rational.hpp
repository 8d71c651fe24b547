#pragma once
// Exact scalar arithmetic: arbitrary precision integers and rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

#include "gradedlie/errors.hpp"

namespace gradedlie {

using Int = boost::multiprecision::cpp_int;

// Always stored in lowest terms with positive denominator; zero is 0/1.
// cpp_rational maintains exactly this canonical form.
using Scalar = boost::multiprecision::cpp_rational;

inline Int scalar_num(const Scalar& s) { return boost::multiprecision::numerator(s); }
inline Int scalar_den(const Scalar& s) { return boost::multiprecision::denominator(s); }

inline std::string int_to_string(const Int& n) { return n.str(); }

inline std::string scalar_to_string(const Scalar& s) {
  if (scalar_den(s) == 1) return scalar_num(s).str();
  return scalar_num(s).str() + "/" + scalar_den(s).str();
}

inline bool is_decimal_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  return true;
}

inline Int int_from_string(const std::string& text) {
  if (!is_decimal_integer(text)) throw DomainError("not an integer: '" + text + "'");
  return Int(text);
}

// Accepts "p" or "p/q" with optional leading sign on p; q must be positive.
inline Scalar scalar_from_string(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Scalar(int_from_string(text));
  const Int p = int_from_string(text.substr(0, slash));
  const std::string den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text) || den_text[0] == '+' || den_text[0] == '-')
    throw DomainError("not a rational: '" + text + "'");
  const Int q(den_text);
  if (q == 0) throw DomainError("zero denominator: '" + text + "'");
  return Scalar(p, q);
}

}  // namespace gradedlie
