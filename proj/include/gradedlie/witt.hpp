#pragma once
// Graded dimensions of free Lie algebras on weighted generators, from the
// Hilbert series identity prod_w (1 - t^w)^(-d_w) = 1/(1 - g(t)) where g
// counts generators by weight magnitude. Solved exactly: convolution for the
// series coefficients, a Newton identity for the power sums, then Mobius
// inversion. Every division is asserted exact.

#include <map>
#include <stdexcept>
#include <vector>

#include "gradedlie/errors.hpp"
#include "gradedlie/generator_spec.hpp"
#include "gradedlie/rational.hpp"

namespace gradedlie {

// Per-weight dimension counts keyed by user-facing signed weight. Tables carry
// every weight from the lightest possible through the bound, zeros included.
using DimensionTable = std::map<int, Int>;

namespace detail {

inline int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

inline Int exact_quotient(const Int& a, const Int& b) {
  Int q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw std::logic_error("inexact division in Witt recursion");
  return q;
}

// Dimensions keyed by positive magnitude 1..bound.
inline std::vector<Int> witt_magnitudes(const std::vector<int>& generator_magnitudes, int bound) {
  std::vector<Int> g(bound + 1, 0);
  for (int m : generator_magnitudes)
    if (m <= bound) g[m] += 1;

  std::vector<Int> c(bound + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= bound; ++n)
    for (int k = 1; k <= n; ++k)
      if (g[k] != 0) c[n] += g[k] * c[n - k];

  std::vector<Int> ell(bound + 1, 0);
  for (int n = 1; n <= bound; ++n) {
    Int acc = n * c[n];
    for (int k = 1; k < n; ++k) acc -= ell[k] * c[n - k];
    ell[n] = acc;
  }

  std::vector<Int> dims(bound + 1, 0);
  for (int n = 1; n <= bound; ++n) {
    Int acc = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) acc += mobius(n / d) * ell[d];
    dims[n] = exact_quotient(acc, Int(n));
  }
  return dims;
}

inline int checked_magnitude_bound(const GeneratorSpec& spec, int weight_bound) {
  if (weight_bound == 0) throw DomainError("weight bound must be nonzero");
  if (!spec.empty()) {
    if ((weight_bound > 0) != (spec.sign() > 0))
      throw DomainError("weight bound sign does not match generator weights");
    const int magnitude = weight_bound < 0 ? -weight_bound : weight_bound;
    if (magnitude < spec.min_magnitude())
      throw DomainError("weight bound is lighter than the lightest generator");
    return magnitude;
  }
  return weight_bound < 0 ? -weight_bound : weight_bound;
}

}  // namespace detail

inline DimensionTable witt_dims(const GeneratorSpec& spec, int weight_bound) {
  const int bound = detail::checked_magnitude_bound(spec, weight_bound);
  const int sign = spec.empty() ? (weight_bound > 0 ? 1 : -1) : spec.sign();
  std::vector<int> magnitudes;
  for (std::size_t i = 0; i < spec.size(); ++i) magnitudes.push_back(spec.magnitude(i));
  const std::vector<Int> dims = detail::witt_magnitudes(magnitudes, bound);
  DimensionTable table;
  for (int n = 1; n <= bound; ++n) table[sign * n] = dims[n];
  return table;
}

}  // namespace gradedlie
