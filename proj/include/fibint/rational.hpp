#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fibint {

/// Exact rational scalar. All symbolic computation in the library is carried
/// out over Q; no floating point enters outside the Monte Carlo oracle.
using Rat = mpq_class;

using VecQ = std::vector<Rat>;

/// Parses an exact rational like "3/2", "-1" or "−1/2" (U+2212 minus is
/// accepted alongside ASCII '-'). Throws domain_error on malformed input.
Rat parse_rational(std::string_view text);

/// Parses a comma-separated vector of exact rationals.
VecQ parse_rational_vector(std::string_view text);

/// Canonical string form, lowest terms, no "/1" suffix.
std::string rational_str(const Rat& q);

std::string vector_str(const VecQ& v);

inline Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace fibint
