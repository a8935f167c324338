#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace modrecip {

/// Exact signed integer used for every scalar in the library.
using Integer = mpz_class;

/// -1, 0 or 1.
inline int sgn(const Integer& x) { return mpz_sgn(x.get_mpz_t()); }

inline Integer abs(const Integer& x) {
  Integer r;
  mpz_abs(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_unit(const Integer& x) { return mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0; }

/// Number of bits in |x|; 0 for x = 0.
inline std::size_t bit_length(const Integer& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

/// Parses a decimal or 0x-prefixed hexadecimal integer with an optional
/// sign. Returns nullopt on any malformed input.
std::optional<Integer> parse_integer(std::string_view text);

std::string to_string(const Integer& x);

}  // namespace modrecip
