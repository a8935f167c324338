#pragma once

/// Signed floor modulo and the extended modular inverse.
///
/// The inverse (a^-1)_m used throughout this library follows the sign of the
/// modulus:
///
///   m > 1   : the x in [1, m-1]   with a*x = 1 (mod m)
///   m < -1  : the x in [m+1, -1]  with a*x = 1 (mod m)
///   |m| = 1 : x = |m|*(sgn(m) - sgn(a))/2 + sgn(a)
///
/// so (a^-1)_1 is 1 for a > 0 and 0 for a < 0, and (a^-1)_{-1} is 0 for
/// a > 0 and -1 for a < 0. The classical convention returns 0 for every
/// unit modulus; it is kept as classical_inverse for comparison.

#include "modrecip/integer.hpp"

#include <stdexcept>
#include <string_view>
#include <utility>
#include <variant>

namespace modrecip {

enum class Failure {
  ZeroOperand,  // a*m = 0, or a zero divisor
  NotCoprime,   // gcd(a, m) != 1
  Domain,       // an operation-specific hypothesis does not hold
};

std::string_view to_string(Failure f);

/// Thrown by operations that return a plain value when their preconditions
/// are violated.
class ArithmeticError : public std::domain_error {
 public:
  ArithmeticError(Failure reason, const std::string& what)
      : std::domain_error(what), reason_(reason) {}

  Failure reason() const noexcept { return reason_; }

 private:
  Failure reason_;
};

/// Either an inverse value or the reason it is undefined.
class InverseOutcome {
 public:
  InverseOutcome(Integer value) : state_(std::move(value)) {}
  InverseOutcome(Failure failure) : state_(failure) {}

  bool ok() const noexcept { return std::holds_alternative<Integer>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  /// Throws ArithmeticError carrying the failure when there is no value.
  const Integer& value() const;
  Failure failure() const;

  const Integer& operator*() const { return value(); }

  friend bool operator==(const InverseOutcome&, const InverseOutcome&) = default;

 private:
  std::variant<Integer, Failure> state_;
};

/// Which value to use for an inverse modulo +-1.
enum class UnitConvention {
  Extended,   // the closed form above
  Classical,  // always 0
};

/// floor(a / m). Throws ArithmeticError(ZeroOperand) when m = 0.
Integer floor_div(const Integer& a, const Integer& m);

/// a - m*floor(a/m): 0 <= r < m for m > 0 and m < r <= 0 for m < 0.
/// Throws ArithmeticError(ZeroOperand) when m = 0.
Integer floor_mod(const Integer& a, const Integer& m);

struct Bezout {
  Integer g;  // gcd(a, b) > 0
  Integer x;
  Integer y;  // a*x + b*y = g
};

/// Iterative extended Euclid. Throws ArithmeticError(ZeroOperand) when a = b = 0.
Bezout extended_gcd(const Integer& a, const Integer& b);

/// Closed form for |m| = 1 under the given convention. m must be +-1, a != 0.
Integer unit_modulus_inverse(const Integer& a, const Integer& m,
                             UnitConvention convention = UnitConvention::Extended);

/// (a^-1)_m via extended_gcd and normalisation into the signed window.
InverseOutcome mod_inverse(const Integer& a, const Integer& m,
                           UnitConvention convention = UnitConvention::Extended);

/// Classical residue in [0, |m|-1]; 0 when |m| = 1.
InverseOutcome classical_inverse(const Integer& a, const Integer& m);

/// Exhaustive search over the signed window for |m| > 1. Slow; test oracle.
/// Returns Failure::Domain for |m| <= 1.
InverseOutcome brute_force_inverse(const Integer& a, const Integer& m);

}  // namespace modrecip
