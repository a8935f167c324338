#pragma once

#include "modrecip/core.hpp"

#include <cstddef>

namespace modrecip {

/// Both sides of a*(a^-1)_b + b*(b^-1)_a = 1 + a*b for one coprime pair.
struct ReciprocityReport {
  Integer a;
  Integer b;
  Integer inv_a_mod_b;
  Integer inv_b_mod_a;
  Integer lhs;  // a*inv_a_mod_b + b*inv_b_mod_a
  Integer rhs;  // 1 + a*b
  Integer k;    // lhs = 1 + k*a*b
  bool holds = false;
};

/// Recomputes both inverses and the multiplier k. Throws ArithmeticError
/// (ZeroOperand / NotCoprime) on invalid pairs.
ReciprocityReport reciprocity_check(const Integer& a, const Integer& b,
                                    UnitConvention convention = UnitConvention::Extended);

struct ReciprocityTrace {
  InverseOutcome inverse;
  std::size_t steps = 0;  // reduction steps including the unit base case
};

/// (a^-1)_b without extended_gcd.
///
/// Each step reduces r = (a)_b, which leaves the inverse unchanged, then swaps
/// roles to (b, r). Once the modulus reaches +-1 the closed form applies and
/// the chain is unwound with
///
///   (r^-1)_b = (1 + r*b - b*(b^-1)_r) / r
///
/// which is always an exact division. Runs iteratively.
ReciprocityTrace inverse_via_reciprocity_traced(const Integer& a, const Integer& b);

inline InverseOutcome inverse_via_reciprocity(const Integer& a, const Integer& b) {
  return inverse_via_reciprocity_traced(a, b).inverse;
}

struct DiophantineSolution {
  Integer x;
  Integer k;  // a*x - k*m = 1
};

/// Solution of a*x - k*m = 1 with x = (a^-1)_m.
DiophantineSolution solve_diophantine(const Integer& a, const Integer& m);

}  // namespace modrecip
