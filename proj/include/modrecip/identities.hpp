#pragma once

/// Inverse identities derived from the reciprocity formula.
///
/// Every operation evaluates the closed-form right-hand side of its identity
/// from small inverses, never by running a fresh gcd on the target modulus.
/// Preconditions are enforced with ArithmeticError. The optional
/// UnitConvention selects which value the inner inverses take for a unit
/// modulus; UnitConvention::Classical exists to demonstrate where the
/// identities break under the classical definition.

#include "modrecip/core.hpp"

#include <array>

namespace modrecip {

/// ((k*a + b)^-1)_a from (b^-1)_a. For |a| = 1 the value is corrected by
/// (sgn(k*a + b) - sgn(b)) / 2.
Integer shift_invariance(const Integer& a, const Integer& b, const Integer& k,
                         UnitConvention convention = UnitConvention::Extended);

/// (a^-1)_{k*a + b} = k*(a - (b^-1)_a) + (a^-1)_b. Requires |a| != 1.
Integer reduce_inverse_plus(const Integer& a, const Integer& b, const Integer& k,
                            UnitConvention convention = UnitConvention::Extended);

/// (a^-1)_{k*a - b} = k*(b^-1)_a - (b - (a^-1)_b). Requires |a| != 1.
Integer reduce_inverse_minus(const Integer& a, const Integer& b, const Integer& k,
                             UnitConvention convention = UnitConvention::Extended);

struct SquareInverse {
  Integer form_square;  // (((b*(b^-1)_a - 2)*(b^-1)_a)^2)_{a^2}
  Integer form_cubic;   // ((3 - 2*b*(b^-1)_a)*((b^-1)_a)^2)_{a^2}
  bool forms_agree = false;
};

/// Both forms of ((b^2)^-1)_{a^2}. Requires gcd(a, b) = 1 and |a| > 1.
SquareInverse square_inverse_forms(const Integer& a, const Integer& b,
                                   UnitConvention convention = UnitConvention::Extended);

/// The common value of both forms; throws ArithmeticError(Domain) if they
/// disagree.
Integer square_inverse(const Integer& a, const Integer& b,
                       UnitConvention convention = UnitConvention::Extended);

/// Quantities built from two coprime pairs (a, b) and (c, d).
///
///   u = ac + bd   v = ad - bc   s = a^2 + b^2   t = c^2 + d^2
///
/// x1..x4, y1..y4 and z1..z3 are stored zero-based (x[0] is x1).
struct QuadPairReport {
  Integer a, b, c, d;
  Integer u, v, s, t;
  std::array<Integer, 4> x;
  std::array<Integer, 4> y;
  std::array<Integer, 3> z;

  // (x_i^-1)_u = (y_i)_u for i = 1, 2 and (x_i^-1)_v = (y_i)_v for i = 3, 4.
  std::array<bool, 4> pass_inverse_pairs{};

  // Filled by sum_of_squares_inverses only.
  Integer inv_s_mod_u, inv_t_mod_u, inv_s_mod_v, inv_t_mod_v;
  // (s^-1)_u, (t^-1)_u, (s^-1)_v, (t^-1)_v by formula vs. mod_inverse.
  std::array<bool, 4> pass_sum_of_squares{};
  // s*y1 = v + u*z1, t*x1 = v + u*z2, s*y4 = u - v*z1, t*x4 = u + v*z3.
  std::array<bool, 4> pass_exact_identities{};

  bool all_inverse_pairs_pass() const;
  bool all_sum_of_squares_pass() const;
  bool all_exact_identities_pass() const;
};

/// Fills u, v, s, t, x, y, z and pass_inverse_pairs / pass_exact_identities.
/// Requires gcd(a, b) = gcd(c, d) = 1, |u| > 1 and |v| > 1.
QuadPairReport quad_pair_inverses(const Integer& a, const Integer& b, const Integer& c,
                                  const Integer& d,
                                  UnitConvention convention = UnitConvention::Extended);

/// y1 for strictly positive a, b, c, d, where it is already the exact
/// representative of (x1^-1)_u. Requires gcd(a, b) = gcd(c, d) = 1 and v != 0.
/// Throws std::logic_error if y1 is not that representative.
Integer positive_case_exact(const Integer& a, const Integer& b, const Integer& c,
                            const Integer& d);

/// quad_pair_inverses plus the four inverses of s and t modulo u and v.
/// Additionally requires gcd(u, v) = 1.
QuadPairReport sum_of_squares_inverses(const Integer& a, const Integer& b, const Integer& c,
                                       const Integer& d,
                                       UnitConvention convention = UnitConvention::Extended);

}  // namespace modrecip
