#include "modrecip/reciprocity.hpp"

#include <cassert>
#include <utility>
#include <vector>

namespace modrecip {

ReciprocityReport reciprocity_check(const Integer& a, const Integer& b,
                                    UnitConvention convention) {
  if (sgn(a) == 0 || sgn(b) == 0) {
    throw ArithmeticError(Failure::ZeroOperand, "reciprocity_check: zero operand");
  }
  if (gcd(a, b) != 1) throw ArithmeticError(Failure::NotCoprime, "reciprocity_check: gcd(a, b) != 1");

  ReciprocityReport report;
  report.a = a;
  report.b = b;
  report.inv_a_mod_b = mod_inverse(a, b, convention).value();
  report.inv_b_mod_a = mod_inverse(b, a, convention).value();
  report.lhs = a * report.inv_a_mod_b + b * report.inv_b_mod_a;
  const Integer ab = a * b;
  report.rhs = 1 + ab;
  // lhs - 1 is a multiple of a*b whenever both inverses satisfy their
  // congruences; otherwise k is the floor quotient and holds is false.
  report.k = floor_div(report.lhs - 1, ab);
  report.holds = report.lhs == report.rhs;
  return report;
}

ReciprocityTrace inverse_via_reciprocity_traced(const Integer& a, const Integer& b) {
  if (sgn(a) == 0 || sgn(b) == 0) return {Failure::ZeroOperand, 0};

  // Each entry (r, m) is a pending unwind: (r^-1)_m from (m^-1)_r.
  std::vector<std::pair<Integer, Integer>> pending;
  Integer value = a;
  Integer modulus = b;
  std::size_t steps = 0;
  Integer x;
  for (;;) {
    ++steps;
    if (is_unit(modulus)) {
      x = unit_modulus_inverse(value, modulus);
      break;
    }
    Integer r = floor_mod(value, modulus);
    if (sgn(r) == 0) return {Failure::NotCoprime, steps};
    value = std::move(modulus);
    modulus = r;
    pending.emplace_back(std::move(r), value);
  }

  Integer numerator;
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
    const auto& [r, m] = *it;
    numerator = 1 + r * m - m * x;
    assert(mpz_divisible_p(numerator.get_mpz_t(), r.get_mpz_t()));
    mpz_divexact(x.get_mpz_t(), numerator.get_mpz_t(), r.get_mpz_t());
  }
  return {x, steps};
}

DiophantineSolution solve_diophantine(const Integer& a, const Integer& m) {
  const InverseOutcome inv = mod_inverse(a, m);
  if (!inv) throw ArithmeticError(inv.failure(), "solve_diophantine: no inverse");
  DiophantineSolution sol{inv.value(), 0};
  const Integer numerator = a * sol.x - 1;
  assert(mpz_divisible_p(numerator.get_mpz_t(), m.get_mpz_t()));
  mpz_divexact(sol.k.get_mpz_t(), numerator.get_mpz_t(), m.get_mpz_t());
  return sol;
}

}  // namespace modrecip
