#include "modrecip/core.hpp"

namespace modrecip {

std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::ZeroOperand: return "ZeroOperand";
    case Failure::NotCoprime: return "NotCoprime";
    case Failure::Domain: return "DomainError";
  }
  return "Unknown";
}

const Integer& InverseOutcome::value() const {
  if (const auto* v = std::get_if<Integer>(&state_)) return *v;
  const Failure f = std::get<Failure>(state_);
  throw ArithmeticError(f, "inverse undefined: " + std::string(to_string(f)));
}

Failure InverseOutcome::failure() const {
  if (const auto* f = std::get_if<Failure>(&state_)) return *f;
  throw std::logic_error("InverseOutcome holds a value, not a failure");
}

Integer floor_div(const Integer& a, const Integer& m) {
  if (sgn(m) == 0) throw ArithmeticError(Failure::ZeroOperand, "floor_div: zero modulus");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  if (sgn(m) == 0) throw ArithmeticError(Failure::ZeroOperand, "floor_mod: zero modulus");
  // mpz_fdiv_r takes the sign of the divisor, which is exactly the floor window.
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  if (sgn(a) == 0 && sgn(b) == 0) {
    throw ArithmeticError(Failure::ZeroOperand, "extended_gcd: both operands zero");
  }
  if (is_unit(a)) return {1, a, 0};

  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  Integer q, tmp;
  while (sgn(r) != 0) {
    mpz_tdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r.swap(r);
    r.swap(tmp);
    tmp = old_s - q * s;
    old_s.swap(s);
    s.swap(tmp);
    tmp = old_t - q * t;
    old_t.swap(t);
    t.swap(tmp);
  }
  if (sgn(old_r) < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer unit_modulus_inverse(const Integer& a, const Integer& m, UnitConvention convention) {
  if (convention == UnitConvention::Classical) return 0;
  // |m|*(sgn(m) - sgn(a))/2 + sgn(a) with |m| = 1.
  return (sgn(m) - sgn(a)) / 2 + sgn(a);
}

InverseOutcome mod_inverse(const Integer& a, const Integer& m, UnitConvention convention) {
  if (sgn(a) == 0 || sgn(m) == 0) return Failure::ZeroOperand;
  if (is_unit(m)) return unit_modulus_inverse(a, m, convention);

  Bezout bz = extended_gcd(a, m);
  if (bz.g != 1) return Failure::NotCoprime;
  // Coprime with |m| > 1 rules out a zero residue, so the floor window
  // [0, m-1] or [m+1, 0] collapses to the signed window.
  return floor_mod(bz.x, m);
}

InverseOutcome classical_inverse(const Integer& a, const Integer& m) {
  if (sgn(a) == 0 || sgn(m) == 0) return Failure::ZeroOperand;
  if (is_unit(m)) return Integer(0);
  const Integer modulus = abs(m);
  Bezout bz = extended_gcd(a, modulus);
  if (bz.g != 1) return Failure::NotCoprime;
  return floor_mod(bz.x, modulus);
}

InverseOutcome brute_force_inverse(const Integer& a, const Integer& m) {
  if (sgn(a) == 0 || sgn(m) == 0) return Failure::ZeroOperand;
  if (is_unit(m)) return Failure::Domain;

  const bool positive = sgn(m) > 0;
  Integer x = positive ? Integer(1) : Integer(m + 1);
  const Integer last = positive ? Integer(m - 1) : Integer(-1);
  Integer product_minus_one = a * x - 1;
  for (; x <= last; ++x, product_minus_one += a) {
    if (mpz_divisible_p(product_minus_one.get_mpz_t(), m.get_mpz_t())) return x;
  }
  return Failure::NotCoprime;
}

}  // namespace modrecip
