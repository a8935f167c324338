#include "modrecip/identities.hpp"

#include <algorithm>
#include <string>

namespace modrecip {
namespace {

Integer inverse_or_throw(const Integer& a, const Integer& m, UnitConvention convention) {
  return mod_inverse(a, m, convention).value();
}

void require_nonzero(std::initializer_list<const Integer*> values, const char* op) {
  for (const Integer* v : values) {
    if (sgn(*v) == 0) throw ArithmeticError(Failure::ZeroOperand, std::string(op) + ": zero operand");
  }
}

void require_coprime(const Integer& a, const Integer& b, const char* op) {
  if (gcd(a, b) != 1) throw ArithmeticError(Failure::NotCoprime, std::string(op) + ": operands not coprime");
}

bool matches(const InverseOutcome& reference, const Integer& value) {
  return reference.ok() && reference.value() == value;
}

// The inverses of one coprime pair that every quad identity is built from.
struct PairInverses {
  Integer first_mod_second;  // (p^-1)_q
  Integer second_mod_first;  // (q^-1)_p
};

PairInverses pair_inverses(const Integer& p, const Integer& q, UnitConvention convention) {
  return {inverse_or_throw(p, q, convention), inverse_or_throw(q, p, convention)};
}

}  // namespace

Integer shift_invariance(const Integer& a, const Integer& b, const Integer& k,
                         UnitConvention convention) {
  require_nonzero({&a, &b}, "shift_invariance");
  require_coprime(a, b, "shift_invariance");
  const Integer shifted = k * a + b;
  if (sgn(shifted) == 0) throw ArithmeticError(Failure::ZeroOperand, "shift_invariance: k*a + b = 0");

  Integer inv = inverse_or_throw(b, a, convention);
  if (is_unit(a)) inv += (sgn(shifted) - sgn(b)) / 2;
  return inv;
}

Integer reduce_inverse_plus(const Integer& a, const Integer& b, const Integer& k,
                            UnitConvention convention) {
  require_nonzero({&a, &b}, "reduce_inverse_plus");
  if (is_unit(a)) throw ArithmeticError(Failure::Domain, "reduce_inverse_plus: |a| = 1 is excluded");
  require_coprime(a, b, "reduce_inverse_plus");
  if (sgn(k * a + b) == 0) throw ArithmeticError(Failure::ZeroOperand, "reduce_inverse_plus: k*a + b = 0");

  const auto [inv_a_b, inv_b_a] = pair_inverses(a, b, convention);
  return k * (a - inv_b_a) + inv_a_b;
}

Integer reduce_inverse_minus(const Integer& a, const Integer& b, const Integer& k,
                             UnitConvention convention) {
  require_nonzero({&a, &b}, "reduce_inverse_minus");
  if (is_unit(a)) throw ArithmeticError(Failure::Domain, "reduce_inverse_minus: |a| = 1 is excluded");
  require_coprime(a, b, "reduce_inverse_minus");
  if (sgn(k * a - b) == 0) throw ArithmeticError(Failure::ZeroOperand, "reduce_inverse_minus: k*a - b = 0");

  const auto [inv_a_b, inv_b_a] = pair_inverses(a, b, convention);
  return k * inv_b_a - (b - inv_a_b);
}

SquareInverse square_inverse_forms(const Integer& a, const Integer& b, UnitConvention convention) {
  require_nonzero({&a, &b}, "square_inverse");
  if (abs(a) <= 1) throw ArithmeticError(Failure::Domain, "square_inverse: requires |a| > 1");
  require_coprime(a, b, "square_inverse");

  const Integer inv_b = inverse_or_throw(b, a, convention);
  const Integer modulus = a * a;
  const Integer root = (b * inv_b - 2) * inv_b;

  SquareInverse out;
  out.form_square = floor_mod(root * root, modulus);
  out.form_cubic = floor_mod((3 - 2 * b * inv_b) * inv_b * inv_b, modulus);
  out.forms_agree = out.form_square == out.form_cubic;
  return out;
}

Integer square_inverse(const Integer& a, const Integer& b, UnitConvention convention) {
  SquareInverse forms = square_inverse_forms(a, b, convention);
  if (!forms.forms_agree) {
    throw ArithmeticError(Failure::Domain, "square_inverse: the two forms disagree");
  }
  return forms.form_square;
}

bool QuadPairReport::all_inverse_pairs_pass() const {
  return std::ranges::all_of(pass_inverse_pairs, [](bool p) { return p; });
}

bool QuadPairReport::all_sum_of_squares_pass() const {
  return std::ranges::all_of(pass_sum_of_squares, [](bool p) { return p; });
}

bool QuadPairReport::all_exact_identities_pass() const {
  return std::ranges::all_of(pass_exact_identities, [](bool p) { return p; });
}

QuadPairReport quad_pair_inverses(const Integer& a, const Integer& b, const Integer& c,
                                  const Integer& d, UnitConvention convention) {
  require_nonzero({&a, &b, &c, &d}, "quad_pair_inverses");
  require_coprime(a, b, "quad_pair_inverses");
  require_coprime(c, d, "quad_pair_inverses");

  QuadPairReport r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.d = d;
  r.u = a * c + b * d;
  r.v = a * d - b * c;
  r.s = a * a + b * b;
  r.t = c * c + d * d;
  if (abs(r.u) <= 1 || abs(r.v) <= 1) {
    throw ArithmeticError(Failure::Domain, "quad_pair_inverses: requires |u| > 1 and |v| > 1");
  }

  const auto [ia_b, ib_a] = pair_inverses(a, b, convention);
  const auto [ic_d, id_c] = pair_inverses(c, d, convention);

  r.x = {a * id_c + b * (d - ic_d),
         a * (c - id_c) + b * ic_d,
         a * (d - ic_d) - b * id_c,
         a * ic_d - b * (c - id_c)};
  r.y = {c * (a - ib_a) + d * ia_b,
         c * ib_a + d * (b - ia_b),
         c * (b - ia_b) - d * ib_a,
         c * ia_b - d * (a - ib_a)};
  r.z = {a * (a - ib_a) + b * ia_b,
         c * id_c + d * (d - ic_d),
         c * (c - id_c) + d * ic_d};

  for (std::size_t i = 0; i < 4; ++i) {
    const Integer& modulus = i < 2 ? r.u : r.v;
    r.pass_inverse_pairs[i] = matches(mod_inverse(r.x[i], modulus, convention), floor_mod(r.y[i], modulus));
  }

  r.pass_exact_identities = {r.s * r.y[0] == r.v + r.u * r.z[0],
                             r.t * r.x[0] == r.v + r.u * r.z[1],
                             r.s * r.y[3] == r.u - r.v * r.z[0],
                             r.t * r.x[3] == r.u + r.v * r.z[2]};
  return r;
}

Integer positive_case_exact(const Integer& a, const Integer& b, const Integer& c,
                            const Integer& d) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0 || sgn(d) <= 0) {
    throw ArithmeticError(Failure::Domain, "positive_case_exact: operands must be positive");
  }
  require_coprime(a, b, "positive_case_exact");
  require_coprime(c, d, "positive_case_exact");
  const Integer u = a * c + b * d;
  const Integer v = a * d - b * c;
  if (sgn(v) == 0) throw ArithmeticError(Failure::Domain, "positive_case_exact: v = ad - bc = 0");

  const auto [ia_b, ib_a] = pair_inverses(a, b, UnitConvention::Extended);
  const auto [ic_d, id_c] = pair_inverses(c, d, UnitConvention::Extended);
  const Integer x1 = a * id_c + b * (d - ic_d);
  const Integer y1 = c * (a - ib_a) + d * ia_b;
  if (!matches(mod_inverse(x1, u), y1)) {
    throw std::logic_error("positive_case_exact: y1 is not the exact inverse of x1 modulo u");
  }
  return y1;
}

QuadPairReport sum_of_squares_inverses(const Integer& a, const Integer& b, const Integer& c,
                                       const Integer& d, UnitConvention convention) {
  QuadPairReport r = quad_pair_inverses(a, b, c, d, convention);
  require_coprime(r.u, r.v, "sum_of_squares_inverses");

  const Integer inv_v_u = inverse_or_throw(r.v, r.u, convention);
  const Integer inv_u_v = inverse_or_throw(r.u, r.v, convention);
  r.inv_s_mod_u = floor_mod(r.y[0] * inv_v_u, r.u);
  r.inv_t_mod_u = floor_mod(r.x[0] * inv_v_u, r.u);
  r.inv_s_mod_v = floor_mod(r.y[3] * inv_u_v, r.v);
  r.inv_t_mod_v = floor_mod(r.x[3] * inv_u_v, r.v);

  r.pass_sum_of_squares = {matches(mod_inverse(r.s, r.u, convention), r.inv_s_mod_u),
                           matches(mod_inverse(r.t, r.u, convention), r.inv_t_mod_u),
                           matches(mod_inverse(r.s, r.v, convention), r.inv_s_mod_v),
                           matches(mod_inverse(r.t, r.v, convention), r.inv_t_mod_v)};
  return r;
}

}  // namespace modrecip
