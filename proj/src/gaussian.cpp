#include "modrecip/gaussian.hpp"

#include <algorithm>

namespace modrecip {

GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y) {
  return {x.re + y.re, x.im + y.im};
}

GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y) {
  return {x.re - y.re, x.im - y.im};
}

GaussianInteger operator-(const GaussianInteger& x) { return {-x.re, -x.im}; }

GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Integer gaussian_norm(const GaussianInteger& z) { return z.re * z.re + z.im * z.im; }

GaussianInteger gaussian_conj(const GaussianInteger& z) { return {z.re, -z.im}; }

namespace {

// Nearest integer to x/n for n > 0, ties toward -infinity: ceil((2x - n) / 2n).
Integer round_half_down(const Integer& x, const Integer& n) {
  Integer q;
  const Integer num = 2 * x - n;
  const Integer den = 2 * n;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

GaussianDivMod gaussian_divmod(const GaussianInteger& n, const GaussianInteger& d) {
  if (d.is_zero()) throw ArithmeticError(Failure::ZeroOperand, "gaussian_divmod: zero divisor");
  const Integer norm = gaussian_norm(d);
  const GaussianInteger scaled = n * gaussian_conj(d);
  GaussianDivMod out;
  out.quotient = {round_half_down(scaled.re, norm), round_half_down(scaled.im, norm)};
  out.remainder = n - d * out.quotient;
  return out;
}

bool gaussian_divides(const GaussianInteger& d, const GaussianInteger& n) {
  if (d.is_zero()) throw ArithmeticError(Failure::ZeroOperand, "gaussian_divides: zero divisor");
  const Integer norm = gaussian_norm(d);
  const GaussianInteger scaled = n * gaussian_conj(d);
  return mpz_divisible_p(scaled.re.get_mpz_t(), norm.get_mpz_t()) &&
         mpz_divisible_p(scaled.im.get_mpz_t(), norm.get_mpz_t());
}

namespace {

struct NormPair {
  Integer s;
  Integer t;
};

NormPair checked_norms(const GaussianInteger& z, const GaussianInteger& w) {
  if (sgn(z.re) == 0 || sgn(z.im) == 0 || sgn(w.re) == 0 || sgn(w.im) == 0) {
    throw ArithmeticError(Failure::Domain, "gaussian inverse: all components must be nonzero");
  }
  NormPair norms{gaussian_norm(z), gaussian_norm(w)};
  if (norms.s <= 1 || norms.t <= 1) {
    throw ArithmeticError(Failure::Domain, "gaussian inverse: norms must exceed 1");
  }
  if (gcd(norms.s, norms.t) != 1) {
    throw ArithmeticError(Failure::NotCoprime, "gaussian inverse: norms are not coprime");
  }
  return norms;
}

}  // namespace

GaussianInverse gaussian_inverse(const GaussianInteger& z, const GaussianInteger& w) {
  const NormPair norms = checked_norms(z, w);
  GaussianInverse out;
  out.representative = gaussian_conj(z) * GaussianInteger(mod_inverse(norms.s, norms.t).value());
  out.canonical = gaussian_divmod(out.representative, w).remainder;
  return out;
}

bool gaussian_bezout_identity(const Integer& a, const Integer& b, const Integer& c,
                              const Integer& d) {
  const GaussianInteger z{a, b};
  const GaussianInteger w{c, d};
  const NormPair norms = checked_norms(z, w);
  const GaussianInteger u = gaussian_conj(z) * GaussianInteger(mod_inverse(norms.s, norms.t).value());
  const GaussianInteger v = gaussian_conj(w) * GaussianInteger(mod_inverse(norms.t, norms.s).value());
  const GaussianInteger lhs = z * u + w * v;
  const GaussianInteger rhs = GaussianInteger(1) + z * w * gaussian_conj(z) * gaussian_conj(w);
  return lhs == rhs;
}

GaussianInteger inverse_mod_gaussian_linear(const Integer& a, const Integer& b,
                                            UnitConvention convention) {
  if (abs(a) <= 1) throw ArithmeticError(Failure::Domain, "inverse_mod_gaussian_linear: requires |a| > 1");
  if (sgn(b) == 0 || gcd(a, b) != 1) {
    throw ArithmeticError(Failure::NotCoprime, "inverse_mod_gaussian_linear: operands not coprime");
  }
  const Integer inv_a_b = mod_inverse(a, b, convention).value();
  const Integer inv_b_a = mod_inverse(b, a, convention).value();
  return {inv_a_b, a - inv_b_a};
}

std::optional<GaussianInteger> parse_gaussian(std::string_view text) {
  std::string compact;
  std::copy_if(text.begin(), text.end(), std::back_inserter(compact),
               [](char ch) { return ch != ' ' && ch != '\t'; });
  if (compact.empty()) return std::nullopt;

  if (compact.back() != 'i') {
    auto re = parse_integer(compact);
    if (!re) return std::nullopt;
    return GaussianInteger(*re);
  }

  compact.pop_back();
  const std::size_t split = compact.find_last_of("+-");
  std::string_view real_part;
  std::string_view imag_part = compact;
  if (split != std::string::npos && split > 0) {
    real_part = std::string_view(compact).substr(0, split);
    imag_part = std::string_view(compact).substr(split);
  }

  GaussianInteger z;
  if (!real_part.empty()) {
    auto re = parse_integer(real_part);
    if (!re) return std::nullopt;
    z.re = *re;
  }
  if (imag_part.empty() || imag_part == "+") {
    z.im = 1;
  } else if (imag_part == "-") {
    z.im = -1;
  } else {
    auto im = parse_integer(imag_part);
    if (!im) return std::nullopt;
    z.im = *im;
  }
  return z;
}

std::string to_string(const GaussianInteger& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  std::string out;
  if (sgn(z.re) != 0) {
    out = to_string(z.re);
    if (sgn(z.im) > 0) out += '+';
  }
  out += to_string(z.im);
  out += 'i';
  return out;
}

}  // namespace modrecip
