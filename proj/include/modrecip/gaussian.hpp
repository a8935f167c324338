#pragma once

#include "modrecip/core.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace modrecip {

/// Element re + im*i of Z[i].
struct GaussianInteger {
  Integer re = 0;
  Integer im = 0;

  GaussianInteger() = default;
  GaussianInteger(Integer real) : re(std::move(real)) {}
  GaussianInteger(Integer real, Integer imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};

GaussianInteger operator+(const GaussianInteger& x, const GaussianInteger& y);
GaussianInteger operator-(const GaussianInteger& x, const GaussianInteger& y);
GaussianInteger operator-(const GaussianInteger& x);
GaussianInteger operator*(const GaussianInteger& x, const GaussianInteger& y);

/// re^2 + im^2.
Integer gaussian_norm(const GaussianInteger& z);

GaussianInteger gaussian_conj(const GaussianInteger& z);

struct GaussianDivMod {
  GaussianInteger quotient;
  GaussianInteger remainder;  // numerator = divisor*quotient + remainder
};

/// Euclidean division in Z[i]. The quotient rounds each component of
/// n*conj(d)/norm(d) to the nearest integer, ties toward -infinity, so
/// norm(remainder) <= norm(d)/2. Throws ArithmeticError(ZeroOperand) for d = 0.
GaussianDivMod gaussian_divmod(const GaussianInteger& n, const GaussianInteger& d);

/// True when d divides n exactly in Z[i]. d must be nonzero.
bool gaussian_divides(const GaussianInteger& d, const GaussianInteger& n);

struct GaussianInverse {
  GaussianInteger representative;  // conj(z) * (s^-1)_t
  GaussianInteger canonical;       // remainder of representative modulo w
};

/// Inverse of z = a+bi modulo w = c+di built from the norms s = N(z),
/// t = N(w): conj(z)*(s^-1)_t. Requires a, b, c, d all nonzero, s > 1, t > 1
/// (ArithmeticError Domain) and gcd(s, t) = 1 (NotCoprime).
GaussianInverse gaussian_inverse(const GaussianInteger& z, const GaussianInteger& w);

/// Evaluates z*u + w*v = 1 + z*w*conj(z)*conj(w) with u = conj(z)*(s^-1)_t and
/// v = conj(w)*(t^-1)_s. Same preconditions as gaussian_inverse.
bool gaussian_bezout_identity(const Integer& a, const Integer& b, const Integer& c,
                              const Integer& d);

/// (a^-1)_b + i*(a - (b^-1)_a), an inverse of a modulo a*i + b.
/// Requires gcd(a, b) = 1, |a| > 1 and b != 0.
GaussianInteger inverse_mod_gaussian_linear(const Integer& a, const Integer& b,
                                            UnitConvention convention = UnitConvention::Extended);

/// Accepts `a+bi`, `a-bi`, `a`, `bi`, `-i`, `i` with optional spaces and
/// 0x-hex components.
std::optional<GaussianInteger> parse_gaussian(std::string_view text);

/// Prints `re`, `re+imi`, `re-imi`, or `imi` (im written out even for +-1, so
/// `2+1i`). parse_gaussian(to_string(z)) == z.
std::string to_string(const GaussianInteger& z);

}  // namespace modrecip
