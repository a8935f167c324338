#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library under test; everything is plain int64 enumeration.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

namespace oracle {

inline std::int64_t sgn(std::int64_t x) { return (x > 0) - (x < 0); }

// a - m*floor(a/m) by stepping, for small operands.
inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  if (r != 0 && ((r < 0) != (m < 0))) r += m;
  return r;
}

// The signed-window inverse by enumeration, with the unit-modulus closed form
// written out as its four cases.
inline std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t m) {
  if (a == 0 || m == 0) return std::nullopt;
  if (m == 1) return a > 0 ? 1 : 0;
  if (m == -1) return a > 0 ? 0 : -1;
  const std::int64_t lo = m > 0 ? 1 : m + 1;
  const std::int64_t hi = m > 0 ? m - 1 : -1;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if ((a * x - 1) % m == 0) return x;
  }
  return std::nullopt;
}

struct Gauss {
  std::int64_t re = 0, im = 0;
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

inline Gauss mul(Gauss x, Gauss y) { return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re}; }
inline Gauss sub(Gauss x, Gauss y) { return {x.re - y.re, x.im - y.im}; }
inline std::int64_t norm(Gauss z) { return z.re * z.re + z.im * z.im; }

// d | n in Z[i]: n*conj(d) is divisible by norm(d) componentwise.
inline bool divides(Gauss d, Gauss n) {
  const Gauss p = mul(n, {d.re, -d.im});
  const std::int64_t nd = norm(d);
  return p.re % nd == 0 && p.im % nd == 0;
}

// Some x with z*x = 1 (mod w), searched over a box that always contains a
// full residue system of w.
inline std::optional<Gauss> gaussian_inverse(Gauss z, Gauss w) {
  const std::int64_t r = norm(w);
  for (std::int64_t re = -r; re <= r; ++re) {
    for (std::int64_t im = -r; im <= r; ++im) {
      if (divides(w, sub(mul(z, {re, im}), {1, 0}))) return Gauss{re, im};
    }
  }
  return std::nullopt;
}

}  // namespace oracle
