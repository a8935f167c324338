#include "modrecip/gaussian.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace modrecip;

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

GaussianInteger G(long re, long im) { return {Integer(re), Integer(im)}; }

}  // namespace

TEST(Gaussian, NormAndConjugate) {
  EXPECT_EQ(gaussian_norm(G(1, 1)), 2);
  EXPECT_EQ(gaussian_norm(G(2, 1)), 5);
  EXPECT_EQ(gaussian_norm(G(0, 0)), 0);
  EXPECT_EQ(gaussian_conj(G(1, 2)), G(1, -2));
  EXPECT_EQ(gaussian_conj(G(3, 0)), G(3, 0));
  EXPECT_EQ(gaussian_conj(G(0, -1)), G(0, 1));
}

TEST(Gaussian, DivModExamples) {
  const GaussianDivMod exact = gaussian_divmod(G(5, 0), G(2, 1));
  EXPECT_EQ(exact.quotient, G(2, -1));
  EXPECT_EQ(exact.remainder, G(0, 0));

  const GaussianDivMod r = gaussian_divmod(G(3, -3), G(2, 1));
  EXPECT_EQ(r.quotient, G(1, -2));
  EXPECT_EQ(r.remainder, G(-1, 0));

  // 0.5 + 0.5i rounds both halves down.
  const GaussianDivMod tie = gaussian_divmod(G(1, 1), G(2, 0));
  EXPECT_EQ(tie.quotient, G(0, 0));
  EXPECT_EQ(tie.remainder, G(1, 1));
  EXPECT_EQ(2 * gaussian_norm(tie.remainder), gaussian_norm(G(2, 0)));

  // -0.5 rounds to -1.
  const GaussianDivMod neg_tie = gaussian_divmod(G(-1, 0), G(2, 0));
  EXPECT_EQ(neg_tie.quotient, G(-1, 0));
  EXPECT_EQ(neg_tie.remainder, G(1, 0));

  EXPECT_THROW(gaussian_divmod(G(1, 1), G(0, 0)), ArithmeticError);
}

TEST(Gaussian, DivModLawOnRandomWideOperands) {
  std::mt19937_64 rng(7);
  auto rand_big = [&]() -> Integer {
    Integer x;
    mpz_set_si(x.get_mpz_t(), static_cast<long>(rng()));
    return x * static_cast<long>(rng() % 1000003) - static_cast<long>(rng() % 17);
  };
  for (int i = 0; i < 2000; ++i) {
    const GaussianInteger n{rand_big(), rand_big()};
    GaussianInteger d{rand_big(), rand_big()};
    if (d.is_zero()) continue;
    const GaussianDivMod qr = gaussian_divmod(n, d);
    EXPECT_EQ(d * qr.quotient + qr.remainder, n);
    EXPECT_LE(2 * gaussian_norm(qr.remainder), gaussian_norm(d));
  }
}

TEST(Gaussian, Divides) {
  EXPECT_TRUE(gaussian_divides(G(2, 1), G(5, 0)));
  EXPECT_TRUE(gaussian_divides(G(1, 1), G(2, 0)));
  EXPECT_FALSE(gaussian_divides(G(2, 1), G(1, 0)));
  EXPECT_THROW(gaussian_divides(G(0, 0), G(1, 0)), ArithmeticError);
}

TEST(GaussianInverse, Examples) {
  const GaussianInverse a = gaussian_inverse(G(1, 1), G(2, 1));
  EXPECT_EQ(a.representative, G(3, -3));
  EXPECT_EQ(a.canonical, G(-1, 0));
  // (1+i)(-1) - 1 = -(2+i)
  EXPECT_EQ(G(1, 1) * a.canonical - G(1, 0), -G(2, 1));

  const GaussianInverse b = gaussian_inverse(G(2, 1), G(1, 1));
  EXPECT_EQ(b.representative, G(2, -1));
  EXPECT_EQ(G(2, 1) * b.representative - G(1, 0), G(1, 1) * G(2, -2));

  try {
    gaussian_inverse(G(1, 2), G(3, 4));
    FAIL();
  } catch (const ArithmeticError& e) {
    EXPECT_EQ(e.reason(), Failure::NotCoprime);
  }
}

TEST(GaussianInverse, HypothesesAreEnforced) {
  for (const auto& [z, w] : {std::pair{G(0, 1), G(2, 1)}, std::pair{G(2, 0), G(1, 2)},
                             std::pair{G(1, 1), G(3, 0)}, std::pair{G(2, 1), G(0, 3)}}) {
    try {
      gaussian_inverse(z, w);
      FAIL() << to_string(z) << ' ' << to_string(w);
    } catch (const ArithmeticError& e) {
      EXPECT_EQ(e.reason(), Failure::Domain);
    }
  }
}

// The canonical residue equals the residue of an inverse found by
// exhaustive search, which only depends on the residue class.
TEST(GaussianInverse, CanonicalMatchesSearchOracle) {
  int checked = 0;
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      for (std::int64_t c = -4; c <= 4; ++c)
        for (std::int64_t d = -4; d <= 4; ++d) {
          if (!a || !b || !c || !d) continue;
          if (std::gcd(a * a + b * b, c * c + d * d) != 1) continue;
          const auto found = oracle::gaussian_inverse({a, b}, {c, d});
          ASSERT_TRUE(found.has_value());
          const GaussianInteger w{big(c), big(d)};
          const GaussianInverse inv = gaussian_inverse({big(a), big(b)}, w);
          const GaussianInteger from_search{big(found->re), big(found->im)};
          EXPECT_EQ(gaussian_divmod(from_search, w).remainder, inv.canonical);
          ++checked;
        }
  EXPECT_GT(checked, 100);
}

TEST(GaussianBezout, Examples) {
  EXPECT_TRUE(gaussian_bezout_identity(1, 1, 2, 1));
  EXPECT_TRUE(gaussian_bezout_identity(1, 1, 1, 2));
  EXPECT_THROW(gaussian_bezout_identity(1, 2, 3, 4), ArithmeticError);
}

TEST(GaussianLinear, Examples) {
  EXPECT_EQ(inverse_mod_gaussian_linear(3, 2), G(1, 1));
  EXPECT_EQ(G(3, 0) * G(1, 1) - G(1, 0), G(2, 3));

  EXPECT_EQ(inverse_mod_gaussian_linear(7, 1), G(1, 6));
  EXPECT_EQ(G(7, 0) * G(1, 6) - G(1, 0), G(1, 7) * G(6, 0));

  EXPECT_EQ(inverse_mod_gaussian_linear(5, 2), G(1, 2));
  EXPECT_EQ(G(5, 0) * G(1, 2) - G(1, 0), G(2, 5) * G(2, 0));

  EXPECT_THROW(inverse_mod_gaussian_linear(1, 2), ArithmeticError);
  EXPECT_THROW(inverse_mod_gaussian_linear(4, 6), ArithmeticError);
}

TEST(GaussianLinear, DividesOnGrid) {
  for (std::int64_t a = -20; a <= 20; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (std::int64_t b = -20; b <= 20; ++b) {
      if (b == 0 || std::gcd(a, b) != 1) continue;
      const GaussianInteger x = inverse_mod_gaussian_linear(big(a), big(b));
      const oracle::Gauss xo{x.re.get_si(), x.im.get_si()};
      EXPECT_TRUE(oracle::divides({b, a}, oracle::sub(oracle::mul({a, 0}, xo), {1, 0}))) << a << ' ' << b;
    }
  }
}

TEST(GaussianText, ParseForms) {
  EXPECT_EQ(parse_gaussian("3-3i"), G(3, -3));
  EXPECT_EQ(parse_gaussian("-1"), G(-1, 0));
  EXPECT_EQ(parse_gaussian("2i"), G(0, 2));
  EXPECT_EQ(parse_gaussian("-i"), G(0, -1));
  EXPECT_EQ(parse_gaussian("i"), G(0, 1));
  EXPECT_EQ(parse_gaussian("1+i"), G(1, 1));
  EXPECT_EQ(parse_gaussian(" 2 + 1i "), G(2, 1));
  EXPECT_EQ(parse_gaussian("-0x10-0x2i"), G(-16, -2));
  EXPECT_EQ(parse_gaussian(""), std::nullopt);
  EXPECT_EQ(parse_gaussian("1+-2i"), std::nullopt);
  EXPECT_EQ(parse_gaussian("1+2j"), std::nullopt);
  EXPECT_EQ(parse_gaussian("ii"), std::nullopt);
}

TEST(GaussianText, PrintForms) {
  EXPECT_EQ(to_string(G(3, -3)), "3-3i");
  EXPECT_EQ(to_string(G(-1, 0)), "-1");
  EXPECT_EQ(to_string(G(2, 1)), "2+1i");
  EXPECT_EQ(to_string(G(0, 2)), "2i");
  EXPECT_EQ(to_string(G(0, -1)), "-1i");
  EXPECT_EQ(to_string(G(0, 0)), "0");
}

TEST(GaussianText, RoundTripProperty) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    GaussianInteger z{Integer(static_cast<long>(rng() % 2001) - 1000), Integer(static_cast<long>(rng() % 2001) - 1000)};
    if (i % 7 == 0) z.re = 0;
    if (i % 11 == 0) z.im = 0;
    if (i % 13 == 0) z.re = z.re * (Integer(1) << 200);
    EXPECT_EQ(parse_gaussian(to_string(z)), z) << to_string(z);
  }
}
