#include "modrecip/identities.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace modrecip;

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

Failure reason_of(auto&& fn) {
  try {
    fn();
  } catch (const ArithmeticError& e) {
    return e.reason();
  }
  ADD_FAILURE() << "expected ArithmeticError";
  return Failure::Domain;
}

}  // namespace

TEST(ShiftInvariance, Examples) {
  EXPECT_EQ(shift_invariance(3, 5, 4), 2);
  EXPECT_EQ(*oracle::inverse(17, 3), 2);
  EXPECT_EQ(shift_invariance(1, -2, 3), 1);
  EXPECT_EQ(*oracle::inverse(1, 1), 1);
  for (long b : {-6L, -2L, 3L, 10L}) EXPECT_EQ(shift_invariance(7, b, 0), mod_inverse(b, 7).value());
}

TEST(ShiftInvariance, UnitBranchAgainstOracle) {
  for (std::int64_t a : {1, -1}) {
    for (std::int64_t b = -15; b <= 15; ++b) {
      for (std::int64_t k = -5; k <= 5; ++k) {
        if (b == 0 || k * a + b == 0) continue;
        EXPECT_EQ(shift_invariance(big(a), big(b), big(k)), *oracle::inverse(k * a + b, a))
            << a << ' ' << b << ' ' << k;
      }
    }
  }
}

TEST(ShiftInvariance, Preconditions) {
  EXPECT_EQ(reason_of([] { shift_invariance(4, 6, 1); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { shift_invariance(0, 1, 1); }), Failure::ZeroOperand);
  EXPECT_EQ(reason_of([] { shift_invariance(3, -6, 2); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { shift_invariance(3, 3, -1); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { shift_invariance(2, -6, 3); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { shift_invariance(1, -3, 3); }), Failure::ZeroOperand);
}

TEST(ReduceInverse, PlusExamples) {
  EXPECT_EQ(reduce_inverse_plus(7, 1, 3), 19);
  EXPECT_EQ(reduce_inverse_plus(3, 2, 1), 2);
  EXPECT_EQ(reduce_inverse_plus(5, 3, 0), mod_inverse(5, 3).value());
}

TEST(ReduceInverse, MinusExamples) {
  EXPECT_EQ(reduce_inverse_minus(3, 2, 2), 3);
  EXPECT_EQ(reduce_inverse_minus(7, 1, 3), 3);
  EXPECT_EQ(reduce_inverse_minus(5, 2, 1), 2);
  EXPECT_EQ(*oracle::inverse(3, 4), 3);
  EXPECT_EQ(*oracle::inverse(7, 20), 3);
  EXPECT_EQ(*oracle::inverse(5, 3), 2);
}

TEST(ReduceInverse, ClassicalUnitValueReproducesContradiction) {
  EXPECT_EQ(reduce_inverse_plus(7, 1, 3, UnitConvention::Classical), 18);
  EXPECT_EQ(mod_inverse(7, 22).value(), 19);
}

TEST(ReduceInverse, UnitAIsADomainError) {
  EXPECT_EQ(reason_of([] { reduce_inverse_plus(1, 5, 2); }), Failure::Domain);
  EXPECT_EQ(reason_of([] { reduce_inverse_minus(-1, 5, 2); }), Failure::Domain);
  EXPECT_EQ(reason_of([] { reduce_inverse_plus(4, 6, 1); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { reduce_inverse_plus(3, -6, 2); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { reduce_inverse_plus(3, 3, -1); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { reduce_inverse_plus(3, 0, 1); }), Failure::ZeroOperand);
}

TEST(ReduceInverse, MatchesOracleOnSmallGrid) {
  for (std::int64_t a = -15; a <= 15; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (std::int64_t b = -15; b <= 15; ++b) {
      if (b == 0 || std::gcd(a, b) != 1) continue;
      for (std::int64_t k = -6; k <= 6; ++k) {
        if (k * a + b != 0) {
          EXPECT_EQ(reduce_inverse_plus(big(a), big(b), big(k)), *oracle::inverse(a, k * a + b));
        }
        if (k * a - b != 0) {
          EXPECT_EQ(reduce_inverse_minus(big(a), big(b), big(k)), *oracle::inverse(a, k * a - b));
        }
      }
    }
  }
}

TEST(SquareInverse, Examples) {
  const SquareInverse f = square_inverse_forms(3, 2);
  EXPECT_EQ(f.form_square, 7);
  EXPECT_EQ(f.form_cubic, 7);
  EXPECT_TRUE(f.forms_agree);
  EXPECT_EQ(*oracle::inverse(4, 9), 7);

  EXPECT_EQ(square_inverse(2, 3), 1);
  EXPECT_EQ(*oracle::inverse(9, 4), 1);
  for (long a : {2L, 5L, -7L, 12L}) EXPECT_EQ(square_inverse(a, 1), 1);
}

TEST(SquareInverse, MatchesOracle) {
  for (std::int64_t a = -12; a <= 12; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (std::int64_t b = -12; b <= 12; ++b) {
      if (b == 0 || std::gcd(a, b) != 1) continue;
      EXPECT_EQ(square_inverse(big(a), big(b)), *oracle::inverse(b * b, a * a)) << a << ' ' << b;
    }
  }
}

TEST(SquareInverse, Preconditions) {
  EXPECT_EQ(reason_of([] { square_inverse(1, 3); }), Failure::Domain);
  EXPECT_EQ(reason_of([] { square_inverse(4, 6); }), Failure::NotCoprime);
}

TEST(QuadPair, ExampleThreeTwoOneTwo) {
  const QuadPairReport r = quad_pair_inverses(3, 2, 1, 2);
  EXPECT_EQ(r.u, 7);
  EXPECT_EQ(r.v, 4);
  EXPECT_EQ(r.s, 13);
  EXPECT_EQ(r.t, 5);
  EXPECT_EQ(r.x, (std::array<Integer, 4>{5, 2, 1, 3}));
  EXPECT_EQ(r.y, (std::array<Integer, 4>{3, 4, -3, -1}));
  EXPECT_EQ(r.z, (std::array<Integer, 3>{5, 3, 2}));
  EXPECT_TRUE(r.all_inverse_pairs_pass());
  EXPECT_TRUE(r.all_exact_identities_pass());
  EXPECT_EQ(floor_mod(r.x[0] * r.y[0], r.u), 1);
  EXPECT_EQ(floor_mod(r.x[2] * r.y[2], r.v), 1);
}

TEST(QuadPair, ExampleTwoOneOneThree) {
  const QuadPairReport r = quad_pair_inverses(2, 1, 1, 3);
  EXPECT_EQ(r.u, 5);
  EXPECT_EQ(r.v, 5);
  EXPECT_EQ(r.x[0], 4);
  EXPECT_EQ(r.y[0], 4);
  EXPECT_TRUE(r.all_inverse_pairs_pass());
}

// Recomputes every quad quantity from oracle inverses and compares fields.
TEST(QuadPair, FieldsMatchDefinitionsFromOracleInverses) {
  int checked = 0;
  for (std::int64_t a = -5; a <= 5; ++a)
    for (std::int64_t b = -5; b <= 5; ++b)
      for (std::int64_t c = -5; c <= 5; ++c)
        for (std::int64_t d = -5; d <= 5; ++d) {
          if (!a || !b || !c || !d || std::gcd(a, b) != 1 || std::gcd(c, d) != 1) continue;
          const std::int64_t u = a * c + b * d, v = a * d - b * c;
          if (std::abs(u) <= 1 || std::abs(v) <= 1) continue;
          auto inv = [](std::int64_t x, std::int64_t m) { return *oracle::inverse(x, m); };
          const std::int64_t x1 = a * inv(d, c) + b * (d - inv(c, d));
          const std::int64_t x4 = a * inv(c, d) - b * (c - inv(d, c));
          const std::int64_t y1 = c * (a - inv(b, a)) + d * inv(a, b);
          const std::int64_t y3 = c * (b - inv(a, b)) - d * inv(b, a);
          const std::int64_t z2 = c * inv(d, c) + d * (d - inv(c, d));

          const QuadPairReport r = quad_pair_inverses(big(a), big(b), big(c), big(d));
          ASSERT_EQ(r.x[0], x1);
          ASSERT_EQ(r.x[3], x4);
          ASSERT_EQ(r.y[0], y1);
          ASSERT_EQ(r.y[2], y3);
          ASSERT_EQ(r.z[1], z2);
          ASSERT_EQ(oracle::inverse(x1, u), oracle::floor_mod(y1, u));
          ASSERT_TRUE(r.all_inverse_pairs_pass());
          ASSERT_TRUE(r.all_exact_identities_pass());
          ++checked;
        }
  EXPECT_GT(checked, 1000);
}

TEST(QuadPair, Preconditions) {
  EXPECT_EQ(reason_of([] { quad_pair_inverses(2, 4, 1, 2); }), Failure::NotCoprime);
  EXPECT_EQ(reason_of([] { quad_pair_inverses(1, 1, 1, 1); }), Failure::Domain);
  EXPECT_EQ(reason_of([] { quad_pair_inverses(0, 1, 1, 2); }), Failure::ZeroOperand);
}

TEST(PositiveCase, Examples) {
  EXPECT_EQ(positive_case_exact(3, 2, 1, 2), 3);
  EXPECT_EQ(*oracle::inverse(5, 7), 3);
  EXPECT_EQ(positive_case_exact(2, 1, 1, 3), 4);
  EXPECT_EQ(*oracle::inverse(4, 5), 4);
  EXPECT_EQ(reason_of([] { positive_case_exact(1, 1, 1, 1); }), Failure::Domain);
  EXPECT_EQ(reason_of([] { positive_case_exact(-3, 2, 1, 2); }), Failure::Domain);
}

TEST(SumOfSquares, ExampleThreeTwoOneTwo) {
  const QuadPairReport r = sum_of_squares_inverses(3, 2, 1, 2);
  EXPECT_EQ(r.inv_s_mod_u, 6);
  EXPECT_EQ(r.inv_t_mod_u, 3);
  EXPECT_EQ(r.inv_t_mod_v, 1);
  EXPECT_EQ(r.inv_s_mod_v, *oracle::inverse(13, 4));
  EXPECT_EQ(*oracle::inverse(13, 7), 6);
  EXPECT_EQ(*oracle::inverse(5, 7), 3);
  EXPECT_EQ(*oracle::inverse(5, 4), 1);
  EXPECT_TRUE(r.all_sum_of_squares_pass());
  EXPECT_TRUE(r.all_exact_identities_pass());
}

TEST(SumOfSquares, RequiresCoprimeUV) {
  // a=3,b=1,c=1,d=3: u=6, v=8.
  EXPECT_EQ(reason_of([] { sum_of_squares_inverses(3, 1, 1, 3); }), Failure::NotCoprime);
}
