#pragma once

#include "modrecip/integer.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>

namespace modrecip {

struct BenchOptions {
  int bit_width = 256;
  std::uint64_t iterations = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Timing comparison of the reciprocity recursion against the
/// extended-gcd inverse on random coprime pairs.
struct BenchReport {
  int bit_width = 0;
  std::uint64_t iterations = 0;
  std::uint64_t seed = 0;
  std::int64_t median_ns_reciprocity = 0;
  std::int64_t median_ns_ext_gcd = 0;
  std::uint64_t agreement_count = 0;
  std::optional<std::string> first_disagreement;

  /// Timings are only meaningful when every trial agreed.
  bool consistent() const { return agreement_count == iterations; }
};

/// Uniform signed integer with exactly `bits` bits of magnitude.
Integer random_signed(int bits, std::mt19937_64& rng);

/// (a, m) with exactly `bits`-bit magnitudes and gcd(a, m) = 1.
std::pair<Integer, Integer> random_coprime_pair(int bits, std::mt19937_64& rng);

/// Throws std::invalid_argument unless 64 <= bit_width <= 4096 and
/// iterations >= 1. Runs single-threaded.
BenchReport run_inversion_bench(const BenchOptions& options);

}  // namespace modrecip
