#include "modrecip/bench.hpp"

#include "modrecip/core.hpp"
#include "modrecip/reciprocity.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace modrecip {
namespace {

std::int64_t median(std::vector<std::int64_t> samples) {
  const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
  std::nth_element(samples.begin(), mid, samples.end());
  return *mid;
}

template <class Fn>
std::int64_t time_ns(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

}  // namespace

Integer random_signed(int bits, std::mt19937_64& rng) {
  const std::size_t words = (static_cast<std::size_t>(bits) + 63) / 64;
  std::vector<std::uint64_t> limbs(words);
  for (auto& w : limbs) w = rng();
  const int spare = static_cast<int>(words * 64) - bits;
  if (spare > 0) limbs.back() >>= spare;
  limbs.back() |= std::uint64_t{1} << (63 - spare);  // pin the top bit

  Integer x;
  mpz_import(x.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
  if (rng() & 1) x = -x;
  return x;
}

std::pair<Integer, Integer> random_coprime_pair(int bits, std::mt19937_64& rng) {
  Integer a = random_signed(bits, rng);
  Integer m = random_signed(bits, rng);
  while (gcd(a, m) != 1) m = random_signed(bits, rng);
  return {std::move(a), std::move(m)};
}

BenchReport run_inversion_bench(const BenchOptions& options) {
  if (options.bit_width < 64 || options.bit_width > 4096) {
    throw std::invalid_argument("bench: bit width must be in [64, 4096]");
  }
  if (options.iterations < 1) throw std::invalid_argument("bench: iterations must be at least 1");

  BenchReport report;
  report.bit_width = options.bit_width;
  report.iterations = options.iterations;
  report.seed = options.seed;

  std::mt19937_64 rng(options.seed);
  std::vector<std::int64_t> recip_ns, egcd_ns;
  recip_ns.reserve(options.iterations);
  egcd_ns.reserve(options.iterations);

  for (std::uint64_t trial = 0; trial < options.iterations; ++trial) {
    const auto [a, m] = random_coprime_pair(options.bit_width, rng);
    std::optional<InverseOutcome> via_recip, via_egcd;
    recip_ns.push_back(time_ns([&] { via_recip = inverse_via_reciprocity(a, m); }));
    egcd_ns.push_back(time_ns([&] { via_egcd = mod_inverse(a, m); }));
    if (via_recip->ok() && *via_recip == *via_egcd) {
      ++report.agreement_count;
    } else if (!report.first_disagreement) {
      report.first_disagreement = "a=" + to_string(a) + " m=" + to_string(m);
    }
  }
  report.median_ns_reciprocity = median(std::move(recip_ns));
  report.median_ns_ext_gcd = median(std::move(egcd_ns));
  return report;
}

}  // namespace modrecip
