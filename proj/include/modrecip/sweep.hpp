#pragma once

/// Exhaustive verification sweeps over bounded operand grids.
///
/// Each suite enumerates a fixed index space, so a serial run and an OpenMP
/// run visit identical cases and report identical results, including the
/// counterexample (always the lowest failing index).

#include "modrecip/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace modrecip::sweep {

enum class Execution { Serial, Parallel };

struct SweepConfig {
  std::int64_t bound = 64;            // reciprocity grid |a|, |b|; floor division grid
  std::int64_t oracle_bound = 200;    // inverse oracle grid |a|, |m|
  std::int64_t shift_bound = 40;      // shift invariance and reduction grids
  std::int64_t k_bound = 10;          // |k| for shift invariance and reduction
  std::int64_t square_bound = 30;     // squared-modulus grid
  std::int64_t quad_bound = 12;       // quad-pair and sum-of-squares grids
  std::int64_t gaussian_bound = 8;    // Gaussian inversion and divmod grids
  std::int64_t linear_bound = 30;     // inverse modulo a*i + b grid
  std::int64_t unit_table_bound = 100;
  int shard_count = 1;                // OpenMP threads for Execution::Parallel
  UnitConvention convention = UnitConvention::Extended;

  /// Caps every grid bound at `cap` (the reciprocity bound is set to it).
  void apply_global_bound(std::int64_t cap);

  /// Throws std::invalid_argument when a bound is below 2 or shard_count < 1.
  void validate() const;
};

/// Applies `key = value` lines (keys are the field names above; `#` starts a
/// comment). Throws std::invalid_argument on unknown keys or bad values.
void apply_config_text(SweepConfig& config, std::string_view text);

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;       // checked cases (precondition failures are skipped)
  std::uint64_t violations = 0;
  std::uint64_t unit_cases = 0;  // cases that take some inverse modulo +-1
  std::uint64_t unit_violations = 0;
  std::optional<std::string> counterexample;  // lowest-index failure
  std::int64_t counterexample_index = -1;

  bool passed() const { return violations == 0; }
  /// Every violation involves a unit modulus.
  bool violations_confined_to_unit() const { return violations == unit_violations; }

  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

/// Outcome of a single case, produced by a suite's case function.
struct CaseOutcome {
  enum class Status { Skipped, Passed, Failed };
  Status status = Status::Skipped;
  bool unit_modulus = false;
  std::string counterexample;

  static CaseOutcome skipped() { return {}; }
  static CaseOutcome passed(bool unit) { return {Status::Passed, unit, {}}; }
  static CaseOutcome failed(bool unit, std::string what) {
    return {Status::Failed, unit, std::move(what)};
  }
};

SuiteResult floor_division_suite(const SweepConfig& config, Execution exec);
SuiteResult inverse_oracle_suite(const SweepConfig& config, Execution exec);
SuiteResult unit_modulus_suite(const SweepConfig& config, Execution exec);
SuiteResult reciprocity_suite(const SweepConfig& config, Execution exec);
SuiteResult shift_invariance_suite(const SweepConfig& config, Execution exec);
SuiteResult reduction_suite(const SweepConfig& config, Execution exec);
SuiteResult classical_contradiction_suite(const SweepConfig& config, Execution exec);
SuiteResult square_inverse_suite(const SweepConfig& config, Execution exec);
SuiteResult quad_pair_suite(const SweepConfig& config, Execution exec);
SuiteResult positive_case_suite(const SweepConfig& config, Execution exec);
SuiteResult sum_of_squares_suite(const SweepConfig& config, Execution exec);
SuiteResult gaussian_divmod_suite(const SweepConfig& config, Execution exec);
SuiteResult gaussian_inverse_suite(const SweepConfig& config, Execution exec);
SuiteResult gaussian_linear_suite(const SweepConfig& config, Execution exec);

/// Every suite above, in declaration order.
std::vector<SuiteResult> run_all(const SweepConfig& config, Execution exec);

}  // namespace modrecip::sweep
