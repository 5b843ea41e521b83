#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ah {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  /// Length bound for the KL sweeps; preset default when unset.
  std::optional<std::int64_t> kl_len;
  /// Test fixture: sign flip in the length formula.
  bool fault_length = false;
  /// Restrict to the checks of one acceptance criterion (1..11); 0 runs everything.
  int criterion = 0;
  /// Run only the named check.
  std::string only;
};

struct CheckResult {
  std::string name;
  int criterion = 0;  // 0 for module properties
  bool passed = false;
  std::string detail;  // failure reason, or an informational note
  /// Reproducing command line when the check failed.
  std::string counterexample;
  std::int64_t micros = 0;
};

struct SuiteReport {
  std::string preset;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
  /// One line per check; durations only if with_timing.
  std::string tsv(bool with_timing) const;
  std::string json(bool with_timing) const;
};

/// Runs module properties and acceptance checks for a preset. Throws UnknownPreset, BoundsTooLarge.
SuiteReport run_suite(const std::string& preset, const SuiteOptions& options = {});

/// Default KL sweep length for a preset and the largest accepted value.
std::int64_t default_kl_len(const std::string& preset);
std::int64_t max_kl_len(const std::string& preset);

}  // namespace ah
