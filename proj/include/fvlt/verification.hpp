#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fvlt/identities.hpp"
#include "fvlt/path.hpp"
#include "fvlt/polynomial.hpp"
#include "fvlt/rng.hpp"

namespace fvlt {

struct VerifyOptions {
  double tolerance_scale = 1.0;
  int tanaka_levels = 50;       // sampled simple levels for the indicator identities
  int density_intervals = 20;   // sampled intervals for the occupation-density check
  std::uint64_t sample_seed = 0x5eedf00dULL;
};

struct VerificationReport {
  std::string path_hash;
  std::string tool_version;
  double tolerance_scale = 1.0;
  std::vector<IdentityCheck> checks;
  int passed = 0;
  int failed = 0;
  int excluded = 0;
  bool all_passed() const { return failed == 0; }
};

// Runs the full identity suite on one path: both change-of-variables routes
// over the documented test-function set and ten horizons, the indicator
// identities over sampled simple levels, the occupation-density check over an
// interval grid, the crossing-integral bound, and the profile mass identities.
// Deterministic for fixed options; checks are sorted by name then level.
VerificationReport run_verification(const FvPath& path, const VerifyOptions& options = {});

std::string report_to_json_text(const VerificationReport& report);
std::string report_summary_text(const VerificationReport& report);

// The documented test-function set for the change-of-variables checks:
// x, x^2, x^3, x^4 - 2x^2, and a seeded degree-5 polynomial.
std::vector<std::pair<std::string, Polynomial>> cov_test_functions(SplitMix64& rng);

}  // namespace fvlt
