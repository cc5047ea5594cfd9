#pragma once

#include "hmorita/morita.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hmorita {

/// Outcome of one randomized invariant across all trials of a run.
struct InvariantTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  /// "trial T (seed S): message" for the first failure, empty otherwise.
  std::string first_failure;
};

struct FuzzReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<InvariantTally> invariants;
  /// Trials whose setup could not be completed (e.g. zero divisors in a split
  /// quaternion algebra) and were skipped.
  std::vector<std::string> notes;

  bool ok() const;
};

/// Names of the invariants checked by run_fuzz, in report order.
const std::vector<std::string>& fuzz_invariant_names();

/// Randomized invariant suite of the forms and morita modules. Each trial draws
/// its algebra (Q; Q(sqrt d), d in {-1, 2, 5}; (a,b)_Q for (-1,-1), (-1,-3),
/// (2,5)), n, k in {1, 2, 3}, epsilon0 and epsilon from its own stream, so the
/// report is a pure function of (seed, trials, mode).
FuzzReport run_fuzz(std::uint64_t seed, std::size_t trials, ProbeMode mode = ProbeMode::Default);

std::string serialize_fuzz_report(const FuzzReport& report);

}  // namespace hmorita
