#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qcorr {

struct CheckResult {
  std::string name;
  bool pass{false};
  std::string detail;
};

/// Runs the full oracle/invariant suite (nine checks) and returns one result
/// per check. scratch_dir is used for determinism round-trips and must be
/// writable. Deterministic given `seed`.
std::vector<CheckResult> run_acceptance_checks(const std::filesystem::path& scratch_dir,
                                               std::uint64_t seed = 1);

}  // namespace qcorr
