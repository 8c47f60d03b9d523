// The reproduction manifest: one stable claim id per checked result.

#pragma once

#include <set>
#include <string>
#include <vector>

namespace tworoot::cli {

struct ClaimInfo {
  std::string id;
  std::string anchor;
};

/// Every claim, in manifest order.
const std::vector<ClaimInfo>& manifest_claims();

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string to_string(ClaimStatus s);

struct ClaimResult {
  ClaimInfo info;
  ClaimStatus status = ClaimStatus::kSkipped;
  double elapsed_seconds = 0;
  std::vector<std::string> details;
};

struct ManifestOptions {
  int jobs = 1;
  /// Run only these ids (all when empty); the rest are reported as skipped.
  std::set<std::string> only;
};

/// Throws std::invalid_argument for an unknown id in options.only.
std::vector<ClaimResult> run_manifest(const ManifestOptions& options);

}  // namespace tworoot::cli
