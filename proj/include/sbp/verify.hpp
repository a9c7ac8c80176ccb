#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sbp {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int workers = 4;  ///< parallel worker count compared against 1 in the determinism check
  bool includeE5 = true;
  bool injectFault = false;  ///< test hook: corrupts the hypercube table to force a failure
};

/// Computational counterparts of every structural result: gold family,
/// sbp(2^2e, 2^e), hypercube split, Z6 non-existence, k = 2, bijections,
/// the property suites, and worker-count determinism. One entry per check.
std::vector<CheckResult> verifyPaperResults(const VerifyOptions& opts = {});

nlohmann::ordered_json toJson(const std::vector<CheckResult>& checks);

}  // namespace sbp
