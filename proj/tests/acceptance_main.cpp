// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one pass/fail line per claim, exit 0 iff all pass.
#include <cstdio>

#include "orbitkit/verify.hpp"

int main() {
  orbitkit::VerifyOptions opts;
  opts.golden_dir = ORBITKIT_GOLDEN_DIR;
  auto results = orbitkit::run_paper_claims(opts);
  bool all = true;
  for (const auto& r : results) {
    std::printf("[%s] %s: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.description.c_str(), r.detail.empty() ? "" : " -- ",
                r.detail.c_str());
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all claims pass" : "ACCEPTANCE: FAILURES");
  return all ? 0 : 1;
}
