#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewner_lab/tolerance.hpp"

namespace loewner_lab::cli {

struct SelfcheckOptions {
  bool full = false;
  std::uint64_t seed = 0;
  ToleranceModel tol;
};

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

/// matcore, loewner, ffn, furuta, sampling and theorems suites. Output is a
/// pure function of the options.
std::vector<SuiteResult> run_selfcheck(const SelfcheckOptions& options);

}  // namespace loewner_lab::cli
