#pragma once

// Named verification suites shared by the CLI and the acceptance runner.
// Each check carries a canonical id (reports are sorted by it), the identity
// being tested, a residual and its pinned tolerance.

#include <string>
#include <vector>

#include "eisreg/types.hpp"

namespace eisreg {

struct CheckResult {
  std::string id;
  std::string identity;
  std::string params;
  double residual{0};
  double tol{0};
  bool has_sides{false};
  Complex lhs{0, 0}, rhs{0, 0};
  std::string detail;  // optional JSON payload (e.g. the full regulator report)
  bool pass() const { return residual < tol; }
};

struct SuiteConfig {
  double tol_override{-1};  // < 0: use the per-check pinned tolerance
  long long terms{200};
  unsigned long long seed{1};
  int prec{64};
  // optional restrictions for the theorem sweep
  int k1{-1}, k2{-1};
  long long N{-1};
};

std::vector<CheckResult> suite_hurwitz(const SuiteConfig& cfg);
std::vector<CheckResult> suite_constants(const SuiteConfig& cfg);
std::vector<CheckResult> suite_atkin_lehner(const SuiteConfig& cfg);
std::vector<CheckResult> suite_slash(const SuiteConfig& cfg);
std::vector<CheckResult> suite_fourier(const SuiteConfig& cfg);
std::vector<CheckResult> suite_lambda(const SuiteConfig& cfg);
std::vector<CheckResult> suite_rz(const SuiteConfig& cfg);
std::vector<CheckResult> suite_rankin(const SuiteConfig& cfg);
std::vector<CheckResult> suite_fibers(const SuiteConfig& cfg);
std::vector<CheckResult> suite_cancellation(const SuiteConfig& cfg);
std::vector<CheckResult> suite_theorem(const SuiteConfig& cfg);
std::vector<CheckResult> suite_preswap(const SuiteConfig& cfg);

// every suite above, concatenated (the CLI's "all")
std::vector<CheckResult> suite_all(const SuiteConfig& cfg);

}  // namespace eisreg
