// Acceptance suite: one criterion per line, PASS/FAIL with the worst
// residual, its tolerance and the wall time.  Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "eisreg/suites.hpp"

using namespace eisreg;

namespace {

struct Outcome {
  bool pass;
  double worst;
  double tol;
  size_t checks;
};

Outcome evaluate(const std::vector<CheckResult>& checks) {
  Outcome o{true, 0.0, 0.0, checks.size()};
  for (const auto& c : checks) {
    if (!c.pass()) o.pass = false;
    if (c.residual > o.worst) {
      o.worst = c.residual;
      o.tol = c.tol;
    }
    if (o.tol == 0.0) o.tol = c.tol;
  }
  return o;
}

int failures = 0;

void report(int idx, const char* name, const Outcome& o, double seconds, double time_limit = -1) {
  bool pass = o.pass && (time_limit < 0 || seconds < time_limit);
  if (!pass) ++failures;
  std::printf("%s criterion %2d: %-34s checks=%-4zu worst=%.3e (tol %.1e) time=%.1fs%s\n",
              pass ? "PASS" : "FAIL", idx, name, o.checks, o.worst, o.tol, seconds,
              time_limit > 0 && seconds >= time_limit ? " [time limit exceeded]" : "");
  std::fflush(stdout);
}

template <class F>
std::pair<Outcome, double> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = evaluate(f());
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {o, dt};
}

}  // namespace

int main() {
  SuiteConfig cfg;  // pinned tolerances, seed 1

  {
    auto [o, dt] = timed([&] { return suite_hurwitz(cfg); });
    report(1, "Hurwitz functional equation", o, dt, 10.0);
  }
  {
    auto [o, dt] = timed([&] { return suite_constants(cfg); });
    report(2, "constant-term exactness", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_atkin_lehner(cfg); });
    report(3, "Atkin-Lehner G-H identity", o, dt, 60.0);
  }
  {
    auto [o, dt] = timed([&] { return suite_fourier(cfg); });
    report(4, "real-analytic Fourier expansions", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_lambda(cfg); });
    report(5, "Lambda(H) closed form + functional eq", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_rz(cfg); });
    report(6, "summation-exchange identity", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_rankin(cfg); });
    report(7, "Rankin-type integral lemma", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_fibers(cfg); });
    report(8, "fiber-integral lemmas (exact)", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_cancellation(cfg); });
    report(9, "B..F cancellation sweep", o, dt);
  }
  {
    auto [o, dt] = timed([&] { return suite_theorem(cfg); });
    report(10, "closed-form theorem, both paths", o, dt, 600.0);
  }
  {
    auto [o, dt] = timed([&] { return suite_preswap(cfg); });
    report(11, "pre-exchange integral at Re(s) << 0", o, dt);
  }

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
