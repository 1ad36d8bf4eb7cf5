// Runs the default grid and prints one PASS/FAIL line per acceptance criterion.
// Runtimes are summed over the checks of a criterion, so they do not depend on
// how many workers ran them.
#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "nfold/verification.hpp"

using namespace nfold;

namespace {

struct Criterion {
  int id;
  const char* name;
  const char* tolerance;
  double limit;  // seconds
};

const Criterion kCriteria[] = {
    {1, "counting", "exact", 1},
    {2, "decomposition", "exact", 10},
    {3, "gluing", "exact", 60},
    {4, "chain conditions", "exact", 120},
    {5, "colimit decompositions", "exact isomorphism", 300},
    {6, "nerve/pushout commutation", "exact cellwise isomorphism", 120},
    {7, "pushout axiom (Cat)", "homology equal in all degrees", 600},
    {8, "pushout axiom (2-fold)", "homology equal in all degrees; exact census; exact r̄i = 1 and ᾱ", 1800},
    {9, "multisimplicial EZ", "exact", 60},
    {10, "Grothendieck construction", "homology below the truncation; exact λ = ρ", 600},
    {11, "unit/counit", "homology below the truncation", 600},
    {12, "adjunction oracle", "exact", 300},
};

}  // namespace

int main(int argc, char** argv) {
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "-v" || a == "--verbose") verbose = true;
    if (a.rfind("--threads=", 0) == 0) threads = std::max(1, std::stoi(a.substr(10)));
  }
  const double budget = budget_seconds();
  auto grid = default_grid(0);
  auto reports = run_grid(grid, threads, budget);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    int checks = 0, passed = 0;
    double seconds = 0;
    std::string witness;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const CheckReport& r = reports[i];
      if (c.id == 6) {
        // the nerve comparison inside every pushout-axiom check
        const Assertion* a = r.find("nerve-pushout");
        if (!a) continue;
        ++checks;
        seconds += a->seconds;
        if (a->ok) ++passed;
        else if (witness.empty()) witness = r.key() + ": " + a->detail;
        continue;
      }
      if (grid[i].criterion != c.id) continue;
      ++checks;
      seconds += r.seconds;
      if (r.status == Status::Pass) ++passed;
      else if (witness.empty()) witness = r.key() + ": " + status_str(r.status) + " (" + r.witness + ")";
      if (verbose)
        std::printf("    %-60s %-14s %8.2f s  %s\n", r.key().c_str(), status_str(r.status).c_str(), r.seconds,
                    r.witness.c_str());
    }
    const bool in_time = seconds <= c.limit;
    const bool ok = checks > 0 && passed == checks && in_time;
    if (!ok) ++failed;
    std::printf("%s  %2d %-26s %d/%d checks, %s, %.2f s (limit %.0f s)", ok ? "PASS" : "FAIL", c.id, c.name, passed,
                checks, c.tolerance, seconds, c.limit);
    if (!in_time) std::printf(" over time");
    if (!witness.empty()) std::printf("\n      first failure: %s", witness.c_str());
    std::printf("\n");
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
