#include "nfold/common.hpp"

namespace nfold {

namespace {
thread_local bool has_deadline = false;
thread_local std::chrono::steady_clock::time_point deadline;
thread_local unsigned ticks = 0;
}  // namespace

BudgetScope::BudgetScope(double seconds)
    : previous_(deadline), had_previous_(has_deadline) {
  auto d = std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(seconds));
  if (!has_deadline || d < deadline) deadline = d;
  has_deadline = true;
}

BudgetScope::~BudgetScope() {
  deadline = previous_;
  has_deadline = had_previous_;
}

void budget_tick() {
  if (!has_deadline) return;
  if ((++ticks & 0xfff) != 0) return;
  if (std::chrono::steady_clock::now() > deadline)
    throw BudgetExceeded("wall-clock budget exhausted");
}

}  // namespace nfold
