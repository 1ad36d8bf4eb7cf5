#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nfold/catcore.hpp"
#include "nfold/multisimplicial.hpp"
#include "nfold/nfoldcat.hpp"
#include "nfold/simplicial_map.hpp"
#include "nfold/simplicial_set.hpp"

namespace nfold {

enum class Status { Pass, Fail, SkippedBudget };
std::string status_str(Status s);

struct Assertion {
  std::string name;
  bool ok = false;
  double seconds = 0;
  std::string detail;
};

struct CheckReport {
  std::string id;  // proposition id, e.g. "pushout-axiom-nfold"
  int n = 0, m = -1, k = -1;
  std::string fixture;
  Status status = Status::Fail;
  std::string witness;  // first failing assertion, or a summary on success
  std::vector<Assertion> assertions;
  double seconds = 0;

  const Assertion* find(const std::string& name) const;
  // id plus the parameters that are set, e.g. "pushout-axiom-cat n=1 m=2 k=0 terminal".
  std::string key() const;
};

// Per-check wall-clock budget: NFOLD_BUDGET_SECONDS when set, else fallback.
double budget_seconds(double fallback = 900);

// B in the pushout B <- c^n δ_! N P Sd Λ^k[m] -> c^n δ_! N P Sd Δ[m]: the
// terminal n-fold category, [1]^{⊠n} with the horn sent to its last corner,
// or the horn itself along the identity.
enum class Fixture { Terminal, Interval, Horn };
std::string fixture_str(Fixture b);
std::optional<Fixture> parse_fixture(const std::string& s);

// Free composites of Q = B ⊔ c^n δ_! N Out sorted into the shapes they are
// built from: in each direction an arrow of B followed by one of Out, and for
// n = 2 the squares (a) B then Out along direction 1, (b) B then Out along
// direction 0, (c) an (a)-composite followed along direction 0 by a square of
// Out. A square may be reached by several shapes.
struct FreeCensus {
  std::vector<long long> free_edges, covered_edges;  // per direction
  long long free_squares = 0, covered_squares = 0;
  long long form_a = 0, form_b = 0, form_c = 0;
  bool ok() const;
  std::string str() const;
};

// The pushout axiom for j : Λ^k[m] -> Δ[m] in n-fold categories (n = 1 is Cat).
// P = B ⊔ c^n δ_! N P Sd Δ[m] and Q = B ⊔ c^n δ_! N Out are computed by
// saturation; R = Comp ∪ Cen and S = Out ∩ R.
struct PushoutAxiomDetail {
  int n = 1, m = 1, k = 0;
  Fixture fixture = Fixture::Terminal;
  std::vector<long long> p_cells, q_cells;  // per shape
  bool decomposition = false;  // Q -> P and R -> P injective, jointly onto, meeting in S, P = Q ⊔_S R
  bool free_in_q = false;      // every free composite of P comes from Q
  std::string decomposition_detail;
  bool nerve_pushout = false;  // N^n P = N^n Q ⊔_{N^n S} N^n R
  std::string nerve_detail;
  EquivalenceReport j_equivalence;  // δ*N^n j'
  EquivalenceReport i_equivalence;  // δ*N^n (B -> Q)
  bool retraction = false;          // r̄ ∘ i = 1_B
  bool alpha = false;               // ᾱ : i r̄ => 1_Q is an n-fold transformation with the right ends
  std::string alpha_detail;
  FreeCensus census;
  double t_pushouts = 0, t_nerve = 0, t_equivalence = 0, t_alpha = 0;  // seconds per stage
};
PushoutAxiomDetail pushout_axiom(int n, int m, int k, Fixture b);

CheckReport pushout_axiom_cat(int m, int k, Fixture b);
// n = 2, m <= 2.
CheckReport pushout_axiom_nfold(int n, int m, int k, Fixture b);

// X -> δ*N^n c^n δ_! X, X -> Ex X at level 2, and the zigzag through δ*δ_!.
CheckReport unit_counit_suite(SSet X, const std::string& name, int n);

// Single checks run by the CLI; the built-in instances also sit in the grid.
CheckReport decomposition_report(int m, int k);
// Chain condition and the Cat colimit decomposition of an arbitrary poset.
CheckReport chain_condition_report(const FinPoset& t, int level, const std::string& name);
// EZ census on Δ[1,1], Δ[2,1], Δ[1,1,1] and `trials` random degeneracies.
CheckReport ez_report(int trials, unsigned seed);
CheckReport rho_report(SMSet Y, const std::string& name, MultiIndex caps, MultiIndex extent);
CheckReport lambda_report(NCat D, const std::string& name, MultiIndex caps, MultiIndex extent);
CheckReport nfold_axioms_report(const NFoldCategory& d, const std::string& name);

struct GridEntry {
  int criterion = 0;  // acceptance criterion the check belongs to
  std::string id;
  int n = 0, m = -1, k = -1;
  std::string fixture;
  std::function<CheckReport()> run;
};

// Every proposition check: n <= 2, m <= 2, and m = 3 for n = 1.
std::vector<GridEntry> default_grid(unsigned seed = 0);

// Runs the entries on `threads` workers, each under the budget; reports come
// back in entry order.
std::vector<CheckReport> run_grid(const std::vector<GridEntry>& grid, int threads, double budget);

// Runs e.run under a budget; BudgetExceeded gives SkippedBudget, any other
// exception a failure.
CheckReport run_check(const GridEntry& e, double budget);

}  // namespace nfold
