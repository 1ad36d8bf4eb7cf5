#include "doctest.h"

#include "nfold/common.hpp"
#include "nfold/verification.hpp"

using namespace nfold;

TEST_CASE("pushout axiom in Cat") {
  // terminal B at m = 1: N P is contractible
  auto t = pushout_axiom(1, 1, 0, Fixture::Terminal);
  CHECK(t.j_equivalence.ok);
  CHECK(t.j_equivalence.cod.trivial());
  // identity L: N j' compares two contractible nerves
  auto h = pushout_axiom(1, 2, 1, Fixture::Horn);
  CHECK(h.j_equivalence.ok);
  CHECK(h.j_equivalence.dom.trivial());
  CHECK(h.j_equivalence.cod.trivial());
  CHECK(h.census.free_edges == std::vector<long long>{0});
  // [1] glued along the horn's only object
  auto r = pushout_axiom_cat(1, 0, Fixture::Interval);
  CHECK_MESSAGE(r.status == Status::Pass, r.witness);
  auto d = pushout_axiom(1, 1, 0, Fixture::Interval);
  CHECK(d.census.free_edges == std::vector<long long>{1});
  for (int k = 0; k <= 2; ++k) {
    auto c = pushout_axiom_cat(2, k, Fixture::Interval);
    CHECK_MESSAGE(c.status == Status::Pass, c.key() << ": " << c.witness);
  }
}

TEST_CASE("pushout axiom for double categories") {
  auto t = pushout_axiom_nfold(2, 1, 0, Fixture::Terminal);
  CHECK_MESSAGE(t.status == Status::Pass, t.witness);
  // free composites come in the shapes (a) and (b) at m = 1
  auto d = pushout_axiom(2, 1, 0, Fixture::Interval);
  CHECK(d.census.ok());
  CHECK(d.census.free_squares == 2);
  CHECK(d.census.form_a == 1);
  CHECK(d.census.form_b == 1);
  CHECK(d.alpha);
  CHECK(d.retraction);
  // m = 2: every free square is one of (a), (b), (c)
  auto e = pushout_axiom(2, 2, 1, Fixture::Interval);
  CHECK(e.census.ok());
  CHECK(e.census.form_c > 0);
  CHECK(e.decomposition);
  CHECK(e.nerve_pushout);
  CHECK(e.j_equivalence.ok);
  // B = c^2 δ_! N P Sd Λ^1[2]: j' is a homology equivalence and r̄ i = 1, but no
  // transformation i r̄ => 1_Q exists
  auto h = pushout_axiom(2, 2, 1, Fixture::Horn);
  CHECK(h.j_equivalence.ok);
  CHECK(h.i_equivalence.ok);
  CHECK(h.retraction);
  CHECK_FALSE(h.alpha);
  CHECK(h.alpha_detail.find("no transformation exists") != std::string::npos);
  CHECK_THROWS_AS(pushout_axiom_nfold(2, 3, 0, Fixture::Terminal), PreconditionError);
}

TEST_CASE("unit and counit comparisons") {
  for (int n = 1; n <= 2; ++n) {
    auto a = unit_counit_suite(std_simplex(0), "Δ[0]", n);
    CHECK_MESSAGE(a.status == Status::Pass, a.witness);
  }
  auto b = unit_counit_suite(std_simplex(1), "Δ[1]", 2);
  CHECK_MESSAGE(b.status == Status::Pass, b.witness);
  CHECK(b.find("cn-unit")->detail.find("union formula") != std::string::npos);
  auto c = unit_counit_suite(boundary(2), "∂Δ[2]", 2);
  CHECK_MESSAGE(c.status == Status::Pass, c.witness);
  CHECK(c.find("cn-unit")->detail.find("saturated") != std::string::npos);
}

TEST_CASE("budgets and failures become statuses") {
  GridEntry spin{0, "spin", 0, -1, -1, "", [] {
                   for (;;) budget_tick();
                   return CheckReport{};
                 }};
  auto r = run_check(spin, 0.05);
  CHECK(r.status == Status::SkippedBudget);
  GridEntry boom{0, "boom", 0, -1, -1, "", []() -> CheckReport { throw Error("broken"); }};
  auto f = run_check(boom, 1);
  CHECK(f.status == Status::Fail);
  CHECK(f.witness.find("broken") != std::string::npos);
}

TEST_CASE("default grid covers the criteria") {
  auto g = default_grid();
  std::vector<int> per(13, 0);
  for (const auto& e : g) ++per[e.criterion];
  for (int c : {1, 2, 3, 4, 5, 7, 8, 9, 10, 11, 12}) CHECK(per[c] > 0);
  CHECK(per[7] == 27);
  CHECK(per[8] == 15);
  // reports come back in grid order and are reproducible
  std::vector<GridEntry> two{g[0], g[1]};
  auto a = run_grid(two, 2, 60), b = run_grid(two, 1, 60);
  REQUIRE(a.size() == 2);
  CHECK(a[1].id == g[1].id);
  CHECK(a[0].witness == b[0].witness);
}
