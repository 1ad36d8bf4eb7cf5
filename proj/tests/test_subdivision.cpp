#include "doctest.h"

#include "nfold/homology.hpp"
#include "nfold/subdivide.hpp"
#include "nfold/subdivision.hpp"

using namespace nfold;

namespace {

SdSimplex sd(std::initializer_list<const char*> sets) {
  SdSimplex s;
  for (const char* digits : sets) {
    unsigned v = 0;
    for (const char* c = digits; *c; ++c) v |= 1u << (*c - '0');
    s.push_back(v);
  }
  return s;
}

long long factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }

}  // namespace

TEST_CASE("membership predicates") {
  CHECK(membership(Member::Horn, sd({"0"}), 1, 0));
  CHECK_FALSE(membership(Member::Horn, sd({"1"}), 1, 0));
  CHECK_FALSE(membership(Member::Horn, sd({"01"}), 1, 0));
  CHECK_FALSE(membership(Member::Boundary, sd({"0", "02", "0123"}), 3));
  CHECK(membership(Member::Boundary, sd({"2"}), 3));
  CHECK(membership(Member::Full, sd({"0123"}), 3));
  // the only element of P Sd Λ^0[1]
  auto p1 = sd_delta_poset(1);
  auto pc = pieces(p1, 0);
  CHECK(members(pc.horn) == std::vector<int>{*p1.find(sd({"0"}))});
}

TEST_CASE("P Sd Δ[m] agrees with the subdivided nerve") {
  for (int m = 0; m <= 3; ++m) {
    auto p = sd_delta_poset(m);
    auto q = poset_of_nondegenerate(*subdivide(std_simplex(m)).sd);
    CHECK(p.poset.size() == q.size());
    CHECK(p.poset.covers().size() == q.covers().size());
    CHECK(p.poset.check());
  }
  CHECK(sd_delta_poset(1).poset.size() == 5);
  CHECK(sd_delta_poset(2).poset.size() == 25);
  for (int m = 1; m <= 3; ++m) CHECK(top_simplices(sd_delta_poset(m)).size() == factorial(m + 1) * factorial(m + 1));
}

TEST_CASE("decomposition into Out, Cen and Comp") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) {
      auto r = check_decomposition(sd_delta_poset(m), k);
      CHECK_MESSAGE(r.ok(), r.detail);
    }
  // m = 1, k = 0: Comp is ({1}) < ({1},{01})
  auto p = sd_delta_poset(1);
  auto pc = pieces(p, 0);
  CHECK(members(pc.comp) == std::vector<int>{*p.find(sd({"1"})), *p.find(sd({"1", "01"}))});
  // Cen has ([m]) as minimum
  auto p2 = sd_delta_poset(2);
  auto cen = members(pieces(p2, 1).cen);
  const int centre = *p2.find(sd({"012"}));
  for (int x : cen) CHECK(p2.poset.leq(centre, x));
}

TEST_CASE("retraction onto the horn") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) {
      auto p = sd_delta_poset(m);
      auto r = retraction(p, k);
      std::string why;
      CHECK_MESSAGE(r.check(&why), why);
      auto h = nat_transf_to_homotopy(r.alpha);
      CHECK_MESSAGE(h.ok, h.detail);
      CHECK(homology(*nerve(r.out)).same_groups(homology(*nerve(r.horn))));
    }
  Retraction r = retraction(sd_delta_poset(2), 1);
  CHECK(r.apply(sd({"01", "012"})) == sd({"01"}));
  CHECK(r.apply(sd({"0", "01", "012"})) == sd({"0", "01"}));
}

TEST_CASE("gluing of top simplices of Sd²Δ[m]") {
  for (int m = 1; m <= 3; ++m) {
    auto p = sd_delta_poset(m);
    auto g = check_gluing(p);
    CHECK_MESSAGE(g.ok(), g.detail);
  }
  // m = 1: the edge ({01}) -> ({0},{01}) shares its vertex ({0},{01}) with ({0}) -> ({0},{01})
  auto p = sd_delta_poset(1);
  Sd2Simplex V{*p.find(sd({"01"})), *p.find(sd({"0", "01"}))};
  auto n0 = glue_neighbor(p, V, 0);
  REQUIRE(n0);
  CHECK(*n0 == Sd2Simplex{*p.find(sd({"0"})), *p.find(sd({"0", "01"}))});
  auto n1 = glue_neighbor(p, V, 1);
  REQUIRE(n1);
  CHECK(*n1 == Sd2Simplex{*p.find(sd({"01"})), *p.find(sd({"1", "01"}))});
  // the face opposite the last vertex of ({0}) -> ({0},{01}) is on the boundary
  CHECK_FALSE(glue_neighbor(p, *n0, 1));
}

TEST_CASE("C^l classes of N Comp") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) {
      auto p = sd_delta_poset(m);
      auto c = check_compgluing(p, k);
      CHECK_MESSAGE(c.ok(), c.detail);
      long long total = 0;
      for (long long s : c.class_sizes) total += s;
      CHECK(total == c.comp_simplices);
      if (m == 1) {
        CHECK(c.comp_simplices == 1);
        CHECK(c.class_sizes[1] == 1);
      }
    }
}

TEST_CASE("central simplices form a ball") {
  for (int m = 1; m <= 3; ++m) {
    auto c = check_central(sd_delta_poset(m));
    CHECK_MESSAGE(c.ok(), c.detail);
    CHECK(c.central == factorial(m + 1) * factorial(m));
  }
}

TEST_CASE("chain colimits reconstruct the poset") {
  FinPoset chain = FinPoset::from_relation(3, [](int a, int b) { return a <= b; }, {"0", "1", "2"});
  for (auto* f : {&chain_colimit_cat, &chain_colimit_nerve}) {
    auto r = (*f)(chain, 2);
    CHECK_MESSAGE(r.ok, r.detail);
  }
  auto p2 = sd_delta_poset(2);
  auto c = chain_colimit_cat(p2.poset, 2);
  CHECK_MESSAGE(c.ok, c.detail);
  auto nv = chain_colimit_nerve(p2.poset, 2);
  CHECK_MESSAGE(nv.ok, nv.detail);
  auto d = chain_colimit_diagonal(sd_delta_poset(1).poset, 1, 2);
  CHECK_MESSAGE(d.ok, d.detail);
  auto cen = p2.poset.induced(members(pieces(p2, 0).cen));
  auto dc = chain_colimit_diagonal(cen, 2, 2);
  CHECK_MESSAGE(dc.ok, dc.detail);
  // an antichain fails the precondition
  auto anti = FinPoset::from_relation(2, [](int a, int b) { return a == b; }, {"a", "b"});
  CHECK_THROWS_AS(chain_colimit_cat(anti, 1), PreconditionError);
}

TEST_CASE("retract homology suite") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= m; ++k) {
      auto r = retract_homology_suite(m, k, 1);
      CHECK_MESSAGE(r.ok(), r.nerve.detail);
    }
  auto r = retract_homology_suite(1, 0, 2);
  REQUIRE(r.diagonal);
  CHECK_MESSAGE(r.ok(), r.diagonal->detail);
}
